#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qfock/cli.hpp"
#include "qfock/errors.hpp"

namespace {

qfock::OutputFormat parse_format(const std::string& text) {
    if (text == "json") return qfock::OutputFormat::Json;
    if (text == "csv") return qfock::OutputFormat::Csv;
    throw CLI::ValidationError("--format", "must be json or csv");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"qfock: quaternionic Fock-space toolkit"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    std::size_t truncation = 64;
    double tolerance = 1e-7;
    std::string format = "json";
    std::uint64_t seed = 1;
    app.add_option("--truncation", truncation, "Fock truncation order (>= 8)")
        ->capture_default_str();
    app.add_option("--tol", tolerance,
                   "identity tolerance; only ever tightens an identity's own bound")
        ->capture_default_str();
    app.add_option("--format", format, "output format: json or csv")->capture_default_str();
    app.add_option("--seed", seed, "seed for randomized sweeps")->capture_default_str();

    auto* verify = app.add_subcommand("verify", "run the named-identity suite");

    std::string sweep, grid;
    auto* table = app.add_subcommand(
        "table", "closed-form vs measured sweep (CSV columns are fixed per sweep)");
    table->add_option("sweep", sweep, "one of: mandel, variances, two_photon")->required();
    table->add_option("--grid", grid,
                      "grid spec key=v1,v2;... with keys p, theta, axis "
                      "(plus qabs, qtheta for two_photon)");

    std::string family, q_text, p_text;
    auto* state = app.add_subcommand("state", "emit a state's coefficients and norm");
    state
        ->add_option("family", family,
                     "coherent | pure_squeezed | squeezed_SD | squeezed_DS | fermionic")
        ->required();
    state->add_option("param", q_text, "quaternion literal a+bi+cj+dk (q, or p for pure_squeezed)")
        ->required();
    state->add_option("p", p_text, "squeeze parameter literal for the squeezed families");

    std::string ci_q, ci_axis;
    auto* ci = app.add_subcommand("ci", "evaluate the conjugated-axis series");
    ci->add_option("q", ci_q, "quaternion literal")->required();
    ci->add_option("--axis", ci_axis, "unit imaginary axis literal (default i)");

    std::string res_grid;
    auto* resolution =
        app.add_subcommand("resolution", "identity-resolution deviations over a grid");
    resolution->add_option(
        "--grid", res_grid, "grid spec keys nr, ntheta, nphi, npsi, rmax, nmax (all optional)");

    CLI11_PARSE(app, argc, argv);

    qfock::RunConfig config;
    config.truncation = truncation;
    config.tolerance = tolerance;
    config.seed = seed;
    try {
        config.format = parse_format(format);
        qfock::CommandResult result;
        if (verify->parsed()) {
            result = qfock::cmd_verify(config);
        } else if (table->parsed()) {
            result = qfock::cmd_table(config, sweep, grid);
        } else if (state->parsed()) {
            result = qfock::cmd_state(config, family, q_text, p_text);
        } else if (ci->parsed()) {
            result = qfock::cmd_ci(config, ci_q, ci_axis);
        } else if (resolution->parsed()) {
            result = qfock::cmd_resolution(config, res_grid);
        }
        std::fputs(result.output.c_str(), stdout);
        return result.status;
    } catch (const qfock::ParseError& e) {
        std::cerr << "parse error at column " << e.column() << ": " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
