#include "qfock/cli.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "qfock/errors.hpp"
#include "qfock/observables.hpp"
#include "qfock/parse.hpp"
#include "qfock/quadrature.hpp"
#include "qfock/serialization.hpp"
#include "qfock/slice_identities.hpp"
#include "qfock/states.hpp"
#include "qfock/verification.hpp"

namespace qfock {

namespace {

using nlohmann::ordered_json;

void validate(const RunConfig& config) {
    if (config.truncation < 8) throw std::invalid_argument("truncation must be at least 8");
    if (!(config.tolerance > 0.0)) throw std::invalid_argument("tolerance must be positive");
}

std::string csv_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

ordered_json json_quaternion(const Quaternion& q) {
    return ordered_json::array({q.w, q.x, q.y, q.z});
}

ordered_json json_deviation(double v) {
    if (std::isfinite(v)) return v;
    return "inf";
}

std::vector<std::string> split(std::string_view text, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t end = text.find(sep, start);
        if (end == std::string_view::npos) {
            if (start < text.size()) out.emplace_back(text.substr(start));
            break;
        }
        if (end > start) out.emplace_back(text.substr(start, end - start));
        start = end + 1;
    }
    return out;
}

using GridSpec = std::map<std::string, std::vector<std::string>>;

GridSpec parse_grid_spec(std::string_view spec) {
    GridSpec out;
    for (const std::string& field : split(spec, ';')) {
        const std::size_t eq = field.find('=');
        if (eq == std::string::npos || eq == 0) {
            throw BadGrid("grid field '" + field + "' is not key=value");
        }
        const std::string key = field.substr(0, eq);
        const auto values = split(field.substr(eq + 1), ',');
        if (values.empty()) throw BadGrid("grid key '" + key + "' has no values");
        out[key] = values;
    }
    return out;
}

std::vector<double> doubles_for(const GridSpec& spec, const std::string& key) {
    std::vector<double> out;
    const auto it = spec.find(key);
    if (it == spec.end()) return out;
    for (const std::string& v : it->second) {
        try {
            out.push_back(std::stod(v));
        } catch (const std::exception&) {
            throw BadGrid("grid value '" + v + "' for key '" + key + "' is not a number");
        }
    }
    return out;
}

double single_double(const GridSpec& spec, const std::string& key, double fallback) {
    const auto values = doubles_for(spec, key);
    if (values.empty()) return fallback;
    if (values.size() != 1) throw BadGrid("grid key '" + key + "' wants a single value");
    return values.front();
}

std::vector<Quaternion> axes_for(const GridSpec& spec) {
    std::vector<Quaternion> axes;
    const auto it = spec.find("axis");
    if (it == spec.end()) return axes;
    for (const std::string& text : it->second) {
        const Quaternion axis = parse_quaternion(text);
        if (std::fabs(abs(axis) - 1.0) > 1e-9 || std::fabs(axis.w) > 1e-12) {
            throw BadGrid("axis '" + text + "' is not a unit imaginary quaternion");
        }
        axes.push_back(axis);
    }
    return axes;
}

Quaternion on_slice(const Quaternion& axis, double magnitude, double angle) {
    return (Quaternion(std::cos(angle)) + axis * std::sin(angle)) * magnitude;
}

struct TableRow {
    ordered_json object;
    std::vector<std::string> cells;
};

CommandResult emit_table(const RunConfig& config, const std::string& sweep,
                         const std::vector<std::string>& columns, std::vector<TableRow> rows) {
    CommandResult result;
    if (config.format == OutputFormat::Csv) {
        std::ostringstream out;
        for (std::size_t c = 0; c < columns.size(); ++c) {
            out << (c ? "," : "") << columns[c];
        }
        out << "\n";
        for (const TableRow& row : rows) {
            for (std::size_t c = 0; c < row.cells.size(); ++c) {
                out << (c ? "," : "") << row.cells[c];
            }
            out << "\n";
        }
        result.output = out.str();
    } else {
        ordered_json out;
        out["schema"] = 1;
        out["command"] = "table";
        out["sweep"] = sweep;
        out["truncation"] = config.truncation;
        ordered_json jrows = ordered_json::array();
        for (TableRow& row : rows) jrows.push_back(std::move(row.object));
        out["rows"] = std::move(jrows);
        result.output = out.dump(2) + "\n";
    }
    return result;
}

CommandResult table_mandel_or_variances(const RunConfig& config, const std::string& sweep,
                                        const GridSpec& spec) {
    std::vector<double> ps = doubles_for(spec, "p");
    if (ps.empty()) throw BadGrid("sweep needs at least one p value");
    std::vector<double> thetas = doubles_for(spec, "theta");
    if (thetas.empty()) thetas.push_back(0.0);
    std::vector<Quaternion> axes = axes_for(spec);
    if (axes.empty()) axes.push_back(Quaternion::i());

    std::vector<TableRow> rows;
    for (const Quaternion& axis : axes) {
        for (const double theta : thetas) {
            for (const double pa : ps) {
                const Quaternion p = on_slice(axis, pa, theta);
                TableRow row;
                row.object["p_abs"] = pa;
                row.object["theta"] = theta;
                row.object["axis"] = json_quaternion(axis);
                row.cells = {csv_number(pa), csv_number(theta), format_quaternion(axis)};
                if (sweep == "mandel") {
                    const PhotonStats st = photon_stats(p, config.truncation);
                    const double sh2 = std::pow(std::sinh(pa), 2);
                    const double closed_mean = sh2;
                    const double closed_var = 2.0 * sh2 * (1.0 + sh2);
                    const double closed_mandel = 1.0 + 2.0 * sh2;
                    const double diff = std::max(
                        {std::fabs(st.mean_n - closed_mean), std::fabs(st.var_n - closed_var),
                         std::fabs(st.mandel_q - closed_mandel)});
                    row.object["mean_n"] = st.mean_n;
                    row.object["mean_n_closed"] = closed_mean;
                    row.object["var_n"] = st.var_n;
                    row.object["var_n_closed"] = closed_var;
                    row.object["mandel_q"] = st.mandel_q;
                    row.object["mandel_q_closed"] = closed_mandel;
                    row.object["max_abs_diff"] = diff;
                    for (const double v : {st.mean_n, closed_mean, st.var_n, closed_var,
                                           st.mandel_q, closed_mandel, diff}) {
                        row.cells.push_back(csv_number(v));
                    }
                } else {
                    const double product = squeeze_variance_product(p, config.truncation);
                    const double closed =
                        (1.0 + std::pow(std::sinh(2.0 * pa) * std::sin(theta), 2)) / 16.0;
                    row.object["product"] = product;
                    row.object["product_closed"] = closed;
                    row.object["abs_diff"] = std::fabs(product - closed);
                    row.cells.push_back(csv_number(product));
                    row.cells.push_back(csv_number(closed));
                    row.cells.push_back(csv_number(std::fabs(product - closed)));
                }
                rows.push_back(std::move(row));
            }
        }
    }

    const std::vector<std::string> columns =
        sweep == "mandel"
            ? std::vector<std::string>{"p_abs", "theta", "axis", "mean_n", "mean_n_closed",
                                       "var_n", "var_n_closed", "mandel_q", "mandel_q_closed",
                                       "max_abs_diff"}
            : std::vector<std::string>{"p_abs", "theta", "axis", "product", "product_closed",
                                       "abs_diff"};
    return emit_table(config, sweep, columns, std::move(rows));
}

CommandResult table_two_photon(const RunConfig& config, const GridSpec& spec) {
    std::vector<double> ps = doubles_for(spec, "p");
    if (ps.empty()) throw BadGrid("sweep needs at least one p value");
    std::vector<double> thetas = doubles_for(spec, "theta");
    if (thetas.empty()) thetas.push_back(0.0);
    std::vector<Quaternion> axes = axes_for(spec);
    if (axes.empty()) axes.push_back(Quaternion::i());
    const double qabs = single_double(spec, "qabs", 0.7);
    const double qtheta = single_double(spec, "qtheta", 0.4);

    const std::pair<ConjugatedOp, const char*> kinds[] = {
        {ConjugatedOp::Lower, "a"}, {ConjugatedOp::Raise, "adag"}, {ConjugatedOp::Number, "n"}};

    std::vector<TableRow> rows;
    for (const Quaternion& axis : axes) {
        const Quaternion q = on_slice(axis, qabs, qtheta);
        for (const double theta : thetas) {
            for (const double pa : ps) {
                const SlicePair sp = slice_pair(on_slice(axis, pa, theta), q);
                const SliceConjugator conj(sp, config.truncation);
                for (const auto& [which, label] : kinds) {
                    const ConjugationCheck chk = conj.two_photon(which);
                    TableRow row;
                    row.object["axis"] = json_quaternion(axis);
                    row.object["p_abs"] = pa;
                    row.object["theta_p"] = theta;
                    row.object["which"] = label;
                    row.object["block"] = chk.block;
                    row.object["max_dev"] = chk.max_dev;
                    row.cells = {format_quaternion(axis), csv_number(pa), csv_number(theta),
                                 label, std::to_string(chk.block), csv_number(chk.max_dev)};
                    rows.push_back(std::move(row));
                }
            }
        }
    }
    return emit_table(config, "two_photon",
                      {"axis", "p_abs", "theta_p", "which", "block", "max_dev"},
                      std::move(rows));
}

}  // namespace

CommandResult cmd_verify(const RunConfig& config) {
    validate(config);
    VerifyOptions options;
    options.truncation = config.truncation;
    options.tolerance = config.tolerance;
    options.seed = config.seed;
    const VerifyReport report = run_verification(options);

    CommandResult result;
    result.status = report.all_pass ? 0 : 1;
    if (config.format == OutputFormat::Csv) {
        std::ostringstream out;
        out << "name,deviation,tolerance,comparison,pass\n";
        for (const auto& c : report.checks) {
            out << c.name << "," << csv_number(c.deviation) << "," << csv_number(c.tolerance)
                << "," << (c.lower_bound ? ">" : "<=") << "," << (c.pass ? "1" : "0") << "\n";
        }
        result.output = out.str();
    } else {
        ordered_json out;
        out["schema"] = 1;
        out["command"] = "verify";
        out["config"] = {{"truncation", config.truncation},
                         {"tolerance", config.tolerance},
                         {"seed", config.seed}};
        ordered_json checks = ordered_json::array();
        for (const auto& c : report.checks) {
            ordered_json jc;
            jc["name"] = c.name;
            jc["deviation"] = json_deviation(c.deviation);
            jc["tolerance"] = c.tolerance;
            jc["comparison"] = c.lower_bound ? ">" : "<=";
            jc["pass"] = c.pass;
            if (!c.note.empty()) jc["note"] = c.note;
            checks.push_back(std::move(jc));
        }
        out["identities"] = std::move(checks);
        out["all_pass"] = report.all_pass;
        result.output = out.dump(2) + "\n";
    }
    return result;
}

CommandResult cmd_table(const RunConfig& config, std::string_view sweep,
                        std::string_view grid_spec) {
    validate(config);
    if (grid_spec.empty()) throw BadGrid("table sweeps need a nonempty grid");
    const GridSpec spec = parse_grid_spec(grid_spec);
    const std::string sweep_name(sweep);
    if (sweep_name == "mandel" || sweep_name == "variances") {
        return table_mandel_or_variances(config, sweep_name, spec);
    }
    if (sweep_name == "two_photon") {
        return table_two_photon(config, spec);
    }
    throw BadGrid("unknown sweep '" + sweep_name + "'");
}

CommandResult cmd_state(const RunConfig& config, std::string_view family,
                        std::string_view q_text, std::string_view p_text) {
    validate(config);
    const std::string name(family);
    const std::size_t n = config.truncation;

    FockVector state;
    ordered_json label;
    if (name == "coherent") {
        const Quaternion q = parse_quaternion(q_text);
        state = coherent(q, n).vector;
        label["q"] = json_quaternion(q);
    } else if (name == "pure_squeezed") {
        const Quaternion p = parse_quaternion(q_text);
        state = pure_squeezed(p, n);
        label["p"] = json_quaternion(p);
    } else if (name == "squeezed_SD" || name == "squeezed_DS") {
        const Quaternion q = parse_quaternion(q_text);
        if (p_text.empty()) throw std::invalid_argument("squeezed families need a p literal");
        const Quaternion p = parse_quaternion(p_text);
        state = name == "squeezed_SD" ? squeezed_sd(q, p, n) : squeezed_ds(q, p, n);
        label["q"] = json_quaternion(q);
        label["p"] = json_quaternion(p);
    } else if (name == "fermionic") {
        const Quaternion q = parse_quaternion(q_text);
        const FermionicPair pair = fermionic(q);
        label["q"] = json_quaternion(q);
        ordered_json out;
        out["schema"] = 1;
        out["command"] = "state";
        out["family"] = name;
        out["label"] = std::move(label);
        out["eta0"] = nlohmann::json::parse(to_json(pair.eta0));
        out["eta1"] = nlohmann::json::parse(to_json(pair.eta1));
        return {0, out.dump(2) + "\n"};
    } else {
        throw std::invalid_argument("unknown state family '" + name + "'");
    }

    ordered_json out;
    out["schema"] = 1;
    out["command"] = "state";
    out["family"] = name;
    out["truncation"] = n;
    out["label"] = std::move(label);
    out["state"] = nlohmann::json::parse(to_json(state));
    return {0, out.dump(2) + "\n"};
}

CommandResult cmd_ci(const RunConfig& config, std::string_view q_text,
                     std::string_view axis_text) {
    validate(config);
    const Quaternion q = parse_quaternion(q_text);
    const Quaternion axis = axis_text.empty() ? Quaternion::i() : parse_quaternion(axis_text);
    const CiValue ci = ci_series(q, axis);

    ordered_json out;
    out["schema"] = 1;
    out["command"] = "ci";
    out["q"] = json_quaternion(q);
    out["axis"] = json_quaternion(axis);
    out["value"] = json_quaternion(ci.value);
    out["r"] = ci.r;
    out["ci_axis"] = json_quaternion(ci.axis);
    out["terms_used"] = ci.terms_used;
    out["antisymmetry_dev"] = abs(conj(ci.value) + ci.value);
    out["magnitude"] = ci.r;
    out["bounded"] = ci.r <= 1.0 + 1e-12;
    return {0, out.dump(2) + "\n"};
}

CommandResult cmd_resolution(const RunConfig& config, std::string_view grid_spec) {
    validate(config);
    const GridSpec spec = grid_spec.empty() ? GridSpec{} : parse_grid_spec(grid_spec);
    const auto nr = static_cast<std::size_t>(single_double(spec, "nr", 48));
    const auto ntheta = static_cast<std::size_t>(single_double(spec, "ntheta", 16));
    const auto nphi = static_cast<std::size_t>(single_double(spec, "nphi", 12));
    const auto npsi = static_cast<std::size_t>(single_double(spec, "npsi", 16));
    const double rmax = single_double(spec, "rmax", 16.0);
    const auto nmax = static_cast<std::size_t>(single_double(spec, "nmax", 6));

    const QuadratureGrid grid =
        QuadratureGrid::make(nr, ntheta, nphi, npsi, rmax, MeasureVariant::Plain);
    const ResolutionResult res = resolution_of_identity(nmax, grid, config.truncation);

    ordered_json out;
    out["schema"] = 1;
    out["command"] = "resolution";
    out["grid"] = {{"nr", nr},     {"ntheta", ntheta}, {"nphi", nphi},
                   {"npsi", npsi}, {"rmax", rmax},     {"nmax", nmax}};
    out["truncation"] = config.truncation;
    ordered_json devs = ordered_json::array();
    for (std::size_t m = 0; m <= nmax; ++m) {
        ordered_json row = ordered_json::array();
        for (std::size_t k = 0; k <= nmax; ++k) {
            const Quaternion want = m == k ? Quaternion::one() : Quaternion::zero();
            row.push_back(abs(res.block(m, k) - want));
        }
        devs.push_back(std::move(row));
    }
    out["entry_deviations"] = std::move(devs);
    out["max_dev"] = res.max_dev;
    out["frobenius_dev"] = res.frobenius_dev;
    return {0, out.dump(2) + "\n"};
}

}  // namespace qfock
