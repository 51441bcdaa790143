#ifndef QFOCK_CLI_HPP
#define QFOCK_CLI_HPP

#include <cstdint>
#include <string>
#include <string_view>

namespace qfock {

enum class OutputFormat { Json, Csv };

/// Shared command configuration. Truncation at least 8, tolerance positive.
struct RunConfig {
    std::size_t truncation = 64;
    double tolerance = 1e-7;
    OutputFormat format = OutputFormat::Json;
    std::uint64_t seed = 1;
};

struct CommandResult {
    int status = 0;
    std::string output;
};

/// Run the named-identity suite; nonzero status when any identity fails.
CommandResult cmd_verify(const RunConfig& config);

/// Closed-form vs measured sweep tables. sweep is one of "mandel",
/// "variances", "two_photon"; the grid spec is "key=v1,v2;key=..." with
/// keys p, theta, axis (and qabs, qtheta for two_photon).
CommandResult cmd_table(const RunConfig& config, std::string_view sweep,
                        std::string_view grid_spec);

/// Emit the coefficient vector and norm of one state. family is one of
/// "coherent", "pure_squeezed", "squeezed_SD", "squeezed_DS", "fermionic";
/// q_text/p_text are quaternion literals (p only for the squeezed families).
CommandResult cmd_state(const RunConfig& config, std::string_view family,
                        std::string_view q_text, std::string_view p_text);

/// Evaluate the conjugated-axis series at q against the given axis literal.
CommandResult cmd_ci(const RunConfig& config, std::string_view q_text,
                     std::string_view axis_text);

/// Identity-resolution deviation table over a quadrature grid; grid spec
/// keys nr, ntheta, nphi, npsi, rmax, nmax (all optional).
CommandResult cmd_resolution(const RunConfig& config, std::string_view grid_spec);

}  // namespace qfock

#endif
