#ifndef QFOCK_VERIFICATION_HPP
#define QFOCK_VERIFICATION_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace qfock {

struct VerifyOptions {
    std::size_t truncation = 64;
    double tolerance = 1e-7;  // only ever tightens an identity's own bound
    std::uint64_t seed = 1;
    std::size_t samples = 2000;  // randomized identities
};

/// One named identity with its measured deviation. Most identities pass
/// when deviation <= tolerance; witness identities (lower_bound = true)
/// pass when the measured value exceeds the threshold instead.
struct IdentityCheck {
    std::string name;
    double deviation = 0.0;
    double tolerance = 0.0;
    bool lower_bound = false;
    bool pass = false;
    std::string note;  // set when the identity could not be evaluated
};

struct VerifyReport {
    VerifyOptions options;
    std::vector<IdentityCheck> checks;
    bool all_pass = false;
};

/// Run the full named-identity suite at the given truncation. Identities
/// that cannot be evaluated at the requested truncation are reported as
/// failures with a note.
VerifyReport run_verification(const VerifyOptions& options);

}  // namespace qfock

#endif
