#ifndef QFOCK_STATES_HPP
#define QFOCK_STATES_HPP

#include <cstddef>

#include "qfock/fock_operator.hpp"
#include "qfock/fock_vector.hpp"
#include "qfock/quaternion.hpp"

namespace qfock {

/// Coherent state with its quaternion label.
struct CoherentState {
    Quaternion label;
    FockVector vector;
};

/// Squeeze parameter together with its polar data (magnitude and phase
/// direction) as used by the conjugation formulas.
struct SqueezeParams {
    Quaternion p;
    PolarForm polar;
};

SqueezeParams make_squeeze_params(const Quaternion& p);

/// Coefficients exp(-|q|^2/2) q^n / sqrt(n!). Unit norm up to the dropped
/// tail; throws TruncationTooSmall when that tail mass exceeds 1e-12.
CoherentState coherent(const Quaternion& q, std::size_t n);

/// exp(q . adag - conj(q) . a); unitary, maps the vacuum onto coherent(q).
FockOperator displacement(const Quaternion& q, std::size_t n);

/// exp((p . adag^2 - conj(p) . a^2)/2); unitary, inverse is the negated
/// parameter.
FockOperator squeeze(const Quaternion& p, std::size_t n);

/// Squeeze built from the su(1,1) generator combination
/// exp(p . K+ - conj(p) . K-); same matrix as squeeze().
FockOperator squeeze_su11_form(const Quaternion& p, std::size_t n);

/// squeeze(p) applied to the vacuum. Only even levels are populated.
FockVector pure_squeezed(const Quaternion& p, std::size_t n);

/// squeeze(p) applied to coherent(q): S(p) D(q) vacuum.
FockVector squeezed_sd(const Quaternion& q, const Quaternion& p, std::size_t n);

/// displacement(q) applied to pure_squeezed(p): D(q) S(p) vacuum. Differs
/// from squeezed_sd for noncommuting parameters.
FockVector squeezed_ds(const Quaternion& q, const Quaternion& p, std::size_t n);

struct Su11Generators {
    FockOperator k_plus;   // adag^2 / 2
    FockOperator k_minus;  // a^2 / 2
    FockOperator k_zero;   // (adag a + 1/2) / 2
};

Su11Generators su11_generators(std::size_t n);

/// Two-level states obtained by exponentiating the displacement generator
/// on the space spanned by levels 0 and 1.
struct FermionicPair {
    FockVector eta0;
    FockVector eta1;
};

/// eta0 = cos|q| |0> + (q/|q|) sin|q| . |1>,
/// eta1 = cos|q| |1> - (conj(q)/|q|) sin|q| . |0>.
/// The q = 0 limit is taken exactly.
FermionicPair fermionic(const Quaternion& q);

}  // namespace qfock

#endif
