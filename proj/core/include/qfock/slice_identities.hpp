#ifndef QFOCK_SLICE_IDENTITIES_HPP
#define QFOCK_SLICE_IDENTITIES_HPP

#include <cstddef>

#include "qfock/fock_operator.hpp"
#include "qfock/quaternion.hpp"

namespace qfock {

/// Pair of parameters on one commutative slice, with the unit phases
/// exp(axis * theta) used by the closed-form conjugation identities.
struct SlicePair {
    Quaternion axis;  // shared unit imaginary direction
    Quaternion p;     // squeeze parameter
    Quaternion q;     // displacement parameter
    Quaternion phase_p() const { return unit_phase(p); }
    Quaternion phase_q() const { return unit_phase(q); }
};

/// Validate that p and q lie on a common slice and package them.
/// Throws SliceMismatch otherwise; real parameters fit every slice.
SlicePair slice_pair(const Quaternion& p, const Quaternion& q);

/// Which ladder expression is conjugated.
enum class ConjugatedOp { Lower, Raise, Number };

/// One verified conjugation identity: the numerically conjugated operator,
/// the closed-form right-hand side, and their deviation on the block where
/// the truncated conjugation has converged.
struct ConjugationCheck {
    FockOperator lhs;
    FockOperator rhs;
    double max_dev = 0.0;
    std::size_t block = 0;
};

/// Precomputed S(p), D(q) products for repeated conjugation checks at one
/// grid point; the exponentials are built once at construction.
class SliceConjugator {
public:
    SliceConjugator(const SlicePair& sp, std::size_t n);

    /// adj(D) adj(S) A S D against the closed form valid on a slice.
    ConjugationCheck two_photon(ConjugatedOp which) const;
    /// adj(S) adj(D) A D S against the closed form valid on a slice.
    ConjugationCheck squeezed_coherent(ConjugatedOp which) const;

    std::size_t block() const { return block_; }

private:
    SlicePair sp_;
    std::size_t n_;
    std::size_t block_;
    FockOperator sd_;  // S D
    FockOperator ds_;  // D S
};

/// One-shot wrappers around SliceConjugator.
ConjugationCheck two_photon_conjugation(const SlicePair& sp, ConjugatedOp which, std::size_t n);
ConjugationCheck squeezed_coherent_conjugation(const SlicePair& sp, ConjugatedOp which,
                                               std::size_t n);

/// Deviation of the two-photon closed form for arbitrary (p, q), slice or
/// not. Off-slice parameters expose the obstruction the closed form has.
double two_photon_form_deviation(const Quaternion& p, const Quaternion& q, ConjugatedOp which,
                                 std::size_t n);

/// Off-slice parameter pair on which the two-photon closed form fails by
/// more than 1e-3 while the matched on-slice control passes.
struct ObstructionWitness {
    Quaternion p;
    Quaternion q;
    double dev = 0.0;
};

ObstructionWitness noncommutativity_witness(std::size_t n);

/// Largest top-left block on which conjugation by the squeeze/displacement
/// exponentials at truncation n is free of edge leakage. Empirical bound,
/// validated against doubled truncations in the test suite.
std::size_t conjugation_safe_block(std::size_t n, double p_abs, double q_abs);

}  // namespace qfock

#endif
