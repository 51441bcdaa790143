#ifndef QFOCK_OBSERVABLES_HPP
#define QFOCK_OBSERVABLES_HPP

#include <cstddef>
#include <optional>
#include <utility>

#include "qfock/fock_operator.hpp"
#include "qfock/fock_vector.hpp"
#include "qfock/quaternion.hpp"

namespace qfock {

/// <A> = <v|A|v> for a (unit-norm) state.
Quaternion expectation(const FockVector& v, const FockOperator& a);

/// First and second moments of an operator on a state. The variance is
/// formed only when the mean is real or both moments share one slice;
/// otherwise the raw moments stand on their own.
struct ExpectationReport {
    Quaternion mean;
    Quaternion second_moment;
    std::optional<Quaternion> variance;

    ComplexMatrix2 mean_matrix() const { return to_matrix(mean); }
    ComplexMatrix2 second_moment_matrix() const { return to_matrix(second_moment); }
};

ExpectationReport moments(const FockVector& v, const FockOperator& a);

/// Quadrature pair X = (a + adag)/2, Y = -(axis/2).(a - adag); both
/// self-adjoint, [X,Y] = (axis/2).I away from the truncation edge.
/// Throws BadAxis unless axis is a unit imaginary quaternion.
std::pair<FockOperator, FockOperator> quadratures(std::size_t n, const Quaternion& axis);

/// Position/momentum pair Q = (a + adag)/sqrt 2, P = -(axis/sqrt 2).(a - adag).
std::pair<FockOperator, FockOperator> position_momentum(std::size_t n, const Quaternion& axis);

/// Product of the X and Y variances on pure_squeezed(p); equals
/// (1 + sinh^2(2|p|) sin^2 theta)/16 with theta the polar angle of p.
double squeeze_variance_product(const Quaternion& p, std::size_t n);

/// Variances of the half-angle rotated quadratures U, V on
/// pure_squeezed(p). The standard-deviation product is 1/4 while the two
/// deviations differ for p != 0.
struct UvReport {
    double du_sq = 0.0;
    double dv_sq = 0.0;
    double product = 0.0;  // sqrt(du_sq * dv_sq)
    Quaternion mean_u;
    Quaternion mean_v;
};

UvReport rotated_quadratures(const Quaternion& p, std::size_t n);
double rotated_quadrature_product(const Quaternion& p, std::size_t n);

/// Occupation statistics of pure_squeezed(p). mandel_q = var/mean - 1;
/// throws MeanZero at p = 0 where the defining ratio is 0/0.
struct PhotonStats {
    double mean_n = 0.0;
    double var_n = 0.0;
    double mandel_q = 0.0;
};

PhotonStats photon_stats(const Quaternion& p, std::size_t n);

/// Value of the conjugated-axis series exp(-|q|^2) sum conj(q)^n axis q^n / n!.
/// Anti-self-conjugate with magnitude at most one; decomposes as r * axis.
struct CiValue {
    Quaternion value;
    double r = 0.0;
    Quaternion axis;
    std::size_t terms_used = 0;
};

CiValue ci_series(const Quaternion& q, const Quaternion& axis);

/// Uncertainty data of Q, P on coherent(q): the variance product, its gap
/// from 1/4 (bounded by |q|^2), and half the commutator expectation
/// magnitude (r/2 in terms of the series value above).
struct HeisenbergReport {
    double var_q = 0.0;
    double var_p = 0.0;
    double product = 0.0;
    double bound_gap = 0.0;
    double commutator_half = 0.0;
};

HeisenbergReport heisenberg_bounds(const Quaternion& q, std::size_t n);

/// Squeezing verdict for a state against a canonical pair (A, B) with
/// [A,B] = axis . C, C self-adjoint. Throws NotCanonicalPair when the
/// commutator lacks that form on the safe block.
struct SqueezingVerdict {
    bool squeezed = false;
    bool ideally_squeezed = false;
    double var_a = 0.0;
    double var_b = 0.0;
    double threshold = 0.0;  // |<[A,B]>| / 2
};

SqueezingVerdict is_squeezed(const FockVector& v, const FockOperator& a, const FockOperator& b);

}  // namespace qfock

#endif
