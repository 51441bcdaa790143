#ifndef QFOCK_FOCK_VECTOR_HPP
#define QFOCK_FOCK_VECTOR_HPP

#include <cstddef>
#include <vector>

#include "qfock/quaternion.hpp"

namespace qfock {

/// Tag for the fixed orthonormal basis the left multiplication is built on.
enum class Basis : unsigned char { Monomial = 0 };

/// Element of the truncated right quaternionic Hilbert space: quaternion
/// coefficients over the fixed basis, scalars acting from the right.
class FockVector {
public:
    FockVector() = default;
    explicit FockVector(std::size_t n, Basis basis = Basis::Monomial)
        : c_(n), basis_(basis) {}
    FockVector(std::vector<Quaternion> coeffs, Basis basis = Basis::Monomial)
        : c_(std::move(coeffs)), basis_(basis) {}

    /// Basis state at level k (coefficient one at k, zero elsewhere).
    static FockVector basis_state(std::size_t n, std::size_t k);

    std::size_t size() const { return c_.size(); }
    Basis basis() const { return basis_; }

    Quaternion& operator[](std::size_t n) { return c_[n]; }
    const Quaternion& operator[](std::size_t n) const { return c_[n]; }

    const std::vector<Quaternion>& coeffs() const { return c_; }

    FockVector& operator+=(const FockVector& r);
    FockVector& operator-=(const FockVector& r);

private:
    std::vector<Quaternion> c_;
    Basis basis_ = Basis::Monomial;
};

FockVector operator+(FockVector a, const FockVector& b);
FockVector operator-(FockVector a, const FockVector& b);

/// <f|g> = sum conj(c_n(f)) c_n(g); conjugate-linear in f, linear in g.
Quaternion inner(const FockVector& f, const FockVector& g);

double norm(const FockVector& f);

/// Basis-dependent left action: coefficient n of the result is q * c_n.
FockVector left_scale(const Quaternion& q, const FockVector& v);

/// Right scalar action: coefficient n is c_n * q.
FockVector right_scale(const FockVector& v, const Quaternion& q);

/// Partial sum sum_{n < n_terms} q^n conj(p)^n / n! of the reproducing
/// kernel series; agrees with star_exp(q, conj(p)) as n_terms grows.
Quaternion bargmann_kernel(const Quaternion& q, const Quaternion& p, std::size_t n_terms);

}  // namespace qfock

#endif
