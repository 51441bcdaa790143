#ifndef QFOCK_FOCK_OPERATOR_HPP
#define QFOCK_FOCK_OPERATOR_HPP

#include <cstddef>
#include <vector>

#include "qfock/complex_matrix.hpp"
#include "qfock/fock_vector.hpp"
#include "qfock/quaternion.hpp"

namespace qfock {

/// Right-linear operator on the truncated space: an NxN quaternion matrix
/// acting on coefficient vectors, (A v)_k = sum_n A_{kn} c_n.
class FockOperator {
public:
    FockOperator() = default;
    explicit FockOperator(std::size_t n, Basis basis = Basis::Monomial)
        : n_(n), a_(n * n), basis_(basis) {}

    static FockOperator identity(std::size_t n);

    std::size_t dim() const { return n_; }
    Basis basis() const { return basis_; }

    Quaternion& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    const Quaternion& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

    FockOperator& operator+=(const FockOperator& r);
    FockOperator& operator-=(const FockOperator& r);
    FockOperator& operator*=(double s);

private:
    std::size_t n_ = 0;
    std::vector<Quaternion> a_;
    Basis basis_ = Basis::Monomial;
};

FockOperator operator+(FockOperator a, const FockOperator& b);
FockOperator operator-(FockOperator a, const FockOperator& b);
FockOperator operator*(FockOperator a, double s);
FockOperator operator*(double s, FockOperator a);

/// Lowering operator: level n maps to sqrt(n) at level n-1; kills level 0.
FockOperator ladder_a(std::size_t n);
/// Raising operator: level n maps to sqrt(n+1) at level n+1. The top level
/// maps to zero, an artifact of the truncation.
FockOperator ladder_adag(std::size_t n);
/// Diagonal occupation-number operator diag(0..n-1).
FockOperator number_op(std::size_t n);
/// number_op + identity/2.
FockOperator hamiltonian(std::size_t n);

FockOperator compose(const FockOperator& a, const FockOperator& b);
FockOperator operator*(const FockOperator& a, const FockOperator& b);
FockOperator adjoint(const FockOperator& a);
FockOperator commutator(const FockOperator& a, const FockOperator& b);
FockOperator anticommutator(const FockOperator& a, const FockOperator& b);

FockVector apply(const FockOperator& a, const FockVector& v);

/// Left scaling (q . A): entries q * A_{kn}.
FockOperator left_scale(const Quaternion& q, const FockOperator& a);
/// Right scaling (A . q): entries A_{kn} * q.
FockOperator right_scale(const FockOperator& a, const Quaternion& q);

/// Largest quaternion-entry magnitude.
double max_abs(const FockOperator& a);
/// max_abs of a - b restricted to the top-left k x k block.
double block_dev(const FockOperator& a, const FockOperator& b, std::size_t k);
/// Frobenius norm over quaternion entries.
double frobenius(const FockOperator& a);

/// 2Nx2N complex matrix whose 2x2 blocks are the entrywise quaternion
/// images; multiplicative and adjoint-preserving.
struct EmbeddedOperator {
    ComplexMatrix m;
    Basis basis = Basis::Monomial;
    std::size_t dim() const { return m.rows() / 2; }
};

EmbeddedOperator embed(const FockOperator& a);
/// Inverse of embed; throws NotInImage when a block is farther than tol
/// from the quaternion image shape.
FockOperator unembed(const EmbeddedOperator& e, double tol = 1e-10);

/// Matrix exponential: embedded, exponentiated with the scaled Taylor
/// kernel, and mapped back. The image is closed under the exponential, so
/// unembedding is guarded only against numerical drift (1e-8).
FockOperator expm(const FockOperator& a);

bool is_unitary(const FockOperator& a, double tol);
bool is_antihermitian(const FockOperator& a, double tol);

}  // namespace qfock

#endif
