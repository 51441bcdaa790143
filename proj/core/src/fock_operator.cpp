#include "qfock/fock_operator.hpp"

#include <cmath>
#include <string>

namespace qfock {

namespace {

void require_compatible(const FockOperator& a, const FockOperator& b) {
    if (a.dim() != b.dim()) {
        throw DimensionMismatch("operator dimensions differ: " + std::to_string(a.dim()) +
                                " vs " + std::to_string(b.dim()));
    }
    if (a.basis() != b.basis()) throw BasisMismatch("operators tagged with different bases");
}

}  // namespace

FockOperator FockOperator::identity(std::size_t n) {
    FockOperator m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Quaternion::one();
    return m;
}

FockOperator& FockOperator::operator+=(const FockOperator& r) {
    require_compatible(*this, r);
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += r.a_[i];
    return *this;
}

FockOperator& FockOperator::operator-=(const FockOperator& r) {
    require_compatible(*this, r);
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= r.a_[i];
    return *this;
}

FockOperator& FockOperator::operator*=(double s) {
    for (auto& q : a_) q *= s;
    return *this;
}

FockOperator operator+(FockOperator a, const FockOperator& b) { return a += b; }
FockOperator operator-(FockOperator a, const FockOperator& b) { return a -= b; }
FockOperator operator*(FockOperator a, double s) { return a *= s; }
FockOperator operator*(double s, FockOperator a) { return a *= s; }

FockOperator ladder_a(std::size_t n) {
    FockOperator m(n);
    for (std::size_t level = 1; level < n; ++level) {
        m(level - 1, level) = Quaternion(std::sqrt(static_cast<double>(level)));
    }
    return m;
}

FockOperator ladder_adag(std::size_t n) {
    FockOperator m(n);
    for (std::size_t level = 0; level + 1 < n; ++level) {
        m(level + 1, level) = Quaternion(std::sqrt(static_cast<double>(level + 1)));
    }
    return m;
}

FockOperator number_op(std::size_t n) {
    FockOperator m(n);
    for (std::size_t level = 0; level < n; ++level) {
        m(level, level) = Quaternion(static_cast<double>(level));
    }
    return m;
}

FockOperator hamiltonian(std::size_t n) {
    FockOperator m = number_op(n);
    for (std::size_t level = 0; level < n; ++level) m(level, level).w += 0.5;
    return m;
}

FockOperator compose(const FockOperator& a, const FockOperator& b) {
    require_compatible(a, b);
    const std::size_t n = a.dim();
    FockOperator c(n, a.basis());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const Quaternion& s = a(i, k);
            if (s.w == 0.0 && s.x == 0.0 && s.y == 0.0 && s.z == 0.0) continue;
            for (std::size_t j = 0; j < n; ++j) c(i, j) += s * b(k, j);
        }
    }
    return c;
}

FockOperator operator*(const FockOperator& a, const FockOperator& b) { return compose(a, b); }

FockOperator adjoint(const FockOperator& a) {
    const std::size_t n = a.dim();
    FockOperator c(n, a.basis());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) c(j, i) = conj(a(i, j));
    return c;
}

FockOperator commutator(const FockOperator& a, const FockOperator& b) {
    return compose(a, b) - compose(b, a);
}

FockOperator anticommutator(const FockOperator& a, const FockOperator& b) {
    return compose(a, b) + compose(b, a);
}

FockVector apply(const FockOperator& a, const FockVector& v) {
    if (a.dim() != v.size()) {
        throw DimensionMismatch("operator dimension " + std::to_string(a.dim()) +
                                " does not match vector size " + std::to_string(v.size()));
    }
    if (a.basis() != v.basis()) throw BasisMismatch("operator and vector bases differ");
    FockVector r(v.size(), v.basis());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        Quaternion s;
        for (std::size_t k = 0; k < a.dim(); ++k) s += a(i, k) * v[k];
        r[i] = s;
    }
    return r;
}

FockOperator left_scale(const Quaternion& q, const FockOperator& a) {
    const std::size_t n = a.dim();
    FockOperator c(n, a.basis());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) c(i, j) = q * a(i, j);
    return c;
}

FockOperator right_scale(const FockOperator& a, const Quaternion& q) {
    const std::size_t n = a.dim();
    FockOperator c(n, a.basis());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) c(i, j) = a(i, j) * q;
    return c;
}

double max_abs(const FockOperator& a) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) m = std::max(m, abs(a(i, j)));
    return m;
}

double block_dev(const FockOperator& a, const FockOperator& b, std::size_t k) {
    require_compatible(a, b);
    double m = 0.0;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) m = std::max(m, abs(a(i, j) - b(i, j)));
    return m;
}

double frobenius(const FockOperator& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) s += norm_sq(a(i, j));
    return std::sqrt(s);
}

EmbeddedOperator embed(const FockOperator& a) {
    const std::size_t n = a.dim();
    EmbeddedOperator e{ComplexMatrix(2 * n, 2 * n), a.basis()};
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const ComplexMatrix2 b = to_matrix(a(i, j));
            e.m(2 * i, 2 * j) = b.m00;
            e.m(2 * i, 2 * j + 1) = b.m01;
            e.m(2 * i + 1, 2 * j) = b.m10;
            e.m(2 * i + 1, 2 * j + 1) = b.m11;
        }
    }
    return e;
}

FockOperator unembed(const EmbeddedOperator& e, double tol) {
    if (e.m.rows() != e.m.cols() || e.m.rows() % 2 != 0) {
        throw NotInImage("embedded matrix must be square with even dimension");
    }
    const std::size_t n = e.dim();
    FockOperator a(n, e.basis);
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const ComplexMatrix2 b{e.m(2 * i, 2 * j), e.m(2 * i, 2 * j + 1),
                                   e.m(2 * i + 1, 2 * j), e.m(2 * i + 1, 2 * j + 1)};
            worst = std::max(worst, std::max(std::abs(b.m11 - std::conj(b.m00)),
                                             std::abs(b.m10 + std::conj(b.m01))));
            a(i, j) = Quaternion(0.5 * (b.m00.real() + b.m11.real()),
                                 0.5 * (b.m01.imag() + b.m10.imag()),
                                 0.5 * (b.m10.real() - b.m01.real()),
                                 0.5 * (b.m00.imag() - b.m11.imag()));
        }
    }
    if (!(worst <= tol)) {
        throw NotInImage("block shape residual " + std::to_string(worst) + " exceeds tolerance");
    }
    return a;
}

FockOperator expm(const FockOperator& a) {
    EmbeddedOperator e = embed(a);
    e.m = expm_scaled_taylor(e.m);
    return unembed(e, 1e-8);
}

bool is_unitary(const FockOperator& a, double tol) {
    return block_dev(compose(adjoint(a), a), FockOperator::identity(a.dim()), a.dim()) <= tol;
}

bool is_antihermitian(const FockOperator& a, double tol) {
    return max_abs(adjoint(a) + a) <= tol;
}

}  // namespace qfock
