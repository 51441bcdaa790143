#include "qfock/complex_matrix.hpp"

#include <cmath>
#include <stdexcept>

namespace qfock {

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& r) {
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += r.a_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& r) {
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= r.a_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(value_type s) {
    for (auto& v : a_) v *= s;
    return *this;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m(j, i) = std::conj((*this)(i, j));
    return m;
}

double ComplexMatrix::max_abs() const {
    double m = 0.0;
    for (const auto& v : a_) m = std::max(m, std::abs(v));
    return m;
}

double ComplexMatrix::frobenius() const {
    double s = 0.0;
    for (const auto& v : a_) s += std::norm(v);
    return std::sqrt(s);
}

double ComplexMatrix::inf_norm() const {
    double m = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) {
        double s = 0.0;
        const value_type* r = row(i);
        for (std::size_t j = 0; j < cols_; ++j) s += std::abs(r[j]);
        m = std::max(m, s);
    }
    return m;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product shape mismatch");
    const std::size_t n = a.rows(), m = b.cols(), l = a.cols();
    ComplexMatrix c(n, m);
    for (std::size_t i = 0; i < n; ++i) {
        auto* ci = c.row(i);
        const auto* ai = a.row(i);
        for (std::size_t k = 0; k < l; ++k) {
            const auto s = ai[k];
            if (s == std::complex<double>(0.0, 0.0)) continue;
            const auto* bk = b.row(k);
            for (std::size_t j = 0; j < m; ++j) ci[j] += s * bk[j];
        }
    }
    return c;
}

ComplexMatrix expm_scaled_taylor(const ComplexMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("expm needs a square matrix");
    const std::size_t n = a.rows();

    const double norm = a.inf_norm();
    int squarings = 0;
    if (norm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));

    ComplexMatrix b = a;
    b *= std::ldexp(1.0, -squarings);

    // Horner evaluation of the degree-16 Taylor polynomial of exp(b);
    // remainder below 1e-18 for inf-norm(b) <= 1/2.
    constexpr int degree = 16;
    ComplexMatrix p = ComplexMatrix::identity(n);
    for (int k = degree; k >= 1; --k) {
        p = b * p;
        p *= 1.0 / static_cast<double>(k);
        for (std::size_t i = 0; i < n; ++i) p(i, i) += 1.0;
    }

    for (int s = 0; s < squarings; ++s) p = p * p;
    return p;
}

}  // namespace qfock
