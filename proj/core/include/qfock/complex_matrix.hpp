#ifndef QFOCK_COMPLEX_MATRIX_HPP
#define QFOCK_COMPLEX_MATRIX_HPP

#include <complex>
#include <cstddef>
#include <vector>

namespace qfock {

/// Dense row-major complex matrix. Plumbing for the 2Nx2N embedding and
/// the matrix exponential kernel.
class ComplexMatrix {
public:
    using value_type = std::complex<double>;

    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    static ComplexMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    value_type& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const value_type& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    const value_type* row(std::size_t i) const { return a_.data() + i * cols_; }
    value_type* row(std::size_t i) { return a_.data() + i * cols_; }

    ComplexMatrix& operator+=(const ComplexMatrix& r);
    ComplexMatrix& operator-=(const ComplexMatrix& r);
    ComplexMatrix& operator*=(value_type s);

    ComplexMatrix adjoint() const;
    double max_abs() const;
    double frobenius() const;
    /// Maximum row sum of entry magnitudes.
    double inf_norm() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<value_type> a_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

/// exp(A) by scaling and squaring around a truncated Taylor kernel. The
/// scaled matrix is kept below norm 1/2; the Horner passes skip zero rows,
/// so banded generators cost O(nnz * n) per pass.
ComplexMatrix expm_scaled_taylor(const ComplexMatrix& a);

}  // namespace qfock

#endif
