#ifndef QFOCK_QUATERNION_HPP
#define QFOCK_QUATERNION_HPP

#include <cmath>
#include <complex>
#include <cstddef>

#include "qfock/errors.hpp"

namespace qfock {

using Complex = std::complex<double>;

/// Quaternion w + x i + y j + z k with the Hamilton products
/// ij = -ji = k, jk = -kj = i, ki = -ik = j.
struct Quaternion {
    double w = 0.0;
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr Quaternion() = default;
    constexpr Quaternion(double w_, double x_ = 0.0, double y_ = 0.0, double z_ = 0.0)
        : w(w_), x(x_), y(y_), z(z_) {}

    static constexpr Quaternion zero() { return {0.0, 0.0, 0.0, 0.0}; }
    static constexpr Quaternion one() { return {1.0, 0.0, 0.0, 0.0}; }
    static constexpr Quaternion i() { return {0.0, 1.0, 0.0, 0.0}; }
    static constexpr Quaternion j() { return {0.0, 0.0, 1.0, 0.0}; }
    static constexpr Quaternion k() { return {0.0, 0.0, 0.0, 1.0}; }

    constexpr Quaternion& operator+=(const Quaternion& r) {
        w += r.w;
        x += r.x;
        y += r.y;
        z += r.z;
        return *this;
    }
    constexpr Quaternion& operator-=(const Quaternion& r) {
        w -= r.w;
        x -= r.x;
        y -= r.y;
        z -= r.z;
        return *this;
    }
    constexpr Quaternion& operator*=(double s) {
        w *= s;
        x *= s;
        y *= s;
        z *= s;
        return *this;
    }
    constexpr Quaternion& operator/=(double s) { return *this *= 1.0 / s; }

    constexpr bool operator==(const Quaternion& r) const {
        return w == r.w && x == r.x && y == r.y && z == r.z;
    }
};

constexpr Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
constexpr Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
constexpr Quaternion operator-(const Quaternion& a) { return {-a.w, -a.x, -a.y, -a.z}; }
constexpr Quaternion operator*(Quaternion a, double s) { return a *= s; }
constexpr Quaternion operator*(double s, Quaternion a) { return a *= s; }
constexpr Quaternion operator/(Quaternion a, double s) { return a /= s; }

constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) {
    return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

constexpr Quaternion conj(const Quaternion& q) { return {q.w, -q.x, -q.y, -q.z}; }
constexpr double real(const Quaternion& q) { return q.w; }
constexpr Quaternion imag_part(const Quaternion& q) { return {0.0, q.x, q.y, q.z}; }
constexpr double norm_sq(const Quaternion& q) {
    return q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z;
}

inline double abs(const Quaternion& q) { return std::sqrt(norm_sq(q)); }

/// Largest absolute component; cheap gauge for tolerance checks.
inline double max_component(const Quaternion& q) {
    return std::max(std::max(std::fabs(q.w), std::fabs(q.x)),
                    std::max(std::fabs(q.y), std::fabs(q.z)));
}

/// Integer power by repeated multiplication (small exponents only).
Quaternion pow_uint(const Quaternion& q, std::size_t n);

/// 2x2 complex matrix, row major.
struct ComplexMatrix2 {
    Complex m00, m01, m10, m11;

    static ComplexMatrix2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
    ComplexMatrix2 adjoint() const {
        return {std::conj(m00), std::conj(m10), std::conj(m01), std::conj(m11)};
    }
};

ComplexMatrix2 operator*(const ComplexMatrix2& a, const ComplexMatrix2& b);
ComplexMatrix2 operator+(const ComplexMatrix2& a, const ComplexMatrix2& b);
ComplexMatrix2 operator-(const ComplexMatrix2& a, const ComplexMatrix2& b);
ComplexMatrix2 operator*(Complex s, const ComplexMatrix2& a);
double max_abs(const ComplexMatrix2& a);

/// Image of a quaternion under the standard 2x2 complex representation:
/// rows (w + iz, -y + ix; y + ix, w - iz).
ComplexMatrix2 to_matrix(const Quaternion& q);

/// Inverse of to_matrix. Throws MalformedMatrix when m is farther than tol
/// from the representation's image.
Quaternion from_matrix(const ComplexMatrix2& m, double tol = 1e-10);

/// Polar data r * exp(theta * sigma_n-direction): r >= 0, theta in [0,pi],
/// phi in [0,pi], psi in [0,2pi). sigma_n is the traceless self-adjoint
/// unit direction; sigma_n * sigma_n = identity.
struct PolarForm {
    double r = 0.0;
    double theta = 0.0;
    double phi = 0.0;
    double psi = 0.0;
    ComplexMatrix2 sigma_n{1.0, 0.0, 0.0, -1.0};
};

/// Decompose q into polar form. Degeneracies: r = 0 zeroes all angles;
/// a real q gets phi = psi = 0 (sigma_n is the diagonal direction).
PolarForm polar(const Quaternion& q);

/// Rebuild the quaternion from its polar data.
Quaternion reconstruct(const PolarForm& p);

/// Exponential: exp(w) * (cos|v| + sin|v| v/|v|) for q = w + v.
Quaternion qexp(const Quaternion& q);

/// Ordered series sum_m p^m q^m / m!. Coincides with qexp(p*q) whenever
/// p and q share a slice; differs in general. Truncated when
/// exp(|p||q|) (|p||q|)^m / m! < 1e-16.
Quaternion star_exp(const Quaternion& p, const Quaternion& q);

/// x + axis*y with y >= 0 and axis a unit imaginary quaternion.
struct SliceElement {
    double x = 0.0;
    double y = 0.0;
    Quaternion axis = Quaternion::i();

    Quaternion value() const { return Quaternion(x) + axis * y; }
};

/// Unique slice coordinates of q; real quaternions use axis = i.
SliceElement slice_decompose(const Quaternion& q);

/// q / |q|; returns one() for q = 0 (removable limit in the closed forms).
Quaternion unit_phase(const Quaternion& q);

/// sin(x)/x with the series used below 1e-4.
double sinc(double x);

}  // namespace qfock

#endif
