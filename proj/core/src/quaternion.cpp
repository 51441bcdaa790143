#include "qfock/quaternion.hpp"

#include <cmath>

namespace qfock {

Quaternion pow_uint(const Quaternion& q, std::size_t n) {
    Quaternion acc = Quaternion::one();
    for (std::size_t m = 0; m < n; ++m) acc = acc * q;
    return acc;
}

ComplexMatrix2 operator*(const ComplexMatrix2& a, const ComplexMatrix2& b) {
    return {a.m00 * b.m00 + a.m01 * b.m10, a.m00 * b.m01 + a.m01 * b.m11,
            a.m10 * b.m00 + a.m11 * b.m10, a.m10 * b.m01 + a.m11 * b.m11};
}

ComplexMatrix2 operator+(const ComplexMatrix2& a, const ComplexMatrix2& b) {
    return {a.m00 + b.m00, a.m01 + b.m01, a.m10 + b.m10, a.m11 + b.m11};
}

ComplexMatrix2 operator-(const ComplexMatrix2& a, const ComplexMatrix2& b) {
    return {a.m00 - b.m00, a.m01 - b.m01, a.m10 - b.m10, a.m11 - b.m11};
}

ComplexMatrix2 operator*(Complex s, const ComplexMatrix2& a) {
    return {s * a.m00, s * a.m01, s * a.m10, s * a.m11};
}

double max_abs(const ComplexMatrix2& a) {
    return std::max(std::max(std::abs(a.m00), std::abs(a.m01)),
                    std::max(std::abs(a.m10), std::abs(a.m11)));
}

ComplexMatrix2 to_matrix(const Quaternion& q) {
    return {Complex(q.w, q.z), Complex(-q.y, q.x), Complex(q.y, q.x), Complex(q.w, -q.z)};
}

Quaternion from_matrix(const ComplexMatrix2& m, double tol) {
    const double shape = std::max(std::abs(m.m11 - std::conj(m.m00)),
                                  std::abs(m.m10 + std::conj(m.m01)));
    if (!(shape <= tol)) {
        throw MalformedMatrix("matrix is not a quaternion image (residual " +
                              std::to_string(shape) + ")");
    }
    return {0.5 * (m.m00.real() + m.m11.real()), 0.5 * (m.m01.imag() + m.m10.imag()),
            0.5 * (m.m10.real() - m.m01.real()), 0.5 * (m.m00.imag() - m.m11.imag())};
}

PolarForm polar(const Quaternion& q) {
    PolarForm p;
    p.r = abs(q);
    if (p.r == 0.0) return p;

    const double vn = std::sqrt(q.x * q.x + q.y * q.y + q.z * q.z);
    p.theta = std::atan2(vn, q.w);
    if (vn == 0.0) {
        // real quaternion: theta is 0 or pi, direction fixed by convention
        return p;
    }
    const double rho = std::hypot(q.x, q.y);
    p.phi = std::atan2(rho, q.z);
    p.psi = std::atan2(q.y, q.x);
    if (p.psi < 0.0) p.psi += 2.0 * M_PI;

    const Complex eipsi(std::cos(p.psi), std::sin(p.psi));
    const double sphi = std::sin(p.phi);
    const double cphi = std::cos(p.phi);
    p.sigma_n = {Complex(cphi, 0.0), sphi * eipsi, sphi * std::conj(eipsi), Complex(-cphi, 0.0)};
    return p;
}

Quaternion reconstruct(const PolarForm& p) {
    const double st = std::sin(p.theta);
    return {p.r * std::cos(p.theta), p.r * st * std::sin(p.phi) * std::cos(p.psi),
            p.r * st * std::sin(p.phi) * std::sin(p.psi), p.r * st * std::cos(p.phi)};
}

double sinc(double x) {
    const double a = std::fabs(x);
    if (a < 1e-4) {
        const double x2 = x * x;
        return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
    }
    return std::sin(x) / x;
}

Quaternion qexp(const Quaternion& q) {
    const double ew = std::exp(q.w);
    const double vn = std::sqrt(q.x * q.x + q.y * q.y + q.z * q.z);
    const double s = ew * sinc(vn);
    return {ew * std::cos(vn), s * q.x, s * q.y, s * q.z};
}

Quaternion star_exp(const Quaternion& p, const Quaternion& q) {
    const double ap = abs(p);
    const double aq = abs(q);
    const double bound_base = std::exp(ap * aq);

    Quaternion sum = Quaternion::one();
    Quaternion pm = Quaternion::one();
    Quaternion qm = Quaternion::one();
    double term_bound = bound_base;  // exp(|p||q|) (|p||q|)^m / m! at m = 0
    double inv_fact = 1.0;
    for (std::size_t m = 1; m <= 512; ++m) {
        pm = pm * p;
        qm = qm * q;
        inv_fact /= static_cast<double>(m);
        sum += (pm * qm) * inv_fact;
        term_bound = term_bound * ap * aq / static_cast<double>(m);
        if (term_bound < 1e-16) break;
    }
    return sum;
}

SliceElement slice_decompose(const Quaternion& q) {
    SliceElement s;
    s.x = q.w;
    s.y = std::sqrt(q.x * q.x + q.y * q.y + q.z * q.z);
    if (s.y > 0.0) {
        s.axis = Quaternion(0.0, q.x / s.y, q.y / s.y, q.z / s.y);
    }
    return s;
}

Quaternion unit_phase(const Quaternion& q) {
    const double a = abs(q);
    if (a == 0.0) return Quaternion::one();
    return q / a;
}

}  // namespace qfock
