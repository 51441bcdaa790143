#ifndef QFOCK_TESTS_SUPPORT_HPP
#define QFOCK_TESTS_SUPPORT_HPP

#include <array>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "qfock/quaternion.hpp"

namespace qfock::test {

struct Rng {
    std::mt19937_64 engine{20240811u};
    std::uniform_real_distribution<double> unit{-1.0, 1.0};

    double real(double scale = 1.0) { return scale * unit(engine); }

    Quaternion quaternion(double scale = 1.0) {
        return {real(scale), real(scale), real(scale), real(scale)};
    }

    Quaternion unit_imaginary() {
        for (;;) {
            Quaternion v{0.0, real(), real(), real()};
            const double a = abs(v);
            if (a > 1e-3) return v / a;
        }
    }
};

// Independent product route: the 4x4 real left-multiplication matrix of p
// applied to the component vector of q.
inline Quaternion mul_via_real_matrix(const Quaternion& p, const Quaternion& q) {
    const std::array<std::array<double, 4>, 4> l{{{p.w, -p.x, -p.y, -p.z},
                                                  {p.x, p.w, -p.z, p.y},
                                                  {p.y, p.z, p.w, -p.x},
                                                  {p.z, -p.y, p.x, p.w}}};
    const std::array<double, 4> v{q.w, q.x, q.y, q.z};
    std::array<double, 4> r{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r[i] += l[i][j] * v[j];
    return {r[0], r[1], r[2], r[3]};
}

// Term-by-term series oracle for the exponential.
inline Quaternion qexp_series(const Quaternion& q, std::size_t terms = 80) {
    Quaternion sum;
    for (std::size_t n = 0; n < terms; ++n) {
        Quaternion t = pow_uint(q, n);
        double fact = 1.0;
        for (std::size_t m = 2; m <= n; ++m) fact *= static_cast<double>(m);
        sum += t / fact;
    }
    return sum;
}

// Term-by-term oracle for the conjugated-axis series, powers formed
// explicitly rather than by recurrence.
inline Quaternion ci_oracle(const Quaternion& q, const Quaternion& axis, std::size_t terms = 80) {
    Quaternion sum;
    double fact = 1.0;
    for (std::size_t n = 0; n < terms; ++n) {
        if (n >= 2) fact *= static_cast<double>(n);
        sum += (pow_uint(conj(q), n) * axis * pow_uint(q, n)) / fact;
    }
    return sum * std::exp(-norm_sq(q));
}

// --- complex single-mode reference simulator -------------------------------
// Dense complex matrices with an eigendecomposition-based exponential; an
// algorithmic route independent of the scaled-Taylor kernel under test.

using CMat = std::vector<std::complex<double>>;  // row-major n x n

inline CMat cmat_ladder_a(std::size_t n) {
    CMat a(n * n);
    for (std::size_t k = 1; k < n; ++k) a[(k - 1) * n + k] = std::sqrt(static_cast<double>(k));
    return a;
}

inline CMat cmat_mul(const CMat& a, const CMat& b, std::size_t n) {
    CMat c(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const auto s = a[i * n + k];
            if (s == std::complex<double>{}) continue;
            for (std::size_t j = 0; j < n; ++j) c[i * n + j] += s * b[k * n + j];
        }
    return c;
}

// Cyclic Jacobi eigendecomposition of a Hermitian matrix.
inline void hermitian_eig(CMat h, std::size_t n, std::vector<double>& eval, CMat& evec) {
    evec.assign(n * n, {});
    for (std::size_t i = 0; i < n; ++i) evec[i * n + i] = 1.0;
    for (int sweep = 0; sweep < 60; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) off += std::norm(h[p * n + q]);
        if (off < 1e-26) break;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const auto hpq = h[p * n + q];
                if (std::abs(hpq) < 1e-300) continue;
                const double app = h[p * n + p].real();
                const double aqq = h[q * n + q].real();
                const std::complex<double> phase = hpq / std::abs(hpq);
                const double tau = (aqq - app) / (2.0 * std::abs(hpq));
                const double t = (tau >= 0 ? 1.0 : -1.0) /
                                 (std::fabs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const std::complex<double> s = t * c * phase;
                for (std::size_t k = 0; k < n; ++k) {
                    const auto hkp = h[k * n + p];
                    const auto hkq = h[k * n + q];
                    h[k * n + p] = c * hkp - std::conj(s) * hkq;
                    h[k * n + q] = s * hkp + c * hkq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const auto hpk = h[p * n + k];
                    const auto hqk = h[q * n + k];
                    h[p * n + k] = c * hpk - s * hqk;
                    h[q * n + k] = std::conj(s) * hpk + c * hqk;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const auto vkp = evec[k * n + p];
                    const auto vkq = evec[k * n + q];
                    evec[k * n + p] = c * vkp - std::conj(s) * vkq;
                    evec[k * n + q] = s * vkp + c * vkq;
                }
            }
        }
    }
    eval.assign(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) eval[i] = h[i * n + i].real();
}

// exp(G) for anti-Hermitian G via G = i H with H Hermitian.
inline CMat expm_antihermitian_eig(const CMat& g, std::size_t n) {
    CMat h(n * n);
    const std::complex<double> mi{0.0, -1.0};
    for (std::size_t idx = 0; idx < n * n; ++idx) h[idx] = mi * g[idx];
    std::vector<double> eval;
    CMat evec;
    hermitian_eig(h, n, eval, evec);
    CMat r(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::complex<double> s{};
            for (std::size_t k = 0; k < n; ++k) {
                const std::complex<double> eik{std::cos(eval[k]), std::sin(eval[k])};
                s += evec[i * n + k] * eik * std::conj(evec[j * n + k]);
            }
            r[i * n + j] = s;
        }
    return r;
}

// Textbook even-level coefficients of the squeezed vacuum for a complex
// parameter p = r e^{i theta}: c_{2m} = (e^{i theta} tanh r)^m
// sqrt((2m)!) / (2^m m!) / sqrt(cosh r).
inline std::vector<std::complex<double>> squeezed_vacuum_closed_form(double r, double theta,
                                                                     std::size_t n) {
    std::vector<std::complex<double>> c(n);
    const std::complex<double> factor = std::polar(std::tanh(r), theta);
    std::complex<double> even = 1.0 / std::sqrt(std::cosh(r));
    for (std::size_t m = 0; 2 * m < n; ++m) {
        c[2 * m] = even;
        // ratio c_{2m+2}/c_{2m} = factor * sqrt((2m+1)(2m+2)) / (2(m+1))
        even *= factor * std::sqrt((2.0 * m + 1.0) * (2.0 * m + 2.0)) / (2.0 * (m + 1.0));
    }
    return c;
}

}  // namespace qfock::test

#endif
