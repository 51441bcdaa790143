#include "qfock/observables.hpp"

#include <cmath>
#include <iostream>
#include <string>

#include "qfock/states.hpp"

namespace qfock {

namespace {

void require_unit_imaginary(const Quaternion& axis) {
    const Quaternion sq = axis * axis;
    if (std::fabs(axis.w) > 1e-12 || abs(sq + Quaternion::one()) > 1e-12) {
        throw BadAxis("axis must be a unit imaginary quaternion");
    }
}

// Variance <A^2> - <A>^2 in the cases where it is a real scalar; the
// imaginary residue is only diagnostic here.
double real_variance(const FockVector& v, const FockOperator& a) {
    const Quaternion m = expectation(v, a);
    const Quaternion m2 = expectation(v, compose(a, a));
    const Quaternion var = m2 - m * m;
    return var.w;
}

}  // namespace

Quaternion expectation(const FockVector& v, const FockOperator& a) {
    const double nrm = norm(v);
    if (std::fabs(nrm - 1.0) > 1e-6) {
        std::cerr << "qfock: expectation taken on a state with norm " << nrm << "\n";
    }
    return inner(v, apply(a, v));
}

ExpectationReport moments(const FockVector& v, const FockOperator& a) {
    ExpectationReport rep;
    rep.mean = expectation(v, a);
    rep.second_moment = expectation(v, compose(a, a));

    const SliceElement sm = slice_decompose(rep.mean);
    const SliceElement s2 = slice_decompose(rep.second_moment);
    const bool mean_real = sm.y <= 1e-12 * std::max(1.0, abs(rep.mean));
    const bool one_slice =
        mean_real || s2.y <= 1e-12 * std::max(1.0, abs(rep.second_moment)) ||
        abs(sm.axis - s2.axis) <= 1e-9 || abs(sm.axis + s2.axis) <= 1e-9;
    if (one_slice) rep.variance = rep.second_moment - rep.mean * rep.mean;
    return rep;
}

std::pair<FockOperator, FockOperator> quadratures(std::size_t n, const Quaternion& axis) {
    require_unit_imaginary(axis);
    const FockOperator a = ladder_a(n);
    const FockOperator adag = ladder_adag(n);
    FockOperator x = (a + adag) * 0.5;
    FockOperator y = left_scale(axis * -0.5, a - adag);
    return {std::move(x), std::move(y)};
}

std::pair<FockOperator, FockOperator> position_momentum(std::size_t n, const Quaternion& axis) {
    require_unit_imaginary(axis);
    const double inv_rt2 = 1.0 / std::sqrt(2.0);
    const FockOperator a = ladder_a(n);
    const FockOperator adag = ladder_adag(n);
    FockOperator q = (a + adag) * inv_rt2;
    FockOperator p = left_scale(axis * -inv_rt2, a - adag);
    return {std::move(q), std::move(p)};
}

double squeeze_variance_product(const Quaternion& p, std::size_t n) {
    const FockVector state = pure_squeezed(p, n);
    const auto [x, y] = quadratures(n, Quaternion::i());
    return real_variance(state, x) * real_variance(state, y);
}

UvReport rotated_quadratures(const Quaternion& p, std::size_t n) {
    const SliceElement sp = slice_decompose(p);
    const double theta = polar(p).theta;
    // half-angle phase on the slice of p
    const Quaternion v = Quaternion(std::cos(0.5 * theta)) + sp.axis * std::sin(0.5 * theta);
    const FockOperator a = ladder_a(n);
    const FockOperator adag = ladder_adag(n);

    const FockOperator u_op =
        (left_scale(conj(v), a) + left_scale(v, adag)) * 0.5;
    const FockOperator v_op = left_scale((sp.axis * -0.5) * conj(v), a) +
                              left_scale((sp.axis * 0.5) * v, adag);

    const FockVector state = pure_squeezed(p, n);
    UvReport rep;
    rep.mean_u = expectation(state, u_op);
    rep.mean_v = expectation(state, v_op);
    rep.du_sq = real_variance(state, u_op);
    rep.dv_sq = real_variance(state, v_op);
    rep.product = std::sqrt(rep.du_sq * rep.dv_sq);
    return rep;
}

double rotated_quadrature_product(const Quaternion& p, std::size_t n) {
    return rotated_quadratures(p, n).product;
}

PhotonStats photon_stats(const Quaternion& p, std::size_t n) {
    const FockVector state = pure_squeezed(p, n);

    // top-of-truncation mass ruins the second moment first
    double top_mass = 0.0;
    for (std::size_t k = n >= 4 ? n - 4 : 0; k < n; ++k) top_mass += norm_sq(state[k]);
    if (top_mass * static_cast<double>(n) * static_cast<double>(n) > 1e-6) {
        throw TruncationTooSmall("occupation tail too heavy at truncation " + std::to_string(n));
    }

    const FockOperator num = number_op(n);
    PhotonStats stats;
    stats.mean_n = expectation(state, num).w;
    const double m2 = expectation(state, compose(num, num)).w;
    stats.var_n = m2 - stats.mean_n * stats.mean_n;
    if (stats.mean_n <= 0.0) {
        throw MeanZero("mandel statistic undefined at zero mean occupation");
    }
    stats.mandel_q = stats.var_n / stats.mean_n - 1.0;
    return stats;
}

CiValue ci_series(const Quaternion& q, const Quaternion& axis) {
    require_unit_imaginary(axis);
    const double a2 = norm_sq(q);
    const Quaternion qc = conj(q);

    // damped recurrence: term_m = conj(q)^m axis q^m exp(-|q|^2) / m!
    // keeps every intermediate bounded by one
    Quaternion term = axis * std::exp(-a2);
    Quaternion sum = term;
    double bound = std::exp(-a2);  // |term_m| upper bound
    std::size_t used = 1;
    for (std::size_t m = 1; m <= 4096; ++m) {
        term = (qc * term * q) / static_cast<double>(m);
        bound = bound * a2 / static_cast<double>(m);
        sum += term;
        ++used;
        if (bound < 1e-16) break;
    }

    CiValue ci;
    ci.value = sum;
    ci.r = abs(ci.value);
    ci.axis = ci.r > 0.0 ? ci.value / ci.r : axis;
    ci.terms_used = used;
    return ci;
}

HeisenbergReport heisenberg_bounds(const Quaternion& q, std::size_t n) {
    const FockVector state = coherent(q, n).vector;
    const auto [pos, mom] = position_momentum(n, Quaternion::i());

    HeisenbergReport rep;
    rep.var_q = real_variance(state, pos);
    rep.var_p = real_variance(state, mom);
    rep.product = rep.var_q * rep.var_p;
    rep.bound_gap = std::fabs(rep.product - 0.25);
    rep.commutator_half = 0.5 * abs(expectation(state, commutator(pos, mom)));
    return rep;
}

SqueezingVerdict is_squeezed(const FockVector& v, const FockOperator& a, const FockOperator& b) {
    const FockOperator comm = commutator(a, b);
    const Quaternion m = expectation(v, comm);
    const double mag = abs(m);
    if (mag < 1e-12) throw NotCanonicalPair("commutator expectation vanishes");
    if (std::fabs(m.w) > 1e-8 * mag) {
        throw NotCanonicalPair("commutator expectation is not purely imaginary");
    }
    const Quaternion axis = imag_part(m) / abs(imag_part(m));

    // [A,B] = axis . C requires (-axis).[A,B] self-adjoint away from the edge
    const FockOperator c_op = left_scale(-axis, comm);
    const std::size_t safe = v.size() > 2 ? v.size() - 2 : v.size();
    if (block_dev(c_op, adjoint(c_op), safe) > 1e-8) {
        throw NotCanonicalPair("commutator is not axis times a self-adjoint operator");
    }

    SqueezingVerdict verdict;
    verdict.threshold = 0.5 * mag;
    verdict.var_a = expectation(v, compose(a, a)).w - norm_sq(expectation(v, a));
    verdict.var_b = expectation(v, compose(b, b)).w - norm_sq(expectation(v, b));
    verdict.squeezed =
        verdict.var_a < verdict.threshold - 1e-12 || verdict.var_b < verdict.threshold - 1e-12;
    verdict.ideally_squeezed =
        verdict.squeezed &&
        std::fabs(std::sqrt(verdict.var_a * verdict.var_b) - verdict.threshold) <= 1e-7;
    return verdict;
}

}  // namespace qfock
