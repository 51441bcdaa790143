#include <doctest.h>

#include <cmath>

#include "qfock/observables.hpp"
#include "qfock/serialization.hpp"
#include "qfock/states.hpp"
#include "support.hpp"

using namespace qfock;

TEST_SUITE("observables") {

TEST_CASE("expectation basics") {
    const std::size_t n = 32;
    CHECK(expectation(FockVector::basis_state(n, 0), number_op(n)) == Quaternion::zero());
    CHECK_THROWS_AS(expectation(FockVector::basis_state(8, 0), number_op(9)),
                    DimensionMismatch);

    const Quaternion p = Quaternion::k() * 0.5;
    const std::size_t m = 64;
    const FockVector v = pure_squeezed(p, m);
    CHECK(abs(expectation(v, ladder_a(m))) <= 1e-10);
    const Quaternion a2 = expectation(v, compose(ladder_a(m), ladder_a(m)));
    const Quaternion want = unit_phase(p) * (std::cosh(0.5) * std::sinh(0.5));
    CHECK(abs(a2 - want) <= 1e-9);
}

TEST_CASE("moments report") {
    const std::size_t n = 64;
    const FockVector v = coherent(Quaternion::j() * 0.4, n).vector;
    const ExpectationReport rep = moments(v, number_op(n));
    CHECK(rep.variance.has_value());
    CHECK(rep.mean.w == doctest::Approx(0.16));
    CHECK(max_abs(rep.mean_matrix() - to_matrix(rep.mean)) == 0.0);
}

TEST_CASE("report serialization carries the contract field names") {
    const std::size_t n = 64;
    const FockVector v = coherent(Quaternion::j() * 0.4, n).vector;
    const std::string rep = to_json(moments(v, number_op(n)));
    CHECK(rep.find("\"mean\"") != std::string::npos);
    CHECK(rep.find("\"second_moment\"") != std::string::npos);
    CHECK(rep.find("\"variance\"") != std::string::npos);
    const std::string heis = to_json(heisenberg_bounds(Quaternion::j() * 0.3, n));
    CHECK(heis.find("\"product\"") != std::string::npos);
    CHECK(heis.find("\"bound_gap\"") != std::string::npos);
    const std::string stats = to_json(photon_stats(Quaternion::k() * 0.5, n));
    CHECK(stats.find("\"mandel_q\"") != std::string::npos);
}

TEST_CASE("quadrature pairs") {
    const std::size_t n = 32;
    CHECK_THROWS_AS(quadratures(n, Quaternion(1, 1, 0, 0)), BadAxis);
    CHECK_THROWS_AS(position_momentum(n, Quaternion::i() * 0.5), BadAxis);

    test::Rng rng;
    for (const Quaternion axis : {Quaternion::i(), Quaternion::j(), rng.unit_imaginary()}) {
        const auto [x, y] = quadratures(n, axis);
        CHECK(max_abs(adjoint(x) - x) == 0.0);
        CHECK(max_abs(adjoint(y) - y) <= 1e-15);
        const FockOperator want = left_scale(axis * 0.5, FockOperator::identity(n));
        CHECK(block_dev(commutator(x, y), want, n - 2) <= 1e-14);

        const auto [q, p] = position_momentum(n, axis);
        CHECK(max_abs(adjoint(p) - p) <= 1e-15);
        const FockOperator h = (compose(q, q) + compose(p, p)) * 0.5;
        CHECK(block_dev(h, hamiltonian(n), n - 2) <= 1e-13);
    }

    // vacuum variance of X is 1/4
    const auto [x, y] = quadratures(n, Quaternion::i());
    const FockVector vac = FockVector::basis_state(n, 0);
    CHECK(expectation(vac, compose(x, x)).w == doctest::Approx(0.25));
    CHECK(abs(expectation(vac, x)) == 0.0);
}

TEST_CASE("squeeze variance product matches the closed form") {
    const std::size_t n = 64;
    CHECK(squeeze_variance_product(Quaternion::zero(), n) == doctest::Approx(1.0 / 16));
    CHECK(squeeze_variance_product(Quaternion(0.5), n) ==
          doctest::Approx(1.0 / 16).epsilon(1e-9));

    // p = 0.5 i: (1 + sinh^2(1))/16
    const double want = (1.0 + std::pow(std::sinh(1.0), 2)) / 16.0;
    CHECK(std::fabs(squeeze_variance_product(Quaternion::i() * 0.5, n) - want) <= 1e-9);

    test::Rng rng;
    for (int s = 0; s < 8; ++s) {
        const Quaternion p = rng.quaternion(0.4);
        const double theta = polar(p).theta;
        const double closed =
            (1.0 + std::pow(std::sinh(2.0 * abs(p)) * std::sin(theta), 2)) / 16.0;
        CHECK(std::fabs(squeeze_variance_product(p, n) - closed) <= 1e-6);
    }
}

TEST_CASE("rotated quadratures") {
    const std::size_t n = 64;
    CHECK(rotated_quadrature_product(Quaternion::zero(), n) == doctest::Approx(0.25));

    const Quaternion p = Quaternion::j() * 0.5;
    const UvReport uv = rotated_quadratures(p, n);
    CHECK(abs(uv.mean_u) <= 1e-10);
    CHECK(abs(uv.mean_v) <= 1e-10);
    CHECK(std::fabs(uv.du_sq - 0.25 * std::pow(std::cosh(0.5) + std::sinh(0.5), 2)) <= 1e-8);
    CHECK(std::fabs(uv.dv_sq - 0.25 * std::pow(std::cosh(0.5) - std::sinh(0.5), 2)) <= 1e-8);
    CHECK(std::fabs(uv.product - 0.25) <= 1e-8);
    CHECK(std::fabs(uv.du_sq - uv.dv_sq) > 0.1);

    test::Rng rng;
    for (int s = 0; s < 6; ++s) {
        const UvReport r = rotated_quadratures(rng.quaternion(0.4), n);
        CHECK(std::fabs(r.product - 0.25) <= 1e-6);
    }
}

TEST_CASE("photon statistics") {
    const std::size_t n = 64;
    const PhotonStats st = photon_stats(Quaternion::k() * 0.5, n);
    const double sh2 = std::pow(std::sinh(0.5), 2);
    CHECK(std::fabs(st.mean_n - sh2) <= 1e-9);
    CHECK(std::fabs(st.var_n - 2.0 * sh2 * (1.0 + sh2)) <= 1e-9);
    CHECK(std::fabs(st.mandel_q - (1.0 + 2.0 * sh2)) <= 1e-8);
    CHECK(st.mandel_q > 0.0);

    // second moment 3 sinh^4 + 2 sinh^2
    const FockVector v = pure_squeezed(Quaternion::k() * 0.5, n);
    const double m2 = expectation(v, compose(number_op(n), number_op(n))).w;
    CHECK(std::fabs(m2 - (3.0 * sh2 * sh2 + 2.0 * sh2)) <= 1e-9);

    CHECK(expectation(pure_squeezed(Quaternion::zero(), n), number_op(n)) ==
          Quaternion::zero());
    CHECK_THROWS_AS(photon_stats(Quaternion::zero(), n), MeanZero);
    CHECK_THROWS_AS(photon_stats(Quaternion::i() * 1.5, 24), TruncationTooSmall);
}

TEST_CASE("conjugated-axis series") {
    const CiValue at_zero = ci_series(Quaternion::zero(), Quaternion::i());
    CHECK(at_zero.value == Quaternion::i());
    CHECK(at_zero.r == 1.0);

    // on the axis slice the series collapses to the axis itself
    test::Rng rng;
    for (int s = 0; s < 100; ++s) {
        const Quaternion q(rng.real(2.0), rng.real(2.0));
        CHECK(abs(ci_series(q, Quaternion::i()).value - Quaternion::i()) <= 1e-14);
    }

    // cross-slice value: axis i against q = j
    const CiValue cj = ci_series(Quaternion::j(), Quaternion::i());
    CHECK(abs(cj.value - Quaternion::i() * std::exp(-2.0)) <= 1e-12);
    CHECK(cj.r == doctest::Approx(std::exp(-2.0)));
    CHECK(abs(cj.axis - Quaternion::i()) <= 1e-12);

    // against the explicit-power oracle, plus the structural facts
    for (int s = 0; s < 200; ++s) {
        const Quaternion q = rng.quaternion(1.2);
        const Quaternion axis = rng.unit_imaginary();
        const CiValue ci = ci_series(q, axis);
        CHECK(abs(ci.value - test::ci_oracle(q, axis)) <= 1e-13);
        CHECK(abs(conj(ci.value) + ci.value) <= 1e-13);
        CHECK(ci.r <= 1.0 + 1e-12);
        CHECK(abs(ci.value - ci.axis * ci.r) <= 1e-13);
    }
    CHECK_THROWS_AS(ci_series(Quaternion::j(), Quaternion(0, 2, 0, 0)), BadAxis);
}

TEST_CASE("uncertainty bounds on coherent states") {
    const std::size_t n = 64;
    const HeisenbergReport at_zero = heisenberg_bounds(Quaternion::zero(), n);
    CHECK(at_zero.product == doctest::Approx(0.25));
    CHECK(at_zero.bound_gap <= 1e-12);

    // real labels keep the product at 1/4
    const HeisenbergReport real_label = heisenberg_bounds(Quaternion(0.8), n);
    CHECK(real_label.bound_gap <= 1e-12);
    CHECK(std::fabs(real_label.var_q - 0.5) <= 1e-12);

    const Quaternion q = Quaternion::j() * 0.3;
    const HeisenbergReport rep = heisenberg_bounds(q, n);
    CHECK(rep.bound_gap <= norm_sq(q) + 1e-12);
    CHECK(std::fabs(rep.commutator_half - 0.5 * ci_series(q, Quaternion::i()).r) <= 1e-12);

    test::Rng rng;
    for (int s = 0; s < 10; ++s) {
        const Quaternion qq = rng.quaternion(0.8);
        CHECK(heisenberg_bounds(qq, n).bound_gap <= norm_sq(qq) + 1e-9);
    }
}

TEST_CASE("squeezing verdicts") {
    const std::size_t n = 64;
    const auto [x, y] = quadratures(n, Quaternion::i());
    const FockVector vac = FockVector::basis_state(n, 0);
    const SqueezingVerdict vac_verdict = is_squeezed(vac, x, y);
    CHECK_FALSE(vac_verdict.squeezed);
    CHECK(vac_verdict.threshold == doctest::Approx(0.25));

    const FockVector coh = coherent(Quaternion(0.5, 0.3, 0, 0), n).vector;
    CHECK_FALSE(is_squeezed(coh, x, y).squeezed);

    // pure squeezed state against its rotated pair is ideally squeezed
    const Quaternion p = Quaternion::i() * 0.8;
    const FockVector v = pure_squeezed(p, n);
    const Quaternion axis = slice_decompose(p).axis;
    const double theta = polar(p).theta;
    const Quaternion half = Quaternion(std::cos(0.5 * theta)) + axis * std::sin(0.5 * theta);
    const FockOperator a = ladder_a(n), adag = ladder_adag(n);
    const FockOperator u_op = (left_scale(conj(half), a) + left_scale(half, adag)) * 0.5;
    const FockOperator v_op =
        left_scale((axis * -0.5) * conj(half), a) + left_scale((axis * 0.5) * half, adag);
    const SqueezingVerdict verdict = is_squeezed(v, u_op, v_op);
    CHECK(verdict.squeezed);
    CHECK(verdict.ideally_squeezed);

    // commuting pair has no canonical commutator
    CHECK_THROWS_AS(is_squeezed(vac, number_op(n), number_op(n)), NotCanonicalPair);
}

}  // TEST_SUITE
