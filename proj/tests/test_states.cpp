#include <doctest.h>

#include <cmath>

#include "qfock/observables.hpp"
#include "qfock/slice_identities.hpp"
#include "qfock/states.hpp"
#include "support.hpp"

using namespace qfock;

TEST_SUITE("states") {

TEST_CASE("coherent state basics") {
    const std::size_t n = 64;
    CHECK(norm(coherent(Quaternion::zero(), n).vector -
               FockVector::basis_state(n, 0)) == 0.0);

    test::Rng rng;
    for (int s = 0; s < 20; ++s) {
        const Quaternion q = rng.quaternion(0.9);
        const CoherentState st = coherent(q, n);
        CHECK(std::fabs(norm(st.vector) - 1.0) <= 1e-12);
        CHECK(abs(expectation(st.vector, ladder_a(n)) - q) <= 1e-12);
        CHECK(std::fabs(expectation(st.vector, number_op(n)).w - norm_sq(q)) <= 1e-12);
        // lowering eigenrelation coefficient-wise away from the top
        const FockVector lhs = apply(ladder_a(n), st.vector);
        const FockVector rhs = left_scale(q, st.vector);
        for (std::size_t k = 0; k + 3 < n; ++k) CHECK(abs(lhs[k] - rhs[k]) <= 1e-13);
    }
    CHECK_THROWS_AS(coherent(Quaternion(4.0), 16), TruncationTooSmall);
}

TEST_CASE("displacement operator") {
    const std::size_t n = 64;
    CHECK(block_dev(displacement(Quaternion::zero(), n), FockOperator::identity(n), n) == 0.0);
    const Quaternion q(0.4, 0.9, -0.6, 0.2);
    const FockOperator d = displacement(q, n);
    CHECK(is_unitary(d, 1e-12));
    CHECK(norm(apply(d, FockVector::basis_state(n, 0)) - coherent(q, n).vector) <= 1e-9);

    // ladder conjugation on the leak-free block
    const std::size_t block = conjugation_safe_block(n, 0.0, abs(q));
    const FockOperator a = ladder_a(n), adag = ladder_adag(n);
    const FockOperator shift_a = a + left_scale(q, FockOperator::identity(n));
    const FockOperator shift_ad = adag + left_scale(conj(q), FockOperator::identity(n));
    CHECK(block_dev(compose(adjoint(d), compose(a, d)), shift_a, block) <= 1e-7);
    CHECK(block_dev(compose(adjoint(d), compose(adag, d)), shift_ad, block) <= 1e-7);
}

TEST_CASE("squeeze operator") {
    const std::size_t n = 64;
    CHECK(block_dev(squeeze(Quaternion::zero(), n), FockOperator::identity(n), n) == 0.0);
    const Quaternion p = (Quaternion(std::cos(0.9)) + Quaternion::j() * std::sin(0.9)) * 0.4;
    const FockOperator s = squeeze(p, n);
    CHECK(is_unitary(s, 1e-12));
    CHECK(max_abs(adjoint(s) - squeeze(-p, n)) <= 1e-12);
    CHECK(max_abs(s - squeeze_su11_form(p, n)) <= 1e-12);

    // generator is anti-hermitian
    const FockOperator gen =
        (left_scale(p, compose(ladder_adag(n), ladder_adag(n))) -
         left_scale(conj(p), compose(ladder_a(n), ladder_a(n)))) *
        0.5;
    CHECK(is_antihermitian(gen, 1e-14));

    // conjugation closed forms on the leak-free block
    const std::size_t block = conjugation_safe_block(n, abs(p), 0.0);
    const double ap = abs(p);
    const Quaternion ip = unit_phase(p);
    const FockOperator a = ladder_a(n), adag = ladder_adag(n);
    const FockOperator rhs_a = a * std::cosh(ap) + left_scale(ip * std::sinh(ap), adag);
    CHECK(block_dev(compose(adjoint(s), compose(a, s)), rhs_a, block) <= 1e-7);
    const FockOperator rhs_ad = adag * std::cosh(ap) + left_scale(conj(ip) * std::sinh(ap), a);
    CHECK(block_dev(compose(adjoint(s), compose(adag, s)), rhs_ad, block) <= 1e-7);
    const double ch = std::cosh(ap), sh = std::sinh(ap);
    const FockOperator rhs_n = compose(adag, a) * (ch * ch) + compose(a, adag) * (sh * sh) +
                               left_scale(conj(ip) * (sh * ch), compose(a, a)) +
                               left_scale(ip * (sh * ch), compose(adag, adag));
    CHECK(block_dev(compose(adjoint(s), compose(number_op(n), s)), rhs_n, block) <= 1e-7);
}

TEST_CASE("safe block stays conservative against doubled truncation") {
    const Quaternion p = (Quaternion(std::cos(1.1)) + Quaternion::k() * std::sin(1.1)) * 0.5;
    const Quaternion q = (Quaternion(std::cos(0.4)) + Quaternion::k() * std::sin(0.4)) * 0.7;
    const std::size_t n = 48;
    const std::size_t block = conjugation_safe_block(n, abs(p), abs(q));
    REQUIRE(block >= 2);
    const FockOperator small_sd = compose(squeeze(p, n), displacement(q, n));
    const FockOperator big_sd = compose(squeeze(p, 2 * n), displacement(q, 2 * n));
    const FockOperator small_conj =
        compose(adjoint(small_sd), compose(ladder_a(n), small_sd));
    const FockOperator big_conj =
        compose(adjoint(big_sd), compose(ladder_a(2 * n), big_sd));
    double dev = 0.0;
    for (std::size_t i = 0; i < block; ++i)
        for (std::size_t j = 0; j < block; ++j)
            dev = std::max(dev, abs(small_conj(i, j) - big_conj(i, j)));
    CHECK(dev <= 1e-8);
}

TEST_CASE("pure squeezed states") {
    const std::size_t n = 64;
    CHECK(norm(pure_squeezed(Quaternion::zero(), n) - FockVector::basis_state(n, 0)) == 0.0);

    const Quaternion p = (Quaternion(std::cos(0.8)) + Quaternion::i() * std::sin(0.8)) * 0.45;
    const FockVector v = pure_squeezed(p, n);
    CHECK(std::fabs(norm(v) - 1.0) <= 1e-12);
    for (std::size_t k = 1; k < n; k += 2) CHECK(abs(v[k]) <= 1e-13);

    // slice parameter against the textbook closed form
    const auto closed = test::squeezed_vacuum_closed_form(0.45, 0.8, n);
    for (std::size_t k = 0; k < 40; ++k) {
        CHECK(std::fabs(v[k].w - closed[k].real()) <= 1e-9);
        CHECK(std::fabs(v[k].x - closed[k].imag()) <= 1e-9);
        CHECK(std::fabs(v[k].y) <= 1e-12);
        CHECK(std::fabs(v[k].z) <= 1e-12);
    }

    // and against the eigendecomposition route at a coarser truncation
    const std::size_t m = 40;
    const double r = 0.3, theta = 1.2;
    const FockVector w =
        pure_squeezed((Quaternion(std::cos(theta)) + Quaternion::i() * std::sin(theta)) * r, n);
    test::CMat g(m * m);
    const test::CMat ca = test::cmat_ladder_a(m);
    const test::CMat ca2 = test::cmat_mul(ca, ca, m);
    const std::complex<double> pc = std::polar(r, theta);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            g[i * m + j] = 0.5 * (pc * std::conj(ca2[j * m + i]) - std::conj(pc) * ca2[i * m + j]);
    const test::CMat u = test::expm_antihermitian_eig(g, m);
    for (std::size_t k = 0; k < 32; ++k) {
        CHECK(std::fabs(w[k].w - u[k * m].real()) <= 1e-9);
        CHECK(std::fabs(w[k].x - u[k * m].imag()) <= 1e-9);
    }
}

TEST_CASE("squeezed states in both operator orders") {
    const std::size_t n = 64;
    const Quaternion q(0.3, 0.8, 0.0, 0.0);
    const Quaternion p = Quaternion::j() * 0.5;

    CHECK(norm(squeezed_sd(q, Quaternion::zero(), n) - coherent(q, n).vector) == 0.0);
    CHECK(norm(squeezed_ds(q, Quaternion::zero(), n) - coherent(q, n).vector) <= 1e-9);
    CHECK(norm(squeezed_sd(Quaternion::zero(), p, n) - pure_squeezed(p, n)) <= 1e-12);
    CHECK(norm(squeezed_ds(Quaternion::zero(), p, n) - pure_squeezed(p, n)) == 0.0);

    test::Rng rng;
    for (int s = 0; s < 10; ++s) {
        const Quaternion qq = rng.quaternion(0.5), pp = rng.quaternion(0.5);
        CHECK(std::fabs(norm(squeezed_sd(qq, pp, n)) - 1.0) <= 1e-9);
        CHECK(std::fabs(norm(squeezed_ds(qq, pp, n)) - 1.0) <= 1e-9);
    }

    // operator orders disagree for noncommuting parameters
    CHECK(norm(squeezed_sd(q, p, n) - squeezed_ds(q, p, n)) > 1e-3);
}

TEST_CASE("su(1,1) generators") {
    const std::size_t n = 32;
    const Su11Generators g = su11_generators(n);
    const FockVector ground = apply(g.k_zero, FockVector::basis_state(n, 0));
    CHECK(ground[0] == Quaternion(0.25));
    const std::size_t safe = n - 4;
    CHECK(block_dev(commutator(g.k_zero, g.k_plus), g.k_plus, safe) <= 1e-12);
    CHECK(block_dev(commutator(g.k_zero, g.k_minus), g.k_minus * -1.0, safe) <= 1e-12);
    CHECK(block_dev(commutator(g.k_plus, g.k_minus), g.k_zero * -2.0, safe) <= 1e-12);
}

TEST_CASE("fermionic pair") {
    const FermionicPair at_zero = fermionic(Quaternion::zero());
    CHECK(norm(at_zero.eta0 - FockVector::basis_state(2, 0)) == 0.0);
    CHECK(norm(at_zero.eta1 - FockVector::basis_state(2, 1)) == 0.0);

    // two-level anticommutation backdrop
    const FockOperator a = ladder_a(2), adag = ladder_adag(2);
    CHECK(max_abs(anticommutator(a, adag) - FockOperator::identity(2)) == 0.0);
    CHECK(max_abs(compose(a, a)) == 0.0);

    test::Rng rng;
    for (int s = 0; s < 300; ++s) {
        const Quaternion q = rng.quaternion(2.5);  // reaches past pi
        const FermionicPair pair = fermionic(q);
        CHECK(std::fabs(norm(pair.eta0) - 1.0) <= 1e-15);
        CHECK(std::fabs(norm(pair.eta1) - 1.0) <= 1e-15);
        CHECK(abs(inner(pair.eta0, pair.eta1)) == 0.0);

        const FockOperator gen = left_scale(q, adag) - left_scale(conj(q), a);
        CHECK(max_abs(compose(gen, gen) + FockOperator::identity(2) * norm_sq(q)) <= 1e-13);
        const FockOperator u = expm(gen);
        CHECK(norm(apply(u, FockVector::basis_state(2, 0)) - pair.eta0) <= 1e-13);
        CHECK(norm(apply(u, FockVector::basis_state(2, 1)) - pair.eta1) <= 1e-13);
    }
}

}  // TEST_SUITE
