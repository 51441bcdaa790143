#include <doctest.h>

#include <cmath>

#include "qfock/quaternion.hpp"
#include "support.hpp"

using namespace qfock;

TEST_SUITE("quaternion") {

TEST_CASE("hamilton products of the units") {
    CHECK(Quaternion::i() * Quaternion::j() == Quaternion::k());
    CHECK(Quaternion::j() * Quaternion::i() == -Quaternion::k());
    CHECK(Quaternion::j() * Quaternion::k() == Quaternion::i());
    CHECK(Quaternion::k() * Quaternion::j() == -Quaternion::i());
    CHECK(Quaternion::k() * Quaternion::i() == Quaternion::j());
    CHECK(Quaternion::i() * Quaternion::k() == -Quaternion::j());
    CHECK(Quaternion::i() * Quaternion::i() == -Quaternion::one());
}

TEST_CASE("identity and a frozen product") {
    test::Rng rng;
    const Quaternion q = rng.quaternion(2.0);
    CHECK(Quaternion::one() * q == q);
    // (1+i)(1+j) = 1+i+j+k
    const Quaternion got = Quaternion(1, 1, 0, 0) * Quaternion(1, 0, 1, 0);
    CHECK(got == Quaternion(1, 1, 1, 1));
}

TEST_CASE("product agrees with the real-matrix route") {
    test::Rng rng;
    for (int s = 0; s < 500; ++s) {
        const Quaternion p = rng.quaternion(2.0), q = rng.quaternion(2.0);
        CHECK(abs(p * q - test::mul_via_real_matrix(p, q)) <= 1e-14);
    }
}

TEST_CASE("norm values and multiplicativity") {
    CHECK(abs(Quaternion::i()) == 1.0);
    CHECK(abs(Quaternion(1, 1, 1, 1)) == 2.0);
    CHECK(abs(Quaternion::zero()) == 0.0);
    test::Rng rng;
    for (int s = 0; s < 2000; ++s) {
        const Quaternion p = rng.quaternion(1.5), q = rng.quaternion(1.5);
        CHECK(std::fabs(abs(p * q) - abs(p) * abs(q)) <= 1e-12);
        CHECK(abs(conj(p * q) - conj(q) * conj(p)) <= 1e-13);
        CHECK(conj(conj(p)) == p);
    }
}

TEST_CASE("matrix representation") {
    const ComplexMatrix2 mi = to_matrix(Quaternion::i());
    CHECK(mi.m00 == Complex(0, 0));
    CHECK(mi.m01 == Complex(0, 1));
    CHECK(mi.m10 == Complex(0, 1));
    CHECK(mi.m11 == Complex(0, 0));
    const ComplexMatrix2 m1 = to_matrix(Quaternion::one());
    CHECK(m1.m00 == Complex(1, 0));
    CHECK(m1.m01 == Complex(0, 0));

    test::Rng rng;
    for (int s = 0; s < 500; ++s) {
        const Quaternion p = rng.quaternion(1.5), q = rng.quaternion(1.5);
        CHECK(max_abs(to_matrix(p * q) - to_matrix(p) * to_matrix(q)) <= 1e-14);
        CHECK(max_abs(to_matrix(conj(p)) - to_matrix(p).adjoint()) <= 1e-15);
        CHECK(abs(from_matrix(to_matrix(p)) - p) == 0.0);
    }
}

TEST_CASE("from_matrix rejects shapes outside the image") {
    ComplexMatrix2 m = to_matrix(Quaternion(1, 2, 3, 4));
    m.m11 += Complex(1e-6, 0);
    CHECK_THROWS_AS(from_matrix(m), MalformedMatrix);
    CHECK_NOTHROW(from_matrix(m, 1e-3));
}

TEST_CASE("polar form") {
    const PolarForm p1 = polar(Quaternion::one());
    CHECK(p1.r == doctest::Approx(1.0));
    CHECK(p1.theta == doctest::Approx(0.0));

    const PolarForm pi = polar(Quaternion::i());
    CHECK(pi.r == doctest::Approx(1.0));
    CHECK(pi.theta == doctest::Approx(M_PI / 2));
    CHECK(pi.phi == doctest::Approx(M_PI / 2));
    CHECK(pi.psi == doctest::Approx(0.0));

    test::Rng rng;
    for (int s = 0; s < 2000; ++s) {
        const Quaternion q = rng.quaternion(2.0);
        const PolarForm p = polar(q);
        CHECK(abs(reconstruct(p) - q) <= 1e-12);
        CHECK(p.theta >= 0.0);
        CHECK(p.theta <= M_PI);
        CHECK(p.phi >= 0.0);
        CHECK(p.phi <= M_PI);
        CHECK(p.psi >= 0.0);
        CHECK(p.psi < 2 * M_PI);
        // direction matrix squares to the identity and is self-adjoint
        CHECK(max_abs(p.sigma_n * p.sigma_n - ComplexMatrix2::identity()) <= 1e-14);
        CHECK(max_abs(p.sigma_n - p.sigma_n.adjoint()) <= 1e-15);
    }
}

TEST_CASE("polar degeneracies are deterministic") {
    const PolarForm zero = polar(Quaternion::zero());
    CHECK(zero.r == 0.0);
    CHECK(zero.theta == 0.0);
    CHECK(zero.phi == 0.0);
    CHECK(zero.psi == 0.0);
    const PolarForm neg = polar(Quaternion(-3.0));
    CHECK(neg.theta == doctest::Approx(M_PI));
    CHECK(neg.phi == 0.0);
    CHECK(abs(reconstruct(neg) - Quaternion(-3.0)) <= 1e-15);
}

TEST_CASE("exponential") {
    CHECK(qexp(Quaternion::zero()) == Quaternion::one());
    CHECK(abs(qexp(Quaternion::i() * M_PI) + Quaternion::one()) <= 1e-15);
    CHECK(abs(qexp(Quaternion::j() * (M_PI / 2)) - Quaternion::j()) <= 1e-15);
    test::Rng rng;
    for (int s = 0; s < 200; ++s) {
        const Quaternion q = rng.quaternion(1.5);
        CHECK(abs(qexp(q) - test::qexp_series(q)) <= 1e-13);
    }
}

TEST_CASE("ordered exponential") {
    test::Rng rng;
    // real first factor collapses to the plain exponential
    for (int s = 0; s < 100; ++s) {
        const double p = rng.real(2.0);
        const Quaternion q = rng.quaternion(1.0);
        CHECK(abs(star_exp(Quaternion(p), q) - qexp(q * p)) <= 1e-13);
    }
    // shared slice collapses too
    for (int s = 0; s < 100; ++s) {
        const Quaternion axis = rng.unit_imaginary();
        const Quaternion p = Quaternion(rng.real()) + axis * rng.real();
        const Quaternion q = Quaternion(rng.real()) + axis * rng.real();
        CHECK(abs(star_exp(p, q) - qexp(p * q)) <= 1e-12);
    }
    // frozen cross-slice value: sum of i^m j^m / m! = cosh 1 + k sinh 1
    const Quaternion got = star_exp(Quaternion::i(), Quaternion::j());
    CHECK(abs(got - (Quaternion(std::cosh(1.0)) + Quaternion::k() * std::sinh(1.0))) <= 1e-14);
    // and it differs from the plain exponential of ij = k
    CHECK(abs(got - qexp(Quaternion::k())) > 0.5);
}

TEST_CASE("slice decomposition") {
    const SliceElement s1 = slice_decompose(Quaternion(3, 4, 0, 0));
    CHECK(s1.x == 3.0);
    CHECK(s1.y == 4.0);
    CHECK(abs(s1.axis - Quaternion::i()) == 0.0);

    const SliceElement s2 = slice_decompose(Quaternion(1, 0, 1, 1));
    CHECK(s2.x == 1.0);
    CHECK(s2.y == doctest::Approx(std::sqrt(2.0)));
    CHECK(abs(s2.value() - Quaternion(1, 0, 1, 1)) <= 1e-15);

    const SliceElement sr = slice_decompose(Quaternion(2.5));
    CHECK(sr.y == 0.0);
    CHECK(abs(sr.axis - Quaternion::i()) == 0.0);

    test::Rng rng;
    for (int s = 0; s < 500; ++s) {
        const SliceElement e = slice_decompose(rng.quaternion(2.0));
        CHECK(e.y >= 0.0);
        CHECK(abs(e.axis * e.axis + Quaternion::one()) <= 1e-14);
    }
    // same axis commutes, different axes need not
    const Quaternion a = Quaternion(1.0) + Quaternion::j() * 2.0;
    const Quaternion b = Quaternion(-0.5) + Quaternion::j() * 0.25;
    CHECK(abs(a * b - b * a) <= 1e-15);
    const Quaternion c = Quaternion(0.5) + Quaternion::k() * 1.5;
    CHECK(abs(a * c - c * a) > 1e-2);
}

}  // TEST_SUITE
