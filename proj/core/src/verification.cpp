#include "qfock/verification.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <random>

#include "qfock/observables.hpp"
#include "qfock/quadrature.hpp"
#include "qfock/slice_identities.hpp"
#include "qfock/states.hpp"

namespace qfock {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Sampler {
    std::mt19937_64 engine;
    std::uniform_real_distribution<double> unit{-1.0, 1.0};

    explicit Sampler(std::uint64_t seed) : engine(seed) {}

    Quaternion quaternion(double scale) {
        return {scale * unit(engine), scale * unit(engine), scale * unit(engine),
                scale * unit(engine)};
    }

    Quaternion unit_imaginary() {
        for (;;) {
            Quaternion v{0.0, unit(engine), unit(engine), unit(engine)};
            const double a = abs(v);
            if (a > 1e-3) return v / a;
        }
    }

    FockVector vector(std::size_t n) {
        FockVector v(n);
        for (std::size_t k = 0; k < n; ++k) v[k] = quaternion(1.0);
        return v;
    }
};

class Suite {
public:
    explicit Suite(const VerifyOptions& options) : opt_(options), rng_(options.seed) {}

    VerifyReport run();

private:
    void check(const std::string& name, double bound, const std::function<double()>& dev,
               bool lower_bound = false) {
        IdentityCheck c;
        c.name = name;
        c.tolerance = lower_bound ? bound : std::min(bound, opt_.tolerance);
        c.lower_bound = lower_bound;
        try {
            c.deviation = dev();
            c.pass = lower_bound ? c.deviation > c.tolerance : c.deviation <= c.tolerance;
        } catch (const std::exception& e) {
            c.deviation = kInf;
            c.pass = false;
            c.note = e.what();
        }
        report_.checks.push_back(std::move(c));
    }

    void algebra_layer();
    void left_multiplication();
    void ladder_layer();
    void displacement_layer();
    void ci_layer();
    void squeeze_layer();
    void pure_squeezed_layer();
    void squeezed_states_layer();
    void slice_layer();
    void fermionic_layer();
    void quadrature_layer();
    void erratum_layer();

    VerifyOptions opt_;
    Sampler rng_;
    VerifyReport report_;
};

VerifyReport Suite::run() {
    report_.options = opt_;
    algebra_layer();
    left_multiplication();
    ladder_layer();
    displacement_layer();
    ci_layer();
    squeeze_layer();
    pure_squeezed_layer();
    squeezed_states_layer();
    slice_layer();
    fermionic_layer();
    quadrature_layer();
    erratum_layer();
    report_.all_pass = true;
    for (const auto& c : report_.checks) report_.all_pass = report_.all_pass && c.pass;
    return report_;
}

void Suite::algebra_layer() {
    check("quat.multiplicative_norm", 1e-12, [&] {
        double dev = 0.0;
        for (std::size_t s = 0; s < opt_.samples; ++s) {
            const Quaternion p = rng_.quaternion(1.5), q = rng_.quaternion(1.5);
            dev = std::max(dev, std::fabs(abs(p * q) - abs(p) * abs(q)));
        }
        return dev;
    });
    check("quat.conjugation_antihomomorphism", 1e-13, [&] {
        double dev = 0.0;
        for (std::size_t s = 0; s < opt_.samples; ++s) {
            const Quaternion p = rng_.quaternion(1.5), q = rng_.quaternion(1.5);
            dev = std::max(dev, abs(conj(p * q) - conj(q) * conj(p)));
        }
        return dev;
    });
    check("quat.matrix_representation", 1e-13, [&] {
        double dev = 0.0;
        for (std::size_t s = 0; s < opt_.samples; ++s) {
            const Quaternion p = rng_.quaternion(1.5), q = rng_.quaternion(1.5);
            dev = std::max(dev, max_abs(to_matrix(p * q) - to_matrix(p) * to_matrix(q)));
            dev = std::max(dev, max_abs(to_matrix(conj(p)) - to_matrix(p).adjoint()));
            dev = std::max(dev, abs(from_matrix(to_matrix(p)) - p));
        }
        return dev;
    });
    check("quat.polar_roundtrip", 1e-12, [&] {
        double dev = 0.0;
        for (std::size_t s = 0; s < opt_.samples; ++s) {
            const Quaternion q = rng_.quaternion(2.0);
            dev = std::max(dev, abs(reconstruct(polar(q)) - q));
        }
        return dev;
    });
    check("quat.star_exp_slice_collapse", 1e-12, [&] {
        double dev = 0.0;
        for (std::size_t s = 0; s < opt_.samples / 10 + 1; ++s) {
            const Quaternion axis = rng_.unit_imaginary();
            const Quaternion p = Quaternion(rng_.unit(rng_.engine)) + axis * rng_.unit(rng_.engine);
            const Quaternion q = Quaternion(rng_.unit(rng_.engine)) + axis * rng_.unit(rng_.engine);
            dev = std::max(dev, abs(star_exp(p, q) - qexp(p * q)));
        }
        return dev;
    });
}

void Suite::left_multiplication() {
    const std::size_t n = std::min<std::size_t>(opt_.truncation, 24);
    check("lmul.vector_laws", 1e-13, [&, n] {
        double dev = 0.0;
        for (std::size_t s = 0; s < 50; ++s) {
            const Quaternion q = rng_.quaternion(1.0), p = rng_.quaternion(1.0);
            const FockVector f = rng_.vector(n), g = rng_.vector(n);
            // distributivity over vectors and right scalars
            dev = std::max(dev, norm(left_scale(q, f + g) - (left_scale(q, f) + left_scale(q, g))));
            dev = std::max(dev,
                           norm(left_scale(q, right_scale(f, p)) - right_scale(left_scale(q, f), p)));
            // norm scaling and composition
            dev = std::max(dev, std::fabs(norm(left_scale(q, f)) - abs(q) * norm(f)));
            dev = std::max(dev, norm(left_scale(q, left_scale(p, f)) - left_scale(q * p, f)));
            // pairing with the inner product
            dev = std::max(dev, abs(inner(left_scale(conj(q), f), g) - inner(f, left_scale(q, g))));
            // additivity in the scalar
            dev = std::max(dev, norm(left_scale(p + q, f) - (left_scale(p, f) + left_scale(q, f))));
            // inner-product axioms
            dev = std::max(dev, abs(conj(inner(f, g)) - inner(g, f)));
            dev = std::max(dev, abs(inner(right_scale(f, q), g) - conj(q) * inner(f, g)));
            dev = std::max(dev, abs(inner(f, right_scale(g, q)) - inner(f, g) * q));
        }
        return dev;
    });
    check("lmul.real_and_basis_exact", 0.0, [&, n] {
        double dev = 0.0;
        for (std::size_t s = 0; s < 50; ++s) {
            const double r = rng_.unit(rng_.engine);
            const FockVector f = rng_.vector(n);
            dev = std::max(dev, norm(left_scale(Quaternion(r), f) - right_scale(f, Quaternion(r))));
            const Quaternion q = rng_.quaternion(1.0);
            const FockVector basis = FockVector::basis_state(n, s % n);
            dev = std::max(dev, norm(left_scale(q, basis) - right_scale(basis, q)));
        }
        return dev;
    });
    check("lmul.operator_adjoints", 1e-13, [&, n] {
        double dev = 0.0;
        const FockOperator a = ladder_a(n);
        for (std::size_t s = 0; s < 50; ++s) {
            const Quaternion q = rng_.quaternion(1.0);
            FockOperator m(n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) m(i, j) = rng_.quaternion(1.0);
            dev = std::max(dev, max_abs(adjoint(left_scale(q, m)) - right_scale(adjoint(m), conj(q))));
            dev = std::max(dev, max_abs(adjoint(right_scale(m, q)) - left_scale(conj(q), adjoint(m))));
            dev = std::max(dev, max_abs(left_scale(q, a) - right_scale(a, q)));
        }
        return dev;
    });
}

void Suite::ladder_layer() {
    const std::size_t n = opt_.truncation;
    check("ladder.commutator_identity", 1e-12, [&, n] {
        return block_dev(commutator(ladder_a(n), ladder_adag(n)), FockOperator::identity(n),
                         n - 2);
    });
    check("ladder.adjoint_pair", 0.0,
          [&, n] { return max_abs(adjoint(ladder_adag(n)) - ladder_a(n)); });
    check("su11.commutators", 1e-12, [&, n] {
        if (n < 8) throw TruncationTooSmall("needs at least 8 levels");
        const Su11Generators g = su11_generators(n);
        const std::size_t safe = n - 4;
        double dev = block_dev(commutator(g.k_zero, g.k_plus), g.k_plus, safe);
        dev = std::max(dev, block_dev(commutator(g.k_zero, g.k_minus), g.k_minus * -1.0, safe));
        dev = std::max(dev, block_dev(commutator(g.k_plus, g.k_minus), g.k_zero * -2.0, safe));
        return dev;
    });
    check("hamiltonian.quadrature_form", 1e-12, [&, n] {
        const auto [q, p] = position_momentum(n, Quaternion::i());
        const FockOperator h = (compose(q, q) + compose(p, p)) * 0.5;
        return block_dev(h, hamiltonian(n), n - 2);
    });
    check("embed.homomorphism", 1e-12, [&, n] {
        const FockOperator a = ladder_a(n), adag = ladder_adag(n);
        EmbeddedOperator ea = embed(a), ead = embed(adag);
        EmbeddedOperator prod{ea.m * ead.m, ea.basis};
        double dev = block_dev(unembed(prod), compose(a, adag), n);
        dev = std::max(dev, block_dev(unembed(embed(compose(a, adag))), compose(a, adag), n));
        return dev;
    });
    check("expm.zero_is_identity", 1e-15,
          [&, n] { return block_dev(expm(FockOperator(n)), FockOperator::identity(n), n); });
}

void Suite::displacement_layer() {
    const std::size_t n = opt_.truncation;
    const Quaternion q = Quaternion(0.6, 0.7, -0.5, 0.3);  // |q| ~ 1.07
    check("displacement.unitarity", 1e-8, [&, n] {
        const Quaternion big = rng_.unit_imaginary() * 2.0;
        const FockOperator d = displacement(big, n);
        return block_dev(compose(adjoint(d), d), FockOperator::identity(n), n);
    });
    check("displacement.ladder_conjugation", 1e-7, [&, n, q] {
        const std::size_t block = conjugation_safe_block(n, 0.0, abs(q));
        if (block < 2) throw TruncationTooSmall("no leak-free block");
        const FockOperator d = displacement(q, n);
        const FockOperator a = ladder_a(n), adag = ladder_adag(n);
        const FockOperator lhs_a = compose(adjoint(d), compose(a, d));
        const FockOperator rhs_a = a + left_scale(q, FockOperator::identity(n));
        const FockOperator lhs_ad = compose(adjoint(d), compose(adag, d));
        const FockOperator rhs_ad = adag + left_scale(conj(q), FockOperator::identity(n));
        return std::max(block_dev(lhs_a, rhs_a, block), block_dev(lhs_ad, rhs_ad, block));
    });
    check("displacement.generates_coherent", 1e-9, [&, n, q] {
        const FockVector from_op = apply(displacement(q, n), FockVector::basis_state(n, 0));
        return norm(from_op - coherent(q, n).vector);
    });
    check("coherent.lowering_eigenrelation", 1e-9, [&, n, q] {
        const FockVector v = coherent(q, n).vector;
        const FockVector lhs = apply(ladder_a(n), v);
        const FockVector rhs = left_scale(q, v);
        double dev = 0.0;
        for (std::size_t k = 0; k + 3 < n; ++k) dev = std::max(dev, abs(lhs[k] - rhs[k]));
        return dev;
    });
    check("coherent.moment_table", 1e-9, [&, n, q] {
        const FockVector v = coherent(q, n).vector;
        const FockOperator a = ladder_a(n), adag = ladder_adag(n);
        double dev = abs(expectation(v, a) - q);
        dev = std::max(dev, abs(expectation(v, adag) - conj(q)));
        dev = std::max(dev, abs(expectation(v, compose(a, a)) - q * q));
        dev = std::max(dev, abs(expectation(v, compose(adag, adag)) - conj(q) * conj(q)));
        dev = std::max(dev, abs(expectation(v, compose(a, adag)) - Quaternion(1.0 + norm_sq(q))));
        dev = std::max(dev, abs(expectation(v, compose(adag, a)) - Quaternion(norm_sq(q))));
        return dev;
    });
    check("coherent.position_variance", 1e-9, [&, n, q] {
        return std::fabs(heisenberg_bounds(q, n).var_q - 0.5);
    });
    check("heisenberg.product_bound", 1e-9, [&, n] {
        double worst = 0.0;
        for (const double scale : {0.3, 0.8}) {
            for (const Quaternion axis : {Quaternion::j(), Quaternion::k()}) {
                const Quaternion qq = axis * scale;
                const HeisenbergReport rep = heisenberg_bounds(qq, n);
                worst = std::max(worst, rep.bound_gap - norm_sq(qq));
            }
        }
        return std::max(worst, 0.0);
    });
    check("heisenberg.commutator_half", 1e-9, [&, n] {
        const Quaternion qq = Quaternion::j() * 0.3;
        const HeisenbergReport rep = heisenberg_bounds(qq, n);
        return std::fabs(rep.commutator_half - 0.5 * ci_series(qq, Quaternion::i()).r);
    });
}

void Suite::ci_layer() {
    check("ci.antisymmetry_and_bound", 1e-13, [&] {
        double dev = 0.0;
        for (std::size_t s = 0; s < opt_.samples; ++s) {
            const Quaternion q = rng_.quaternion(1.7);  // |q| up to ~3.4
            const CiValue ci = ci_series(q, Quaternion::i());
            dev = std::max(dev, abs(conj(ci.value) + ci.value));
            dev = std::max(dev, std::max(0.0, ci.r - 1.0));
        }
        return dev;
    });
    check("ci.slice_collapse", 1e-14, [&] {
        double dev = 0.0;
        for (std::size_t s = 0; s < 200; ++s) {
            const Quaternion q(2.0 * rng_.unit(rng_.engine), 2.0 * rng_.unit(rng_.engine));
            dev = std::max(dev, abs(ci_series(q, Quaternion::i()).value - Quaternion::i()));
        }
        return dev;
    });
    check("ci.cross_slice_value", 1e-12, [&] {
        const CiValue ci = ci_series(Quaternion::j(), Quaternion::i());
        return abs(ci.value - Quaternion::i() * std::exp(-2.0));
    });
}

void Suite::squeeze_layer() {
    const std::size_t n = opt_.truncation;
    const Quaternion p04 = (Quaternion(std::cos(0.9)) + Quaternion::j() * std::sin(0.9)) * 0.4;
    check("squeeze.unitarity", 1e-8, [&, n] {
        const FockOperator s = squeeze(rng_.unit_imaginary() * 1.25, n);
        return block_dev(compose(adjoint(s), s), FockOperator::identity(n), n);
    });
    check("squeeze.inverse_negation", 1e-10, [&, n] {
        const Quaternion p = rng_.quaternion(0.4);
        return max_abs(adjoint(squeeze(p, n)) - squeeze(-p, n));
    });
    check("squeeze.generator_forms", 1e-12, [&, n] {
        const Quaternion p = rng_.quaternion(0.4);
        return max_abs(squeeze(p, n) - squeeze_su11_form(p, n));
    });
    check("squeeze.ladder_conjugation", 1e-7, [&, n, p04] {
        const std::size_t block = conjugation_safe_block(n, abs(p04), 0.0);
        if (block < 2) throw TruncationTooSmall("no leak-free block");
        const FockOperator s = squeeze(p04, n);
        const FockOperator a = ladder_a(n), adag = ladder_adag(n);
        const double ap = abs(p04);
        const Quaternion ip = unit_phase(p04);
        const FockOperator lhs_a = compose(adjoint(s), compose(a, s));
        const FockOperator rhs_a = a * std::cosh(ap) + left_scale(ip * std::sinh(ap), adag);
        const FockOperator lhs_ad = compose(adjoint(s), compose(adag, s));
        const FockOperator rhs_ad = adag * std::cosh(ap) + left_scale(conj(ip) * std::sinh(ap), a);
        return std::max(block_dev(lhs_a, rhs_a, block), block_dev(lhs_ad, rhs_ad, block));
    });
    check("squeeze.number_conjugation", 1e-7, [&, n, p04] {
        const std::size_t block = conjugation_safe_block(n, abs(p04), 0.0);
        if (block < 2) throw TruncationTooSmall("no leak-free block");
        const FockOperator s = squeeze(p04, n);
        const FockOperator a = ladder_a(n), adag = ladder_adag(n);
        const double ap = abs(p04);
        const double ch = std::cosh(ap), sh = std::sinh(ap);
        const Quaternion ip = unit_phase(p04);
        const FockOperator lhs = compose(adjoint(s), compose(number_op(n), s));
        const FockOperator rhs = compose(adag, a) * (ch * ch) + compose(a, adag) * (sh * sh) +
                                 left_scale(conj(ip) * (sh * ch), compose(a, a)) +
                                 left_scale(ip * (sh * ch), compose(adag, adag));
        return block_dev(lhs, rhs, block);
    });
}

void Suite::pure_squeezed_layer() {
    const std::size_t n = opt_.truncation;
    const Quaternion p = (Quaternion(std::cos(1.1)) + Quaternion::k() * std::sin(1.1)) * 0.5;
    check("pure_squeezed.moment_table", 1e-7, [&, n, p] {
        const FockVector v = pure_squeezed(p, n);
        const FockOperator a = ladder_a(n), adag = ladder_adag(n);
        const double ap = abs(p);
        const double ch = std::cosh(ap), sh = std::sinh(ap);
        double dev = abs(expectation(v, a));
        dev = std::max(dev, abs(expectation(v, adag)));
        dev = std::max(dev, abs(expectation(v, compose(a, adag)) - Quaternion(ch * ch)));
        dev = std::max(dev, abs(expectation(v, compose(adag, a)) - Quaternion(sh * sh)));
        dev = std::max(dev, abs(expectation(v, compose(a, a)) - unit_phase(p) * (ch * sh)));
        dev = std::max(dev,
                       abs(expectation(v, compose(adag, adag)) - conj(unit_phase(p)) * (ch * sh)));
        return dev;
    });
    check("pure_squeezed.variance_product", 1e-6, [&, n, p] {
        const double theta = polar(p).theta;
        const double closed =
            (1.0 + std::pow(std::sinh(2.0 * abs(p)) * std::sin(theta), 2)) / 16.0;
        return std::fabs(squeeze_variance_product(p, n) - closed);
    });
    check("pure_squeezed.rotated_uv", 1e-6, [&, n, p] {
        const UvReport uv = rotated_quadratures(p, n);
        const double ap = abs(p);
        double dev = std::fabs(uv.product - 0.25);
        dev = std::max(dev, std::fabs(uv.du_sq - 0.25 * std::pow(std::cosh(ap) + std::sinh(ap), 2)));
        dev = std::max(dev, std::fabs(uv.dv_sq - 0.25 * std::pow(std::cosh(ap) - std::sinh(ap), 2)));
        dev = std::max(dev, abs(uv.mean_u));
        dev = std::max(dev, abs(uv.mean_v));
        return dev;
    });
    check("pure_squeezed.photon_statistics", 1e-6, [&, n, p] {
        const PhotonStats st = photon_stats(p, n);
        const double sh2 = std::pow(std::sinh(abs(p)), 2);
        double dev = std::fabs(st.mean_n - sh2);
        dev = std::max(dev, std::fabs(st.var_n - 2.0 * sh2 * (1.0 + sh2)));
        dev = std::max(dev, std::fabs(st.mandel_q - (1.0 + 2.0 * sh2)));
        return dev;
    });
    check("pure_squeezed.mandel_mean_relation", 1e-6, [&, n, p] {
        const PhotonStats st = photon_stats(p, n);
        return std::fabs(st.mandel_q - (1.0 + 2.0 * st.mean_n));
    });
    check("pure_squeezed.ideal_squeezing", 1e-7, [&, n] {
        const Quaternion ps = Quaternion::i() * 0.8;
        const FockVector v = pure_squeezed(ps, n);
        const double theta = polar(ps).theta;
        const Quaternion axis = slice_decompose(ps).axis;
        const Quaternion half = Quaternion(std::cos(0.5 * theta)) + axis * std::sin(0.5 * theta);
        const FockOperator a = ladder_a(n), adag = ladder_adag(n);
        const FockOperator u_op = (left_scale(conj(half), a) + left_scale(half, adag)) * 0.5;
        const FockOperator v_op =
            left_scale((axis * -0.5) * conj(half), a) + left_scale((axis * 0.5) * half, adag);
        const SqueezingVerdict verdict = is_squeezed(v, u_op, v_op);
        return verdict.squeezed && verdict.ideally_squeezed ? 0.0 : kInf;
    });
}

void Suite::squeezed_states_layer() {
    const std::size_t n = opt_.truncation;
    const Quaternion q(0.3, 0.8, 0.0, 0.0);
    const Quaternion p = Quaternion::j() * 0.5;
    check("squeezed.normalized_both_orders", 1e-9, [&, n, q, p] {
        const double nsd = norm(squeezed_sd(q, p, n));
        const double nds = norm(squeezed_ds(q, p, n));
        return std::max(std::fabs(nsd - 1.0), std::fabs(nds - 1.0));
    });
    check("squeezed.order_witness", 1e-3, [&, n, q, p] {
        return norm(squeezed_sd(q, p, n) - squeezed_ds(q, p, n));
    }, /*lower_bound=*/true);
    check("squeezed.off_slice_obstruction", 1e-3, [&, n] {
        return noncommutativity_witness(n).dev;
    }, /*lower_bound=*/true);
}

void Suite::slice_layer() {
    const std::size_t n = opt_.truncation;
    const Quaternion axis = Quaternion::j();
    const Quaternion p = (Quaternion(std::cos(1.1)) + axis * std::sin(1.1)) * 0.35;
    const Quaternion q = (Quaternion(std::cos(0.4)) + axis * std::sin(0.4)) * 0.7;
    check("slice.two_photon_forms", 1e-7, [&, n, p, q] {
        const SlicePair sp = slice_pair(p, q);
        double dev = two_photon_conjugation(sp, ConjugatedOp::Lower, n).max_dev;
        dev = std::max(dev, two_photon_conjugation(sp, ConjugatedOp::Raise, n).max_dev);
        dev = std::max(dev, two_photon_conjugation(sp, ConjugatedOp::Number, n).max_dev);
        return dev;
    });
    check("slice.squeezed_coherent_forms", 1e-7, [&, n, p, q] {
        const SlicePair sp = slice_pair(p, q);
        double dev = squeezed_coherent_conjugation(sp, ConjugatedOp::Lower, n).max_dev;
        dev = std::max(dev, squeezed_coherent_conjugation(sp, ConjugatedOp::Raise, n).max_dev);
        dev = std::max(dev, squeezed_coherent_conjugation(sp, ConjugatedOp::Number, n).max_dev);
        return dev;
    });
    check("slice.vacuum_first_moment", 1e-8, [&, n, p, q] {
        const FockVector vac = FockVector::basis_state(n, 0);
        const FockOperator sd = compose(squeeze(p, n), displacement(q, n));
        const Quaternion got = inner(vac, apply(compose(adjoint(sd), compose(ladder_a(n), sd)), vac));
        const Quaternion want =
            q * std::cosh(abs(p)) + unit_phase(p) * conj(q) * std::sinh(abs(p));
        return abs(got - want);
    });
}

void Suite::fermionic_layer() {
    check("fermionic.anticommutation", 0.0, [&] {
        const FockOperator a = ladder_a(2), adag = ladder_adag(2);
        double dev = max_abs(anticommutator(a, adag) - FockOperator::identity(2));
        dev = std::max(dev, max_abs(compose(a, a)));
        dev = std::max(dev, max_abs(compose(adag, adag)));
        return dev;
    });
    check("fermionic.pauli_commutators", 0.0, [&] {
        const FockOperator a = ladder_a(2), adag = ladder_adag(2);
        const FockOperator h = compose(adag, a) - FockOperator::identity(2) * 0.5;
        double dev = max_abs(commutator(adag, a) - h * 2.0);
        dev = std::max(dev, max_abs(commutator(h, a) + a));
        dev = std::max(dev, max_abs(commutator(h, adag) - adag));
        return dev;
    });
    check("fermionic.generator_square", 1e-13, [&] {
        double dev = 0.0;
        for (std::size_t s = 0; s < 100; ++s) {
            const Quaternion q = rng_.quaternion(2.0);
            const FockOperator gen =
                left_scale(q, ladder_adag(2)) - left_scale(conj(q), ladder_a(2));
            dev = std::max(dev,
                           max_abs(compose(gen, gen) + FockOperator::identity(2) * norm_sq(q)));
        }
        return dev;
    });
    check("fermionic.closed_form_vs_expm", 1e-13, [&] {
        double dev = 0.0;
        for (std::size_t s = 0; s < 200; ++s) {
            const Quaternion q = rng_.quaternion(2.5);  // |q| past pi
            const FermionicPair pair = fermionic(q);
            const FockOperator gen =
                left_scale(q, ladder_adag(2)) - left_scale(conj(q), ladder_a(2));
            const FockOperator u = expm(gen);
            dev = std::max(dev, norm(apply(u, FockVector::basis_state(2, 0)) - pair.eta0));
            dev = std::max(dev, norm(apply(u, FockVector::basis_state(2, 1)) - pair.eta1));
        }
        return dev;
    });
    check("fermionic.orthonormal_pair", 1e-15, [&] {
        double dev = 0.0;
        for (std::size_t s = 0; s < 200; ++s) {
            const FermionicPair pair = fermionic(rng_.quaternion(2.0));
            dev = std::max(dev, std::fabs(norm(pair.eta0) - 1.0));
            dev = std::max(dev, std::fabs(norm(pair.eta1) - 1.0));
            dev = std::max(dev, abs(inner(pair.eta0, pair.eta1)));
        }
        return dev;
    });
}

void Suite::quadrature_layer() {
    check("quadrature.gaussian_mass", 1e-10, [&] {
        return std::fabs(QuadratureGrid::gram_default().total_weight() - 1.0);
    });
    check("quadrature.gram_orthonormality", 1e-8, [&] {
        const FockOperator g = gram_matrix(8, QuadratureGrid::gram_default());
        return block_dev(g, FockOperator::identity(9), 9);
    });
    check("quadrature.resolution_identity", 1e-3, [&] {
        return resolution_of_identity(6, QuadratureGrid::resolution_default(), opt_.truncation)
            .max_dev;
    });
    check("quadrature.resolution_radial_doubling", 10.0, [&] {
        const auto coarse = QuadratureGrid::make(24, 16, 12, 16, 16.0, MeasureVariant::Plain);
        const double dev_coarse =
            resolution_of_identity(6, coarse, opt_.truncation).max_dev;
        const double dev_fine =
            resolution_of_identity(6, QuadratureGrid::resolution_default(), opt_.truncation)
                .max_dev;
        return dev_coarse / dev_fine;
    }, /*lower_bound=*/true);
    check("quadrature.resolution_squeeze_invariance", 1e-10, [&] {
        const std::size_t n = 16;
        const auto grid = QuadratureGrid::make(16, 32, 6, 32, 12.0, MeasureVariant::Plain);
        const ResolutionResult res = resolution_of_identity(n - 1, grid, n);
        const FockOperator s = squeeze(Quaternion::i() * 0.5, n);
        const FockOperator conjugated = compose(s, compose(res.block, adjoint(s)));
        const double dev_after = frobenius(conjugated - FockOperator::identity(n));
        return std::fabs(dev_after - res.frobenius_dev) / res.frobenius_dev;
    });
}

void Suite::erratum_layer() {
    // printed even-level series: growing coefficient magnitudes at |p| = 1
    check("erratum.series_growth", 1.0, [&] {
        const double ap = 1.0;
        double ratio_min = kInf;
        double prev = 0.0;
        for (std::size_t m = 2; m <= 12; ++m) {
            double log_c = 0.25 * ap * ap + static_cast<double>(m) * ap * ap +
                           static_cast<double>(m) * std::log(ap) +
                           0.5 * std::lgamma(2.0 * static_cast<double>(m) + 1.0) -
                           static_cast<double>(m) * std::log(2.0) -
                           std::lgamma(static_cast<double>(m) + 1.0);
            if (m > 2) ratio_min = std::min(ratio_min, std::exp(log_c - prev));
            prev = log_c;
        }
        return ratio_min;
    }, /*lower_bound=*/true);
    // same series where it converges: norm far from one
    check("erratum.series_norm_mismatch", 0.1, [&] {
        const double ap = 0.5;
        double norm_sq_sum = 0.0;
        for (std::size_t m = 0; m <= 40; ++m) {
            const double log_c = 0.25 * ap * ap + static_cast<double>(m) * ap * ap +
                                 static_cast<double>(m) * std::log(ap) +
                                 0.5 * std::lgamma(2.0 * static_cast<double>(m) + 1.0) -
                                 static_cast<double>(m) * std::log(2.0) -
                                 std::lgamma(static_cast<double>(m) + 1.0);
            norm_sq_sum += std::exp(2.0 * log_c);
        }
        return std::fabs(std::sqrt(norm_sq_sum) - 1.0);
    }, /*lower_bound=*/true);
    // printed measure (no radial factor, constant 1/4pi) breaks orthonormality
    check("erratum.measure_normalization", 0.1, [&] {
        QuadratureGrid grid = QuadratureGrid::gram_default();
        std::vector<double> nodes, weights;
        gauss_legendre(48, 0.0, grid.r_max, nodes, weights);
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            grid.r_nodes[i] = nodes[i];
            grid.r_weights[i] =
                weights[i] * std::exp(-nodes[i] * nodes[i]) / (4.0 * M_PI);
        }
        const FockOperator g = gram_matrix(8, grid);
        // the derived measure passes; the printed one misses identity badly
        return block_dev(g, FockOperator::identity(9), 9);
    }, /*lower_bound=*/true);
}

}  // namespace

VerifyReport run_verification(const VerifyOptions& options) {
    if (options.truncation < 8) throw std::invalid_argument("truncation must be at least 8");
    if (!(options.tolerance > 0.0)) throw std::invalid_argument("tolerance must be positive");
    Suite suite(options);
    return suite.run();
}

}  // namespace qfock
