#include "qfock/slice_identities.hpp"

#include <cmath>
#include <string>

#include "qfock/states.hpp"

namespace qfock {

namespace {

bool parallel_to(const Quaternion& value, const Quaternion& axis) {
    // imaginary part must be a multiple of axis
    const Quaternion v = imag_part(value);
    const double vn = abs(v);
    if (vn <= 1e-12 * std::max(1.0, abs(value))) return true;
    const Quaternion unit = v / vn;
    return abs(unit - axis) <= 1e-10 || abs(unit + axis) <= 1e-10;
}

FockOperator scaled_identity(const Quaternion& q, std::size_t n) {
    return left_scale(q, FockOperator::identity(n));
}

// closed form for adj(D) adj(S) A S D with p, q treated as commuting
FockOperator two_photon_rhs(const Quaternion& p, const Quaternion& q, ConjugatedOp which,
                            std::size_t n) {
    const double ap = abs(p);
    const double ch = std::cosh(ap);
    const double sh = std::sinh(ap);
    const Quaternion ip = unit_phase(p);
    const FockOperator a = ladder_a(n);
    const FockOperator adag = ladder_adag(n);

    switch (which) {
        case ConjugatedOp::Lower:
            return a * ch + left_scale(ip * sh, adag) +
                   scaled_identity(q * ch + ip * conj(q) * sh, n);
        case ConjugatedOp::Raise:
            return adag * ch + left_scale(conj(ip) * sh, a) +
                   scaled_identity(conj(q) * ch + conj(ip) * q * sh, n);
        case ConjugatedOp::Number: {
            const double sh2 = std::sinh(2.0 * ap) * 0.5;
            const Quaternion q2 = q * q;
            const double qq = norm_sq(q);
            FockOperator r = (compose(adag, a) + left_scale(q, adag) + left_scale(conj(q), a) +
                              scaled_identity(Quaternion(qq), n)) *
                             (ch * ch);
            r += (left_scale(conj(ip), compose(a, a)) + left_scale(conj(ip) * q * 2.0, a) +
                  scaled_identity(conj(ip) * q2, n)) *
                 sh2;
            r += (left_scale(ip, compose(adag, adag)) + left_scale(ip * conj(q) * 2.0, adag) +
                  scaled_identity(ip * conj(q2), n)) *
                 sh2;
            r += (compose(a, adag) + left_scale(conj(q), a) + left_scale(q, adag) +
                  scaled_identity(Quaternion(qq), n)) *
                 (sh * sh);
            return r;
        }
    }
    throw std::logic_error("unreachable");
}

// closed form for adj(S) adj(D) A D S with p, q treated as commuting
FockOperator squeezed_coherent_rhs(const Quaternion& p, const Quaternion& q, ConjugatedOp which,
                                   std::size_t n) {
    const double ap = abs(p);
    const double ch = std::cosh(ap);
    const double sh = std::sinh(ap);
    const Quaternion ip = unit_phase(p);
    const FockOperator a = ladder_a(n);
    const FockOperator adag = ladder_adag(n);

    switch (which) {
        case ConjugatedOp::Lower:
            return a * ch + left_scale(ip * sh, adag) + scaled_identity(q, n);
        case ConjugatedOp::Raise:
            return adag * ch + left_scale(conj(ip) * sh, a) + scaled_identity(conj(q), n);
        case ConjugatedOp::Number: {
            const double sh2 = std::sinh(2.0 * ap) * 0.5;
            FockOperator r = compose(adag, a) * (ch * ch) + compose(a, adag) * (sh * sh);
            r += left_scale(ip * sh2, compose(adag, adag)) +
                 left_scale(conj(ip) * sh2, compose(a, a));
            r += left_scale(q * ch, adag) + left_scale(conj(q) * ch, a);
            r += left_scale(conj(ip) * q * sh, a) + left_scale(ip * conj(q) * sh, adag);
            r += scaled_identity(Quaternion(norm_sq(q)), n);
            return r;
        }
    }
    throw std::logic_error("unreachable");
}

FockOperator pick_operator(ConjugatedOp which, std::size_t n) {
    switch (which) {
        case ConjugatedOp::Lower:
            return ladder_a(n);
        case ConjugatedOp::Raise:
            return ladder_adag(n);
        case ConjugatedOp::Number:
            return number_op(n);
    }
    throw std::logic_error("unreachable");
}

FockOperator conjugate_by(const FockOperator& u, const FockOperator& op) {
    return compose(adjoint(u), compose(op, u));
}

}  // namespace

SlicePair slice_pair(const Quaternion& p, const Quaternion& q) {
    const SliceElement sp = slice_decompose(p);
    const SliceElement sq = slice_decompose(q);
    const bool p_real = sp.y <= 1e-14 * std::max(1.0, abs(p));
    const bool q_real = sq.y <= 1e-14 * std::max(1.0, abs(q));

    Quaternion axis = Quaternion::i();
    if (!p_real) {
        axis = sp.axis;
    } else if (!q_real) {
        axis = sq.axis;
    }
    if (!parallel_to(p, axis) || !parallel_to(q, axis)) {
        throw SliceMismatch("parameters lie on different slices");
    }
    return {axis, p, q};
}

std::size_t conjugation_safe_block(std::size_t n, double p_abs, double q_abs) {
    const double reach = 0.30 * static_cast<double>(n) /
                         std::pow(std::cosh(2.0 * p_abs), 1.5);
    const double k = std::floor(reach) - std::ceil(2.0 * q_abs) - 2.0;
    if (k < 2.0) return 0;
    return std::min(static_cast<std::size_t>(k), n >= 8 ? n - 8 : 0);
}

SliceConjugator::SliceConjugator(const SlicePair& sp, std::size_t n)
    : sp_(sp), n_(n), block_(conjugation_safe_block(n, abs(sp.p), abs(sp.q))) {
    if (block_ < 2) {
        throw TruncationTooSmall("no leak-free block at truncation " + std::to_string(n));
    }
    const FockOperator s = squeeze(sp.p, n);
    const FockOperator d = displacement(sp.q, n);
    sd_ = compose(s, d);
    ds_ = compose(d, s);
}

ConjugationCheck SliceConjugator::two_photon(ConjugatedOp which) const {
    ConjugationCheck check;
    check.lhs = conjugate_by(sd_, pick_operator(which, n_));
    check.rhs = two_photon_rhs(sp_.p, sp_.q, which, n_);
    check.block = block_;
    check.max_dev = block_dev(check.lhs, check.rhs, block_);
    return check;
}

ConjugationCheck SliceConjugator::squeezed_coherent(ConjugatedOp which) const {
    ConjugationCheck check;
    check.lhs = conjugate_by(ds_, pick_operator(which, n_));
    check.rhs = squeezed_coherent_rhs(sp_.p, sp_.q, which, n_);
    check.block = block_;
    check.max_dev = block_dev(check.lhs, check.rhs, block_);
    return check;
}

ConjugationCheck two_photon_conjugation(const SlicePair& sp, ConjugatedOp which, std::size_t n) {
    return SliceConjugator(sp, n).two_photon(which);
}

ConjugationCheck squeezed_coherent_conjugation(const SlicePair& sp, ConjugatedOp which,
                                               std::size_t n) {
    return SliceConjugator(sp, n).squeezed_coherent(which);
}

double two_photon_form_deviation(const Quaternion& p, const Quaternion& q, ConjugatedOp which,
                                 std::size_t n) {
    const std::size_t block = conjugation_safe_block(n, abs(p), abs(q));
    if (block < 2) {
        throw TruncationTooSmall("no leak-free block at truncation " + std::to_string(n));
    }
    const FockOperator sd = compose(squeeze(p, n), displacement(q, n));
    const FockOperator lhs = conjugate_by(sd, pick_operator(which, n));
    return block_dev(lhs, two_photon_rhs(p, q, which, n), block);
}

ObstructionWitness noncommutativity_witness(std::size_t n) {
    ObstructionWitness w;
    w.p = Quaternion::i() * 0.4;
    w.q = Quaternion::j() * 0.7;
    w.dev = two_photon_form_deviation(w.p, w.q, ConjugatedOp::Lower, n);
    return w;
}

}  // namespace qfock
