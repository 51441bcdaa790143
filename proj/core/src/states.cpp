#include "qfock/states.hpp"

#include <cmath>
#include <string>

namespace qfock {

SqueezeParams make_squeeze_params(const Quaternion& p) { return {p, polar(p)}; }

CoherentState coherent(const Quaternion& q, std::size_t n) {
    FockVector v(n);
    const double a2 = norm_sq(q);
    Quaternion c(std::exp(-0.5 * a2));
    double mass = 0.0;
    for (std::size_t level = 0; level < n; ++level) {
        v[level] = c;
        mass += norm_sq(c);
        c = (q * c) / std::sqrt(static_cast<double>(level + 1));
    }
    const double tail = std::max(0.0, 1.0 - mass);
    if (tail > 1e-12) {
        throw TruncationTooSmall("coherent tail mass " + std::to_string(tail) +
                                 " at truncation " + std::to_string(n));
    }
    return {q, v};
}

FockOperator displacement(const Quaternion& q, std::size_t n) {
    const FockOperator gen =
        left_scale(q, ladder_adag(n)) - left_scale(conj(q), ladder_a(n));
    return expm(gen);
}

FockOperator squeeze(const Quaternion& p, std::size_t n) {
    const FockOperator adag = ladder_adag(n);
    const FockOperator a = ladder_a(n);
    const FockOperator gen =
        (left_scale(p, compose(adag, adag)) - left_scale(conj(p), compose(a, a))) * 0.5;
    return expm(gen);
}

FockOperator squeeze_su11_form(const Quaternion& p, std::size_t n) {
    const Su11Generators g = su11_generators(n);
    return expm(left_scale(p, g.k_plus) - left_scale(conj(p), g.k_minus));
}

FockVector pure_squeezed(const Quaternion& p, std::size_t n) {
    return apply(squeeze(p, n), FockVector::basis_state(n, 0));
}

FockVector squeezed_sd(const Quaternion& q, const Quaternion& p, std::size_t n) {
    return apply(squeeze(p, n), coherent(q, n).vector);
}

FockVector squeezed_ds(const Quaternion& q, const Quaternion& p, std::size_t n) {
    return apply(displacement(q, n), pure_squeezed(p, n));
}

Su11Generators su11_generators(std::size_t n) {
    const FockOperator adag = ladder_adag(n);
    const FockOperator a = ladder_a(n);
    Su11Generators g;
    g.k_plus = compose(adag, adag) * 0.5;
    g.k_minus = compose(a, a) * 0.5;
    g.k_zero = (compose(adag, a) + FockOperator::identity(n) * 0.5) * 0.5;
    return g;
}

FermionicPair fermionic(const Quaternion& q) {
    const double aq = abs(q);
    const double c = std::cos(aq);
    const double s = sinc(aq);  // sin|q| / |q|, exact at q = 0
    FockVector eta0(2), eta1(2);
    eta0[0] = Quaternion(c);
    eta0[1] = q * s;
    eta1[0] = -(conj(q) * s);
    eta1[1] = Quaternion(c);
    return {eta0, eta1};
}

}  // namespace qfock
