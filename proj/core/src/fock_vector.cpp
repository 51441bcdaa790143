#include "qfock/fock_vector.hpp"

#include <cmath>
#include <string>

namespace qfock {

namespace {

void require_compatible(const FockVector& f, const FockVector& g) {
    if (f.size() != g.size()) {
        throw DimensionMismatch("vector truncation orders differ: " + std::to_string(f.size()) +
                                " vs " + std::to_string(g.size()));
    }
    if (f.basis() != g.basis()) throw BasisMismatch("vectors tagged with different bases");
}

}  // namespace

FockVector FockVector::basis_state(std::size_t n, std::size_t k) {
    FockVector v(n);
    v[k] = Quaternion::one();
    return v;
}

FockVector& FockVector::operator+=(const FockVector& r) {
    require_compatible(*this, r);
    for (std::size_t n = 0; n < c_.size(); ++n) c_[n] += r.c_[n];
    return *this;
}

FockVector& FockVector::operator-=(const FockVector& r) {
    require_compatible(*this, r);
    for (std::size_t n = 0; n < c_.size(); ++n) c_[n] -= r.c_[n];
    return *this;
}

FockVector operator+(FockVector a, const FockVector& b) { return a += b; }
FockVector operator-(FockVector a, const FockVector& b) { return a -= b; }

Quaternion inner(const FockVector& f, const FockVector& g) {
    require_compatible(f, g);
    Quaternion s;
    for (std::size_t n = 0; n < f.size(); ++n) s += conj(f[n]) * g[n];
    return s;
}

double norm(const FockVector& f) {
    double s = 0.0;
    for (std::size_t n = 0; n < f.size(); ++n) s += norm_sq(f[n]);
    return std::sqrt(s);
}

FockVector left_scale(const Quaternion& q, const FockVector& v) {
    FockVector r(v.size(), v.basis());
    for (std::size_t n = 0; n < v.size(); ++n) r[n] = q * v[n];
    return r;
}

FockVector right_scale(const FockVector& v, const Quaternion& q) {
    FockVector r(v.size(), v.basis());
    for (std::size_t n = 0; n < v.size(); ++n) r[n] = v[n] * q;
    return r;
}

Quaternion bargmann_kernel(const Quaternion& q, const Quaternion& p, std::size_t n_terms) {
    Quaternion sum = Quaternion::one();
    Quaternion qn = Quaternion::one();
    Quaternion pn = Quaternion::one();
    const Quaternion pc = conj(p);
    double inv_fact = 1.0;
    for (std::size_t n = 1; n < n_terms; ++n) {
        qn = qn * q;
        pn = pn * pc;
        inv_fact /= static_cast<double>(n);
        sum += (qn * pn) * inv_fact;
    }
    return sum;
}

}  // namespace qfock
