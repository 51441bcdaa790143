#include "qfock/serialization.hpp"

#include <json.hpp>

namespace qfock {

using nlohmann::ordered_json;

std::string to_json(const FockVector& v) {
    ordered_json out;
    out["schema"] = 1;
    out["basis"] = "fock-monomial";
    ordered_json coeffs = ordered_json::array();
    for (std::size_t n = 0; n < v.size(); ++n) {
        coeffs.push_back({v[n].w, v[n].x, v[n].y, v[n].z});
    }
    out["coeffs"] = std::move(coeffs);
    out["norm"] = norm(v);
    return out.dump();
}

namespace {

ordered_json quaternion_tuple(const Quaternion& q) {
    return ordered_json::array({q.w, q.x, q.y, q.z});
}

}  // namespace

std::string to_json(const ExpectationReport& rep) {
    ordered_json out;
    out["schema"] = 1;
    out["mean"] = quaternion_tuple(rep.mean);
    out["second_moment"] = quaternion_tuple(rep.second_moment);
    out["variance"] = rep.variance ? quaternion_tuple(*rep.variance) : ordered_json(nullptr);
    return out.dump();
}

std::string to_json(const HeisenbergReport& rep) {
    ordered_json out;
    out["schema"] = 1;
    out["product"] = rep.product;
    out["bound_gap"] = rep.bound_gap;
    out["commutator_half"] = rep.commutator_half;
    out["variance_q"] = rep.var_q;
    out["variance_p"] = rep.var_p;
    return out.dump();
}

std::string to_json(const PhotonStats& stats) {
    ordered_json out;
    out["schema"] = 1;
    out["mean_n"] = stats.mean_n;
    out["var_n"] = stats.var_n;
    out["mandel_q"] = stats.mandel_q;
    return out.dump();
}

FockVector fock_vector_from_json(std::string_view text) {
    const auto in = nlohmann::json::parse(text);
    if (!in.contains("schema") || in["schema"].get<int>() != 1) {
        throw std::runtime_error("unsupported state schema");
    }
    const auto& coeffs = in.at("coeffs");
    FockVector v(coeffs.size());
    for (std::size_t n = 0; n < coeffs.size(); ++n) {
        const auto& t = coeffs[n];
        if (!t.is_array() || t.size() != 4) {
            throw std::runtime_error("coefficient " + std::to_string(n) +
                                     " is not a 4-tuple");
        }
        v[n] = Quaternion(t[0].get<double>(), t[1].get<double>(), t[2].get<double>(),
                          t[3].get<double>());
    }
    return v;
}

}  // namespace qfock
