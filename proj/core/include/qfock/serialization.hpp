#ifndef QFOCK_SERIALIZATION_HPP
#define QFOCK_SERIALIZATION_HPP

#include <string>
#include <string_view>

#include "qfock/fock_vector.hpp"
#include "qfock/observables.hpp"

namespace qfock {

/// JSON encoding of a state: schema marker, basis tag, flat list of
/// (w, x, y, z) coefficient tuples, and the norm.
std::string to_json(const FockVector& v);

/// Inverse of to_json; validates the schema marker and tuple shape.
FockVector fock_vector_from_json(std::string_view text);

/// Report records; field names are part of the output contract:
/// mean, second_moment, variance, product, bound_gap, mandel_q.
std::string to_json(const ExpectationReport& rep);
std::string to_json(const HeisenbergReport& rep);
std::string to_json(const PhotonStats& stats);

}  // namespace qfock

#endif
