#ifndef QFOCK_PARSE_HPP
#define QFOCK_PARSE_HPP

#include <string>
#include <string_view>

#include "qfock/quaternion.hpp"

namespace qfock {

/// Parse a quaternion literal of the form "a+bi+cj+dk" (no spaces):
/// signed decimal coefficients, units i/j/k with optional implicit
/// coefficient, terms in any order, repeated units accumulate.
/// Throws ParseError citing the 1-based column of the offending token.
Quaternion parse_quaternion(std::string_view text);

/// Canonical literal form accepted back by parse_quaternion.
std::string format_quaternion(const Quaternion& q);

}  // namespace qfock

#endif
