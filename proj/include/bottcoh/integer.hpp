#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace bottcoh {

/// Exact integer used for every cohomology dimension and Euler characteristic.
using Integer = boost::multiprecision::cpp_int;

/// C(a, b), taken to be 0 when a < 0, b < 0 or a < b.
Integer binomial(std::int64_t a, std::int64_t b);

inline std::string to_string(const Integer& x) { return x.str(); }

}  // namespace bottcoh
