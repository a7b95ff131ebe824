#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace vinculab {

// All counts are exact big integers and all series coefficients exact
// rationals; no floating point is used anywhere in the toolkit.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Binomial coefficient; 0 outside the triangle (k < 0, k > n, or n < 0).
Int binomial(long n, long k);

Int factorial(long n);

/// base^exp for integer exp (negative allowed; base must be nonzero then).
Rat pow_rat(const Rat& base, long exp);

bool is_integer(const Rat& q);

/// Numerator of an integral rational; throws non_integral_error otherwise.
Int to_integer(const Rat& q);

/// "a" when the denominator is 1, "a/b" otherwise.
std::string rat_to_string(const Rat& q);

}  // namespace vinculab
