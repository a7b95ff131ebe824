#include "vinculab/bigint.hpp"

#include "vinculab/errors.hpp"

namespace vinculab {

Int binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Int result = 1;
  for (long i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;  // exact at every step
  }
  return result;
}

Int factorial(long n) {
  Int result = 1;
  for (long i = 2; i <= n; ++i) result *= i;
  return result;
}

Rat pow_rat(const Rat& base, long exp) {
  if (exp == 0) return Rat(1);
  bool invert = exp < 0;
  unsigned long e = invert ? static_cast<unsigned long>(-exp)
                           : static_cast<unsigned long>(exp);
  if (invert && base == 0) throw series_domain_error("0 raised to a negative power");
  Rat acc(1), b = base;
  while (e > 0) {
    if (e & 1) acc *= b;
    b *= b;
    e >>= 1;
  }
  if (invert) acc = Rat(1) / acc;
  return acc;
}

bool is_integer(const Rat& q) { return boost::multiprecision::denominator(q) == 1; }

Int to_integer(const Rat& q) {
  if (!is_integer(q)) throw non_integral_error(0, rat_to_string(q));
  return boost::multiprecision::numerator(q);
}

std::string rat_to_string(const Rat& q) {
  const Int num = boost::multiprecision::numerator(q);
  const Int den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace vinculab
