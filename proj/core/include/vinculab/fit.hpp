#pragma once

#include <string>
#include <variant>
#include <vector>

#include "vinculab/bigint.hpp"
#include "vinculab/recurrence.hpp"

namespace vinculab {

/// Shapes the structure theorems allow. PolyTimes2nPlusPoly covers the
/// special cases by leaving one side empty.
enum class FitShape {
  Polynomial,           // Q(n)
  PolyTimes2n,          // P(n) * 2^n
  PolyTimes2nPlusPoly,  // P(n) * 2^n + Q(n)
  Const2nPlusPoly,      // c * 2^n + Q(n)
};

/// An exact closed form recovered by interpolation against the oracle.
/// Coefficient vectors run low degree to high; trailing zeros are trimmed.
struct StructuredFormula {
  FitShape shape;
  std::vector<Rat> pow2_poly;  // P (or the single constant c)
  std::vector<Rat> plain_poly; // Q
  int validity_floor = 0;

  Rat eval_rat(long n) const;
  Int eval(long n) const;   // throws non_integral_error if not integral
  std::string str() const;  // e.g. "(1/8*n^2 - 7/8*n + 14/8)*2^n - 2"
};

/// Joint statistic over all of S_n: permutations containing 12-3 exactly r
/// times and 13-2 exactly s times.
struct TwoStatTag {
  int r = 0;
  int s = 0;
};

/// True for the families whose counting function has a proved shape
/// (f_31-2, f_32-1, and all five 13-2-avoidance families).
bool has_fit_shape(FamilyId family);

/// Interpolates the family's proved shape on oracle values at and above the
/// validity floor and verifies at least three extra sample points exactly.
/// Throws shape_violation_error if the data refutes the shape and
/// fit_capacity_error if the working cap leaves too few sample points.
StructuredFormula fit_structure(FamilyId family, int r);
StructuredFormula fit_structure(TwoStatTag tag);

namespace detail {
/// Exact solve of shape coefficients against (n, value) samples; the sample
/// set must exceed the unknown count by the safety margin. Exposed for tests.
StructuredFormula fit_shape_on_points(FitShape shape, int deg_p, int deg_q,
                                      int validity_floor,
                                      const std::vector<std::pair<long, Int>>& samples);
}  // namespace detail

}  // namespace vinculab
