#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vinculab/series.hpp"

namespace vinculab {

/// Directly expressible generating functions. KRun and KRunDash are
/// parametrized by the pattern length k.
enum class FormulaKind {
  Bell,      // EGF exp(e^x - 1): |S_n(12-3)|
  KRun,      // EGF for S_n(12-3) by occurrences of (k-1)...21k (any r >= 0)
  KRunDash,  // EGF for S_n(12-3, (k-1)...21-k) (r = 0 only)
  F214_3,    // EGF 1 + integral of e^{2x + x^2/2}: S_n(12-3, 214-3)
  F23_1Sum,  // OGF infinite-product sum for S_n(12-3) by 23-1 count (r = 0, 1)
  H32_1Sum,  // OGF infinite-product sum for S_n(21-3) by 32-1 count (r = 0, 1)
  Ext2,      // OGF for S_n(12-3, 21-3) by 13-2 (equivalently 23-1) count
};

struct FormulaId {
  FormulaKind kind;
  int k = 0;  // used by KRun / KRunDash

  /// Text ids: "bell", "krun" (needs k), "krun-dash" (needs k), "f214-3",
  /// "f23-1", "h32-1", "ext2".
  static std::optional<FormulaId> parse(const std::string& text, int k);
  std::string str() const;
};

/// Coefficients exact to the requested order. Infinite sums truncate at the
/// first term whose minimal exponent exceeds the order, which is exact.
TruncatedSeries series_from_formula(FormulaId id, int r, int order);

/// Families whose generating function is pinned down by a self-consistent
/// identity built from the lower-r members (and, for F23_1, from the series
/// itself evaluated at x/(1-x)).
enum class FuncEqFamily { F13_2, F23_1, H13_2, H31_2 };

std::optional<FuncEqFamily> parse_funceq_family(const std::string& text);
std::string funceq_family_str(FuncEqFamily fam);

TruncatedSeries iterate_functional_equation(FuncEqFamily fam, int r, int order);

/// Integer counts from a series: c_n for OGF, n! * c_n for EGF. Throws
/// non_integral_error naming the first offending index.
std::vector<Int> coeff_counts(const TruncatedSeries& s);

}  // namespace vinculab
