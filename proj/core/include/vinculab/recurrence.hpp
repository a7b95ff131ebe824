#pragma once

#include <optional>
#include <string>
#include <utility>

#include "vinculab/bigint.hpp"
#include "vinculab/pattern.hpp"

namespace vinculab {

/// The three single-pattern avoidance classes that carry count families.
enum class AvoidClass { A12_3, A13_2, A21_3 };

/// The six type-(2,1) statistics counted inside an avoidance class.
enum class TauPattern { T12_3, T13_2, T21_3, T23_1, T31_2, T32_1 };

/// One count family: permutations avoiding `avoid` that contain `tau` exactly
/// r times. The symbol (f, g, h) is determined by the avoidance class.
struct FamilyId {
  AvoidClass avoid;
  TauPattern tau;

  bool operator==(const FamilyId&) const = default;

  char symbol() const;             // 'f' | 'g' | 'h'
  std::string str() const;         // e.g. "f_13-2"
  static std::optional<FamilyId> parse(const std::string& text);

  VincularPattern avoid_pattern() const;
  VincularPattern tau_pattern() const;
};

/// Parametric pattern families of length k inside the 12-3 avoidance class.
enum class KTag {
  NODASH_K,  // (k-1)(k-2)...21k, fully glued
  DASH_K,    // (k-1)(k-2)...21-k, dash before the final letter
  K_KM1,     // (k-2)...21k-(k-1), dash before the final letter
};

/// The k-parametric pattern itself (useful for oracle cross-checks).
VincularPattern k_family_pattern(KTag tag, int k);

/// Recognizes a pattern as one of the k-parametric families.
std::optional<std::pair<KTag, int>> classify_k_pattern(const VincularPattern& tau);

/// Count of S_n(12-3) permutations containing the k-parametric pattern
/// exactly r times, by recurrence. DASH_K and K_KM1 support r = 0 only
/// (unsupported_parameter_error otherwise). NODASH_K needs k >= 2, K_KM1
/// k >= 3. For k > n the answer degenerates to |S_n(12-3)|.
Int eval_k_family(KTag tag, int k, int r, int n);

/// True iff the family has a direct refined recurrence (the three 13-2
/// avoidance families 23-1, 31-2, 32-1 do not; they are handled by
/// fit_structure and the closed-form catalog).
bool has_explicit_recurrence(FamilyId family);

/// Exact family count by refined dynamic programming. Negative r yields 0.
/// Throws routed_to_fit_error for families without a direct recurrence.
Int eval_refined_family(FamilyId family, int r, int n);

/// Drops all recurrence memo tables.
void clear_recurrence_cache();

}  // namespace vinculab
