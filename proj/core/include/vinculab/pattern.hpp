#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "vinculab/bigint.hpp"
#include "vinculab/permutation.hpp"

namespace vinculab {

/// A generalized (dashed) permutation pattern: a word over {1..k} plus an
/// adjacency mask. glued()[i] == true means letters i+1 and i+2 (one-based)
/// must occupy adjacent positions in the host permutation; false corresponds
/// to a dash, which permits any gap.
class VincularPattern {
 public:
  /// Validates that letters form a permutation of {1..k}, k >= 1, and that
  /// glued has k-1 entries.
  VincularPattern(std::vector<int> letters, std::vector<bool> glued);

  /// Grammar: digits 1..9 with optional '-' separators, e.g. "12-3", "2-31",
  /// "213". Throws pattern_parse_error (with position) on malformed input.
  static VincularPattern parse(const std::string& text);

  int length() const { return static_cast<int>(letters_.size()); }
  const std::vector<int>& letters() const { return letters_; }
  const std::vector<bool>& glued() const { return glued_; }

  /// k == 3 with the first pair glued and a dash before the third letter.
  bool is_type_2_1() const;

  /// Canonical text: letters with '-' wherever a pair is not glued.
  std::string str() const;

  bool operator==(const VincularPattern&) const = default;
  auto operator<=>(const VincularPattern&) const = default;

 private:
  std::vector<int> letters_;
  std::vector<bool> glued_;
};

/// Number of index tuples i_1 < ... < i_k with i_{j+1} = i_j + 1 wherever the
/// pattern is glued, whose values are order-isomorphic to the pattern.
/// Returns 0 when the host is shorter than the pattern.
Int occurrences(const VincularPattern& tau, const Permutation& p);

/// occurrences on a raw one-line word (used by enumeration inner loops).
Int occurrences(const VincularPattern& tau, std::span<const int> values);

/// True iff at least one occurrence exists (early exit).
bool contains(const VincularPattern& tau, std::span<const int> values);
bool contains(const VincularPattern& tau, const Permutation& p);

bool avoids(const VincularPattern& tau, const Permutation& p);

/// Letter-wise complement v -> k+1-v; the dash mask is unchanged.
VincularPattern complement_pattern(const VincularPattern& tau);

/// True iff appending the final value of `values` created at least one
/// occurrence whose last pattern letter sits at the last position. Under
/// left-to-right extension this detects first containment incrementally:
/// a prefix contains tau iff some extension step reported true.
bool occurrence_ends_at_back(const VincularPattern& tau, std::span<const int> values);

}  // namespace vinculab
