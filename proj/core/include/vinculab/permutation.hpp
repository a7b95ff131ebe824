#pragma once

#include <compare>
#include <functional>
#include <string>
#include <vector>

namespace vinculab {

/// A permutation of {1..n} in one-line notation. Positions and values are
/// one-based throughout; the empty permutation (n = 0) is valid.
class Permutation {
 public:
  Permutation() = default;
  /// Validates that the values form a bijection on {1..n}.
  explicit Permutation(std::vector<int> values);

  static Permutation identity(int n);

  /// Constructs without validation; caller guarantees a valid one-line word.
  static Permutation unchecked(std::vector<int> values) {
    return Permutation(std::move(values), unchecked_tag{});
  }

  int size() const { return static_cast<int>(values_.size()); }
  /// Value at a one-based position.
  int at(int pos) const { return values_[static_cast<std::size_t>(pos) - 1]; }
  const std::vector<int>& values() const { return values_; }

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

  /// "2134" for n <= 9, comma-separated ("10,2,1,...") for n >= 10.
  std::string str() const;
  /// Accepts both text forms.
  static Permutation parse(const std::string& text);

 private:
  struct unchecked_tag {};
  Permutation(std::vector<int> values, unchecked_tag) : values_(std::move(values)) {}
  std::vector<int> values_;

  friend void for_each_permutation_with_first(
      int n, int first, const std::function<void(const Permutation&)>& fn);
};

/// Position reversal: output[i] = input[n+1-i]. An involution.
Permutation reverse(const Permutation& p);

/// Value complement: output[i] = n+1-input[i]. An involution.
Permutation complement(const Permutation& p);

/// Number of positions i with p[i] < p[i+1].
int adjacent_ascents(const Permutation& p);
/// Number of positions i with p[i] > p[i+1]; ascents + descents = max(n-1, 0).
int adjacent_descents(const Permutation& p);

/// All of S_n in lexicographic order; n = 0 yields the single empty
/// permutation. Throws enumeration_cap_error above the hard cap.
std::vector<Permutation> all_permutations(int n);

/// Streaming enumeration in lexicographic order.
void for_each_permutation(int n, const std::function<void(const Permutation&)>& fn);

/// Streaming enumeration of the permutations with a fixed first value, in
/// lexicographic order. Running first = 1..n in sequence reproduces
/// for_each_permutation exactly; the n ranges are independent, so they can be
/// consumed in parallel.
void for_each_permutation_with_first(int n, int first,
                                     const std::function<void(const Permutation&)>& fn);

}  // namespace vinculab
