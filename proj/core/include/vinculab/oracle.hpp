#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "vinculab/bigint.hpp"
#include "vinculab/pattern.hpp"
#include "vinculab/permutation.hpp"

namespace vinculab {

/// A brute-force class query: permutations of S_n avoiding every pattern in
/// `avoid` and, when `contain` is set, containing its pattern exactly r times.
struct ClassQuery {
  std::vector<VincularPattern> avoid;
  std::optional<std::pair<VincularPattern, int>> contain;
  int n = 0;
};

/// Exact member count. Throws enumeration_cap_error above the working cap and
/// unsatisfiable_query_error when the contain pattern is also in the avoid
/// set with r >= 1.
Int count_class(const ClassQuery& q);

/// Occurrence distribution of tau over S_n(avoid): keys are exactly the
/// attained occurrence counts; values sum to |S_n(avoid)|.
std::map<int, Int> distribution(const std::vector<VincularPattern>& avoid,
                                const VincularPattern& tau, int n);

/// Joint occurrence distribution of two statistics over S_n(avoid).
std::map<std::pair<int, int>, Int> pair_distribution(
    const std::vector<VincularPattern>& avoid, const VincularPattern& tau1,
    const VincularPattern& tau2, int n);

/// Sum over S_n of x^(1+ascents) y^(descents) p^(occ "2-31") q^(occ "31-2").
/// n = 0 contributes 1 (the empty product).
Rat joint_weight_sum(int n, const Rat& x, const Rat& y, const Rat& p, const Rat& q);

/// The members counted by count_class, in lexicographic order.
std::vector<Permutation> list_class(const ClassQuery& q);

/// Drops all memoized oracle results.
void clear_oracle_cache();

namespace detail {
/// distribution() with an explicit worker count; partitions the search by
/// first element. Any thread count yields results identical to sequential
/// enumeration.
std::map<int, Int> distribution_with_threads(const std::vector<VincularPattern>& avoid,
                                             const VincularPattern& tau, int n,
                                             unsigned threads);
}  // namespace detail

}  // namespace vinculab
