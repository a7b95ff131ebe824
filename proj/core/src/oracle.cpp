#include "vinculab/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <span>
#include <string>
#include <thread>

#include "vinculab/config.hpp"
#include "vinculab/errors.hpp"

namespace vinculab {

namespace {

void check_working_cap(int n) {
  if (n < 0) throw error("negative n");
  if (n > limits::working_cap())
    throw enumeration_cap_error(n, limits::working_cap(), "working");
}

void check_avoid_set(const std::vector<VincularPattern>& avoid) {
  for (std::size_t i = 0; i < avoid.size(); ++i)
    for (std::size_t j = i + 1; j < avoid.size(); ++j)
      if (avoid[i] == avoid[j])
        throw error("avoid set contains duplicate pattern " + avoid[i].str());
}

void check_satisfiable(const ClassQuery& q) {
  if (!q.contain || q.contain->second == 0) return;
  for (const auto& sigma : q.avoid)
    if (sigma == q.contain->first)
      throw unsatisfiable_query_error(
          "pattern " + sigma.str() + " is avoided but required to occur " +
          std::to_string(q.contain->second) + " times");
}

// Depth-first enumeration of S_n(avoid) in lexicographic order. A branch is
// abandoned as soon as the prefix contains an avoided pattern; containment is
// monotone under extension, so it suffices to test occurrences ending at the
// value just appended.
template <class Leaf>
void enumerate_class(int n, const std::vector<VincularPattern>& avoid,
                     int fixed_first, Leaf&& leaf) {
  std::vector<int> prefix(static_cast<std::size_t>(std::max(n, 1)));
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  if (n == 0) {
    leaf(std::span<const int>{});
    return;
  }
  auto rec = [&](auto&& self, int depth) -> void {
    if (depth == n) {
      leaf(std::span<const int>(prefix.data(), static_cast<std::size_t>(n)));
      return;
    }
    const int lo = (depth == 0 && fixed_first > 0) ? fixed_first : 1;
    const int hi = (depth == 0 && fixed_first > 0) ? fixed_first : n;
    for (int v = lo; v <= hi; ++v) {
      if (used[static_cast<std::size_t>(v)]) continue;
      prefix[static_cast<std::size_t>(depth)] = v;
      const std::span<const int> head(prefix.data(), static_cast<std::size_t>(depth) + 1);
      bool pruned = false;
      for (const auto& sigma : avoid) {
        if (occurrence_ends_at_back(sigma, head)) {
          pruned = true;
          break;
        }
      }
      if (pruned) continue;
      used[static_cast<std::size_t>(v)] = true;
      self(self, depth + 1);
      used[static_cast<std::size_t>(v)] = false;
    }
  };
  rec(rec, 0);
}

std::string avoid_key(const std::vector<VincularPattern>& avoid) {
  std::vector<std::string> keys;
  keys.reserve(avoid.size());
  for (const auto& p : avoid) keys.push_back(p.str());
  std::sort(keys.begin(), keys.end());
  std::string out;
  for (const auto& k : keys) {
    out += k;
    out.push_back(',');
  }
  return out;
}

// Memo for distribution-style results, bounded by the configured byte budget.
// Inserts are atomic with respect to readers (mutex); once over budget new
// results are computed but not retained.
class DistributionCache {
 public:
  template <class Map>
  std::optional<Map> find(const std::string& key, const std::map<std::string, Map>& store) {
    std::lock_guard lock(mx_);
    auto it = store.find(key);
    if (it == store.end()) return std::nullopt;
    return it->second;
  }

  template <class Map>
  void insert(const std::string& key, const Map& value, std::map<std::string, Map>& store) {
    std::lock_guard lock(mx_);
    std::size_t cost = key.size() + 64;
    for (const auto& [k, v] : value) cost += sizeof(k) + 48;
    if (bytes_ + cost > limits::memo_budget_bytes()) return;
    if (store.emplace(key, value).second) bytes_ += cost;
  }

  void clear() {
    std::lock_guard lock(mx_);
    single.clear();
    pairs.clear();
    bytes_ = 0;
  }

  std::map<std::string, std::map<int, Int>> single;
  std::map<std::string, std::map<std::pair<int, int>, Int>> pairs;

 private:
  std::mutex mx_;
  std::size_t bytes_ = 0;
};

DistributionCache& cache() {
  static DistributionCache c;
  return c;
}

std::map<int, Int> distribution_range(const std::vector<VincularPattern>& avoid,
                                      const VincularPattern& tau, int n, int first) {
  std::map<int, Int> out;
  enumerate_class(n, avoid, first, [&](std::span<const int> values) {
    const Int occ = occurrences(tau, values);
    out[static_cast<int>(occ)] += 1;
  });
  return out;
}

}  // namespace

std::map<int, Int> detail::distribution_with_threads(
    const std::vector<VincularPattern>& avoid, const VincularPattern& tau, int n,
    unsigned threads) {
  check_working_cap(n);
  check_avoid_set(avoid);
  if (n == 0 || threads <= 1)
    return distribution_range(avoid, tau, n, /*first=*/0);
  std::vector<std::map<int, Int>> parts(static_cast<std::size_t>(n));
  std::vector<std::thread> pool;
  std::atomic<int> next_first{1};
  const unsigned workers = std::min<unsigned>(threads, static_cast<unsigned>(n));
  for (unsigned t = 0; t < workers; ++t) {
    pool.emplace_back([&] {
      for (int first = next_first.fetch_add(1); first <= n;
           first = next_first.fetch_add(1))
        parts[static_cast<std::size_t>(first - 1)] =
            distribution_range(avoid, tau, n, first);
    });
  }
  for (auto& th : pool) th.join();
  std::map<int, Int> out;
  for (const auto& part : parts)
    for (const auto& [r, c] : part) out[r] += c;
  return out;
}

std::map<int, Int> distribution(const std::vector<VincularPattern>& avoid,
                                const VincularPattern& tau, int n) {
  check_working_cap(n);
  check_avoid_set(avoid);
  const std::string key = "D|" + avoid_key(avoid) + "|" + tau.str() + "|" + std::to_string(n);
  if (auto hit = cache().find(key, cache().single)) return *hit;
  unsigned threads = n >= 10 ? std::thread::hardware_concurrency() : 1;
  auto result = detail::distribution_with_threads(avoid, tau, n, std::max(1u, threads));
  cache().insert(key, result, cache().single);
  return result;
}

std::map<std::pair<int, int>, Int> pair_distribution(
    const std::vector<VincularPattern>& avoid, const VincularPattern& tau1,
    const VincularPattern& tau2, int n) {
  check_working_cap(n);
  check_avoid_set(avoid);
  const std::string key = "P|" + avoid_key(avoid) + "|" + tau1.str() + "|" +
                          tau2.str() + "|" + std::to_string(n);
  if (auto hit = cache().find(key, cache().pairs)) return *hit;
  std::map<std::pair<int, int>, Int> out;
  enumerate_class(n, avoid, /*first=*/0, [&](std::span<const int> values) {
    const int a = static_cast<int>(occurrences(tau1, values));
    const int b = static_cast<int>(occurrences(tau2, values));
    out[{a, b}] += 1;
  });
  cache().insert(key, out, cache().pairs);
  return out;
}

Int count_class(const ClassQuery& q) {
  check_working_cap(q.n);
  check_avoid_set(q.avoid);
  check_satisfiable(q);
  if (q.contain) {
    auto dist = distribution(q.avoid, q.contain->first, q.n);
    auto it = dist.find(q.contain->second);
    return it == dist.end() ? Int(0) : it->second;
  }
  Int count = 0;
  enumerate_class(q.n, q.avoid, /*first=*/0, [&](std::span<const int>) { count += 1; });
  return count;
}

Rat joint_weight_sum(int n, const Rat& x, const Rat& y, const Rat& p, const Rat& q) {
  check_working_cap(n);
  if (n == 0) return Rat(1);
  static const VincularPattern tau_p = VincularPattern::parse("2-31");
  static const VincularPattern tau_q = VincularPattern::parse("31-2");
  Rat total = 0;
  for_each_permutation(n, [&](const Permutation& perm) {
    const long asc = adjacent_ascents(perm);
    const long desc = adjacent_descents(perm);
    const long occ_p = static_cast<long>(occurrences(tau_p, perm));
    const long occ_q = static_cast<long>(occurrences(tau_q, perm));
    total += pow_rat(x, 1 + asc) * pow_rat(y, desc) * pow_rat(p, occ_p) *
             pow_rat(q, occ_q);
  });
  return total;
}

std::vector<Permutation> list_class(const ClassQuery& q) {
  check_working_cap(q.n);
  check_avoid_set(q.avoid);
  check_satisfiable(q);
  std::vector<Permutation> out;
  enumerate_class(q.n, q.avoid, /*first=*/0, [&](std::span<const int> values) {
    if (q.contain && occurrences(q.contain->first, values) != q.contain->second)
      return;
    out.push_back(Permutation::unchecked(std::vector<int>(values.begin(), values.end())));
  });
  return out;
}

void clear_oracle_cache() { cache().clear(); }

}  // namespace vinculab
