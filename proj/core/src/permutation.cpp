#include "vinculab/permutation.hpp"

#include <algorithm>
#include <numeric>

#include "vinculab/config.hpp"
#include "vinculab/errors.hpp"

namespace vinculab {

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
  const int n = static_cast<int>(values_.size());
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : values_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
      throw error("not a permutation of {1.." + std::to_string(n) + "}");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return unchecked(std::move(v));
}

std::string Permutation::str() const {
  std::string out;
  if (size() <= 9) {
    for (int v : values_) out.push_back(static_cast<char>('0' + v));
  } else {
    for (std::size_t i = 0; i < values_.size(); ++i) {
      if (i) out.push_back(',');
      out += std::to_string(values_[i]);
    }
  }
  return out;
}

Permutation Permutation::parse(const std::string& text) {
  std::vector<int> vals;
  if (text.empty()) return Permutation(std::move(vals));
  if (text.find(',') != std::string::npos) {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t next = text.find(',', pos);
      if (next == std::string::npos) next = text.size();
      const std::string tok = text.substr(pos, next - pos);
      if (tok.empty()) throw error("empty entry in permutation text: " + text);
      vals.push_back(std::stoi(tok));
      pos = next + 1;
      if (next == text.size()) break;
    }
  } else {
    for (char c : text) {
      if (c < '1' || c > '9')
        throw error(std::string("bad character '") + c + "' in permutation text");
      vals.push_back(c - '0');
    }
  }
  return Permutation(std::move(vals));
}

Permutation reverse(const Permutation& p) {
  std::vector<int> v(p.values().rbegin(), p.values().rend());
  return Permutation::unchecked(std::move(v));
}

Permutation complement(const Permutation& p) {
  const int n = p.size();
  std::vector<int> v;
  v.reserve(static_cast<std::size_t>(n));
  for (int x : p.values()) v.push_back(n + 1 - x);
  return Permutation::unchecked(std::move(v));
}

int adjacent_ascents(const Permutation& p) {
  int count = 0;
  const auto& v = p.values();
  for (std::size_t i = 0; i + 1 < v.size(); ++i)
    if (v[i] < v[i + 1]) ++count;
  return count;
}

int adjacent_descents(const Permutation& p) {
  int count = 0;
  const auto& v = p.values();
  for (std::size_t i = 0; i + 1 < v.size(); ++i)
    if (v[i] > v[i + 1]) ++count;
  return count;
}

namespace {

void check_hard_cap(int n) {
  if (n < 0) throw error("negative n");
  if (n > limits::hard_cap())
    throw enumeration_cap_error(n, limits::hard_cap(), "hard");
}

}  // namespace

std::vector<Permutation> all_permutations(int n) {
  check_hard_cap(n);
  std::vector<Permutation> out;
  for_each_permutation(n, [&](const Permutation& p) { out.push_back(p); });
  return out;
}

void for_each_permutation(int n, const std::function<void(const Permutation&)>& fn) {
  check_hard_cap(n);
  if (n == 0) {
    fn(Permutation{});
    return;
  }
  for (int first = 1; first <= n; ++first) for_each_permutation_with_first(n, first, fn);
}

void for_each_permutation_with_first(int n, int first,
                                     const std::function<void(const Permutation&)>& fn) {
  check_hard_cap(n);
  if (n == 0 || first < 1 || first > n) throw error("first value out of range");
  std::vector<int> v;
  v.reserve(static_cast<std::size_t>(n));
  v.push_back(first);
  for (int x = 1; x <= n; ++x)
    if (x != first) v.push_back(x);
  Permutation p = Permutation::unchecked(std::move(v));
  auto& vals = p.values_;
  do {
    fn(p);
  } while (std::next_permutation(vals.begin() + 1, vals.end()));
}

}  // namespace vinculab
