#include "vinculab/recurrence.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <tuple>

#include "vinculab/errors.hpp"

namespace vinculab {

namespace {

const char* tau_text(TauPattern t) {
  switch (t) {
    case TauPattern::T12_3: return "12-3";
    case TauPattern::T13_2: return "13-2";
    case TauPattern::T21_3: return "21-3";
    case TauPattern::T23_1: return "23-1";
    case TauPattern::T31_2: return "31-2";
    case TauPattern::T32_1: return "32-1";
  }
  return "";
}

const char* avoid_text(AvoidClass a) {
  switch (a) {
    case AvoidClass::A12_3: return "12-3";
    case AvoidClass::A13_2: return "13-2";
    case AvoidClass::A21_3: return "21-3";
  }
  return "";
}

}  // namespace

char FamilyId::symbol() const {
  switch (avoid) {
    case AvoidClass::A12_3: return 'f';
    case AvoidClass::A13_2: return 'g';
    case AvoidClass::A21_3: return 'h';
  }
  return '?';
}

std::string FamilyId::str() const {
  return std::string(1, symbol()) + "_" + tau_text(tau);
}

std::optional<FamilyId> FamilyId::parse(const std::string& text) {
  if (text.size() < 3 || text[1] != '_') return std::nullopt;
  AvoidClass a;
  switch (text[0]) {
    case 'f': a = AvoidClass::A12_3; break;
    case 'g': a = AvoidClass::A13_2; break;
    case 'h': a = AvoidClass::A21_3; break;
    default: return std::nullopt;
  }
  const std::string rest = text.substr(2);
  for (TauPattern t : {TauPattern::T12_3, TauPattern::T13_2, TauPattern::T21_3,
                       TauPattern::T23_1, TauPattern::T31_2, TauPattern::T32_1})
    if (rest == tau_text(t)) return FamilyId{a, t};
  return std::nullopt;
}

VincularPattern FamilyId::avoid_pattern() const {
  return VincularPattern::parse(avoid_text(avoid));
}

VincularPattern FamilyId::tau_pattern() const {
  return VincularPattern::parse(tau_text(tau));
}

VincularPattern k_family_pattern(KTag tag, int k) {
  std::vector<int> letters;
  std::vector<bool> glued;
  switch (tag) {
    case KTag::NODASH_K:
    case KTag::DASH_K: {
      if (k < 2) throw unsupported_parameter_error("k must be >= 2");
      for (int v = k - 1; v >= 1; --v) letters.push_back(v);
      letters.push_back(k);
      glued.assign(static_cast<std::size_t>(k) - 1, true);
      if (tag == KTag::DASH_K) glued.back() = false;
      break;
    }
    case KTag::K_KM1: {
      if (k < 3) throw unsupported_parameter_error("k must be >= 3");
      for (int v = k - 2; v >= 1; --v) letters.push_back(v);
      letters.push_back(k);
      letters.push_back(k - 1);
      glued.assign(static_cast<std::size_t>(k) - 1, true);
      glued.back() = false;
      break;
    }
  }
  return VincularPattern(std::move(letters), std::move(glued));
}

std::optional<std::pair<KTag, int>> classify_k_pattern(const VincularPattern& tau) {
  const int k = tau.length();
  for (KTag tag : {KTag::NODASH_K, KTag::DASH_K, KTag::K_KM1}) {
    const int kmin = tag == KTag::K_KM1 ? 3 : 2;
    if (k >= kmin && tau == k_family_pattern(tag, k)) return std::make_pair(tag, k);
  }
  return std::nullopt;
}

namespace {

// Families with a refined first-value recurrence. H13_2 recurses on plain
// totals and carries no refined state.
enum class RF {
  F13_2, F21_3, F23_1, F31_2, F32_1,
  G12_3, G21_3,
  H12_3, H13_2, H23_1, H31_2, H32_1,
};

class Memo {
 public:
  std::optional<Int> get(int fam, int r, int n, int i) {
    std::lock_guard lock(mx_);
    auto it = table_.find({fam, r, n, i});
    if (it == table_.end()) return std::nullopt;
    return it->second;
  }
  void put(int fam, int r, int n, int i, const Int& v) {
    std::lock_guard lock(mx_);
    table_.emplace(std::make_tuple(fam, r, n, i), v);
  }
  void clear() {
    std::lock_guard lock(mx_);
    table_.clear();
  }

 private:
  std::map<std::tuple<int, int, int, int>, Int> table_;
  std::mutex mx_;
};

Memo& refined_memo() {
  static Memo m;
  return m;
}

Memo& kfam_memo() {
  static Memo m;
  return m;
}

Int total(RF f, int r, int n);

// Refined count: members of the family's class with first value i, tallied by
// occurrence count r. State recurrences peel off the first value (or the
// first two, where the second is forced) and re-rank the remainder.
Int state(RF f, int r, int n, int i) {
  if (r < 0) return 0;
  if (n == 1) return (i == 1 && r == 0) ? Int(1) : Int(0);
  if (auto hit = refined_memo().get(static_cast<int>(f), r, n, i)) return *hit;

  Int acc = 0;
  switch (f) {
    case RF::F13_2:
      if (i >= n - 1) {
        acc = total(f, r, n - 1);
      } else {
        acc = total(f, r - (n - 1 - i), n - 2);
        for (int j = 1; j < i; ++j) acc += state(f, r, n - 1, j);
      }
      break;
    case RF::F21_3:
      if (i == n) {
        acc = total(f, r, n - 1);
      } else {
        acc = total(f, r, n - 2);
        for (int j = 1; j < i; ++j) acc += state(f, r - (n - i), n - 1, j);
      }
      break;
    case RF::F23_1:
      if (i == n) {
        acc = total(f, r, n - 1);
      } else {
        acc = total(f, r - (i - 1), n - 2);
        for (int j = 1; j < i; ++j) acc += state(f, r, n - 1, j);
      }
      break;
    case RF::F31_2:
      if (i == n) {
        for (int j = 1; j <= n - 1; ++j) acc += state(f, r + 1 - j, n - 1, n - j);
      } else {
        acc = state(f, r, n - 1, n - 1);
        for (int j = 1; j < i; ++j) acc += state(f, r - (i - 1 - j), n - 1, j);
      }
      break;
    case RF::F32_1:
      if (i == n) {
        for (int j = 1; j <= n - 1; ++j) acc += state(f, r + 1 - j, n - 1, j);
      } else {
        acc = state(f, r, n - 1, n - 1);
        for (int j = 1; j < i; ++j) acc += state(f, r + 1 - j, n - 1, j);
      }
      break;
    case RF::G12_3:
      if (i >= n - 1) {
        acc = total(f, r, n - 1);
      } else {
        acc = state(f, r - (n - 1 - i), n - 1, i);
        for (int j = 1; j < i; ++j) acc += state(f, r, n - 1, j);
      }
      break;
    case RF::G21_3:
      if (i == n) {
        acc = total(f, r, n - 1);
      } else {
        acc = state(f, r, n - 1, i);
        for (int j = 1; j < i; ++j) acc += state(f, r - (n - i), n - 1, j);
      }
      break;
    case RF::H12_3:
      if (i == n) {
        acc = total(f, r, n - 1);
      } else {
        for (int t = i; t <= n - 1; ++t) acc += state(f, r - (n - 1 - t), n - 1, t);
      }
      break;
    case RF::H23_1:
      if (i == n) {
        acc = total(f, r, n - 1);
      } else {
        for (int t = i; t <= n - 1; ++t) acc += state(f, r - (i - 1), n - 1, t);
      }
      break;
    case RF::H31_2:
      if (i == n) {
        for (int j = 0; j <= std::min(r, n - 2); ++j)
          acc += state(f, r - j, n - 1, n - 1 - j);
      } else {
        for (int t = i; t <= n - 1; ++t) acc += state(f, r, n - 1, t);
      }
      break;
    case RF::H32_1:
      if (i == n) {
        for (int j = 1; j <= std::min(r + 1, n - 1); ++j)
          acc += state(f, r - (j - 1), n - 1, j);
      } else {
        for (int t = i; t <= n - 1; ++t) acc += state(f, r, n - 1, t);
      }
      break;
    case RF::H13_2:
      throw error("h_13-2 has no refined state");
  }
  refined_memo().put(static_cast<int>(f), r, n, i, acc);
  return acc;
}

Int total(RF f, int r, int n) {
  if (r < 0) return 0;
  if (n == 0) return r == 0 ? Int(1) : Int(0);
  if (auto hit = refined_memo().get(static_cast<int>(f), r, n, 0)) return *hit;

  Int acc = 0;
  if (f == RF::H13_2) {
    // Totals-only recurrence: peeling the first two (forced-ascent) values
    // converts r into a binomial mixture of smaller instances.
    acc = total(f, r, n - 1);
    for (int m = 1; m <= n - 1; ++m)
      for (int j = 0; j <= m - 1; ++j)
        acc += binomial(m - 1, j) * total(f, r - j, n - 1 - m + j);
  } else {
    for (int i = 1; i <= n; ++i) acc += state(f, r, n, i);
  }
  refined_memo().put(static_cast<int>(f), r, n, 0, acc);
  return acc;
}

std::optional<RF> refined_id(FamilyId family) {
  switch (family.avoid) {
    case AvoidClass::A12_3:
      switch (family.tau) {
        case TauPattern::T13_2: return RF::F13_2;
        case TauPattern::T21_3: return RF::F21_3;
        case TauPattern::T23_1: return RF::F23_1;
        case TauPattern::T31_2: return RF::F31_2;
        case TauPattern::T32_1: return RF::F32_1;
        default: return std::nullopt;  // f_12-3 is degenerate (tau == avoided)
      }
    case AvoidClass::A13_2:
      switch (family.tau) {
        case TauPattern::T12_3: return RF::G12_3;
        case TauPattern::T21_3: return RF::G21_3;
        default: return std::nullopt;
      }
    case AvoidClass::A21_3:
      switch (family.tau) {
        case TauPattern::T12_3: return RF::H12_3;
        case TauPattern::T13_2: return RF::H13_2;
        case TauPattern::T23_1: return RF::H23_1;
        case TauPattern::T31_2: return RF::H31_2;
        case TauPattern::T32_1: return RF::H32_1;
        default: return std::nullopt;
      }
  }
  return std::nullopt;
}

Int k_nodash(int k, int r, int n) {
  if (r < 0) return 0;
  if (n == 0) return r == 0 ? Int(1) : Int(0);
  if (auto hit = kfam_memo().get(0 * 1000 + k, r, n, 0)) return *hit;
  Int acc = 0;
  for (int j = 1; j <= std::min(k - 1, n); ++j)
    acc += binomial(n - 1, j - 1) * k_nodash(k, r, n - j);
  for (int j = k; j <= n; ++j)
    acc += binomial(n - 1, j - 1) * k_nodash(k, r - 1, n - j);
  kfam_memo().put(0 * 1000 + k, r, n, 0, acc);
  return acc;
}

Int k_dash(int k, int n) {
  if (n == 0) return 1;
  if (auto hit = kfam_memo().get(1 * 1000 + k, 0, n, 0)) return *hit;
  Int acc = 0;
  for (int j = 0; j <= std::min(k - 2, n - 1); ++j)
    acc += binomial(n - 1, j) * k_dash(k, n - 1 - j);
  kfam_memo().put(1 * 1000 + k, 0, n, 0, acc);
  return acc;
}

Int k_km1(int k, int n) {
  if (n == 0) return 1;
  if (auto hit = kfam_memo().get(2 * 1000 + k, 0, n, 0)) return *hit;
  Int acc = 0;
  for (int j = 0; j <= std::min(k - 3, n - 1); ++j)
    acc += binomial(n - 1, j) * k_km1(k, n - 1 - j);
  for (int j = k - 2; j <= n - 1; ++j)
    acc += binomial(n - j + k - 4, k - 3) * k_km1(k, n - 1 - j);
  kfam_memo().put(2 * 1000 + k, 0, n, 0, acc);
  return acc;
}

}  // namespace

Int eval_k_family(KTag tag, int k, int r, int n) {
  if (n < 0) throw error("negative n");
  if (r < 0) return 0;
  switch (tag) {
    case KTag::NODASH_K:
      if (k < 2) throw unsupported_parameter_error("NODASH_K requires k >= 2");
      return k_nodash(k, r, n);
    case KTag::DASH_K:
      if (k < 2) throw unsupported_parameter_error("DASH_K requires k >= 2");
      if (r != 0)
        throw unsupported_parameter_error("DASH_K supports r = 0 only, got r=" +
                                          std::to_string(r));
      return k_dash(k, n);
    case KTag::K_KM1:
      if (k < 3) throw unsupported_parameter_error("K_KM1 requires k >= 3");
      if (r != 0)
        throw unsupported_parameter_error("K_KM1 supports r = 0 only, got r=" +
                                          std::to_string(r));
      return k_km1(k, n);
  }
  throw error("unreachable");
}

bool has_explicit_recurrence(FamilyId family) {
  return refined_id(family).has_value();
}

Int eval_refined_family(FamilyId family, int r, int n) {
  if (n < 0) throw error("negative n");
  auto rf = refined_id(family);
  if (!rf) {
    const bool fit_routed =
        family.avoid == AvoidClass::A13_2 &&
        (family.tau == TauPattern::T23_1 || family.tau == TauPattern::T31_2 ||
         family.tau == TauPattern::T32_1);
    if (fit_routed)
      throw routed_to_fit_error("family " + family.str() +
                                " has no direct recurrence; use fit_structure");
    throw unsupported_parameter_error("degenerate family " + family.str() +
                                      ": tau equals the avoided pattern");
  }
  if (r < 0) return 0;
  return total(*rf, r, n);
}

void clear_recurrence_cache() {
  refined_memo().clear();
  kfam_memo().clear();
}

}  // namespace vinculab
