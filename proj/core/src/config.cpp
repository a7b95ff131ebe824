#include "vinculab/config.hpp"

#include <algorithm>
#include <atomic>

namespace vinculab {

namespace {
std::atomic<int> g_working_cap{limits::kDefaultWorkingCap};
std::atomic<int> g_hard_cap{limits::kDefaultHardCap};
std::atomic<std::size_t> g_memo_budget{std::size_t{128} << 20};  // 128 MiB
}  // namespace

int limits::working_cap() { return g_working_cap.load(); }

void limits::set_working_cap(int n) {
  g_working_cap.store(std::clamp(n, 0, hard_cap()));
}

int limits::hard_cap() { return g_hard_cap.load(); }

void limits::set_hard_cap(int n) {
  g_hard_cap.store(std::clamp(n, 0, kCeiling));
  if (working_cap() > hard_cap()) g_working_cap.store(hard_cap());
}

std::size_t limits::memo_budget_bytes() { return g_memo_budget.load(); }

void limits::set_memo_budget_bytes(std::size_t bytes) { g_memo_budget.store(bytes); }

}  // namespace vinculab
