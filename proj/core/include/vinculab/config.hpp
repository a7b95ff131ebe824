#pragma once

#include <cstddef>

namespace vinculab {

// Enumeration guards. The hard cap bounds what any enumeration will attempt;
// the working cap is the budget normal oracle queries run under. Both are
// configurable (the hard cap up to an absolute ceiling) so that verification
// suites can deliberately buy a few extra sample points; the class
// enumerator prunes by prefix containment, which keeps avoidance classes
// tractable a little past the full-factorial ceiling.
class limits {
 public:
  static constexpr int kCeiling = 15;
  static constexpr int kDefaultHardCap = 12;
  static constexpr int kDefaultWorkingCap = 10;

  static int working_cap();
  /// Clamped to [0, hard_cap()].
  static void set_working_cap(int n);

  static int hard_cap();
  /// Clamped to [0, kCeiling]; lowers the working cap when it would exceed.
  static void set_hard_cap(int n);

  static std::size_t memo_budget_bytes();
  static void set_memo_budget_bytes(std::size_t bytes);
};

/// RAII helper: adjusts the working cap (raising the hard cap alongside when
/// needed) for one scope.
class scoped_working_cap {
 public:
  explicit scoped_working_cap(int n)
      : previous_hard_(limits::hard_cap()), previous_working_(limits::working_cap()) {
    if (n > limits::hard_cap()) limits::set_hard_cap(n);
    limits::set_working_cap(n);
  }
  ~scoped_working_cap() {
    limits::set_hard_cap(previous_hard_);
    limits::set_working_cap(previous_working_);
  }
  scoped_working_cap(const scoped_working_cap&) = delete;
  scoped_working_cap& operator=(const scoped_working_cap&) = delete;

 private:
  int previous_hard_;
  int previous_working_;
};

}  // namespace vinculab
