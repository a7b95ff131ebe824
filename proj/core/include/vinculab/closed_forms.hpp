#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "vinculab/bigint.hpp"

namespace vinculab {

/// One cataloged closed form: the formula exactly as printed in the source
/// tables plus, where the printed form fails against the oracle, a candidate
/// correction. Corrections are explicit data, never silent substitutions.
struct ClosedFormEntry {
  std::string id;  // e.g. "f_13-2;2", "a^{1,1}"

  // Oracle query the formula claims to answer.
  std::vector<std::string> avoid;    // patterns, text form
  std::optional<std::string> tau;    // counted statistic (absent for a^{r,s})
  int r = 0;
  std::optional<int> s;              // second statistic for a^{r,s}

  int printed_floor = 0;
  std::string printed_text;
  /// Absent when the printed expression is too garbled to evaluate.
  std::function<Rat(long)> printed_eval;

  struct Correction {
    std::function<Rat(long)> eval;
    int floor = 0;
    std::string corrected_text;
    std::string note;
  };
  std::optional<Correction> correction;

  /// The oracle-faithful evaluator: the correction when present, otherwise
  /// the printed formula.
  Rat trusted_eval(long n) const;
  int trusted_floor() const;
};

/// The full catalog (41 ids: the f/g/h corollary tables plus the two
/// two-statistic formulas).
const std::vector<ClosedFormEntry>& closed_form_catalog();

const ClosedFormEntry* find_closed_form(const std::string& id);

/// Evaluates the printed formula exactly as printed. Throws
/// formula_floor_error below the validity floor and non_integral_error when
/// the printed expression does not produce an integer.
Int eval_closed_form(const std::string& id, long n);

enum class VerifyStatus { Match, Corrected, Mismatch };

struct VerificationFinding {
  std::string id;
  VerifyStatus status;
  int n_from = 0;
  int n_to = 0;
  /// First n where the printed form disagreed with the oracle (when any).
  std::optional<int> first_bad_n;
  std::string printed_value;  // value at first_bad_n ("not evaluable" if garbled)
  std::string oracle_value;
  std::string note;
};

struct VerificationReport {
  int n_max = 0;
  std::string version;
  std::vector<VerificationFinding> findings;

  bool all_ok() const;  // no Mismatch entries
};

/// Compares each id against the oracle on validity_floor..n_max; on failure
/// tries the cataloged correction. Findings are data: nothing throws.
VerificationReport verify_report(const std::vector<std::string>& ids, int n_max);

/// Convenience: every id in the catalog.
std::vector<std::string> all_closed_form_ids();

const char* verify_status_text(VerifyStatus s);

}  // namespace vinculab
