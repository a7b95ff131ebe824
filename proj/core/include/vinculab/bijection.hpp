#pragma once

#include <string>
#include <vector>

#include "vinculab/bigint.hpp"
#include "vinculab/permutation.hpp"

namespace vinculab {

/// The recursive map (pi', n, pi'') -> (reverse(pi'), n, phi(pi'')) carrying
/// 12-3-avoiders to 21-3-avoiders. Requires the input to avoid 12-3.
Permutation phi(const Permutation& p);

/// Exhaustive property check over S_n(12-3). The asserted properties are:
/// the image avoids 21-3, phi is an involution, phi preserves the 13-2
/// occurrence count, the image set is exactly S_n(21-3), and for k in {3,4}
/// and r in {0,1} the count of (k-1)...21k occurrences equals r exactly when
/// the image's count of 12...k occurrences does. Full-distribution agreement
/// for those pattern pairs is reported as data but not asserted.
struct PhiReport {
  int n = 0;
  Int checked = 0;
  Int avoidance_failures = 0;
  Int involution_failures = 0;
  Int preserve_13_2_failures = 0;
  Int transport_failures = 0;  // r in {0,1}, k in {3,4}
  bool image_set_matches = false;
  bool distribution_match_k3 = false;  // reported, not asserted
  bool distribution_match_k4 = false;  // reported, not asserted
  std::vector<std::string> violation_examples;

  bool clean() const {
    return avoidance_failures == 0 && involution_failures == 0 &&
           preserve_13_2_failures == 0 && transport_failures == 0 &&
           image_set_matches;
  }
  std::string summary() const;
};

PhiReport check_phi_properties(int n);

}  // namespace vinculab
