#include "vinculab/bijection.hpp"

#include <algorithm>
#include <map>

#include "vinculab/errors.hpp"
#include "vinculab/oracle.hpp"
#include "vinculab/pattern.hpp"

namespace vinculab {

Permutation phi(const Permutation& p) {
  static const VincularPattern tau = VincularPattern::parse("12-3");
  if (contains(tau, p))
    throw error("phi is defined on 12-3-avoiding permutations only; got " +
                p.str());
  const auto& v = p.values();
  std::vector<int> out;
  out.reserve(v.size());
  // Tail recursion unrolled: split each suffix at its maximum, reverse the
  // left part, keep the maximum, and continue with the right part.
  std::size_t lo = 0;
  while (lo < v.size()) {
    const auto max_it = std::max_element(v.begin() + static_cast<std::ptrdiff_t>(lo), v.end());
    const std::size_t mid = static_cast<std::size_t>(max_it - v.begin());
    for (std::size_t i = mid; i > lo;) out.push_back(v[--i]);
    out.push_back(v[mid]);
    lo = mid + 1;
  }
  return Permutation::unchecked(std::move(out));
}

std::string PhiReport::summary() const {
  std::string s = "n=" + std::to_string(n) + " checked=" + checked.str();
  s += clean() ? " clean" : " VIOLATIONS";
  s += " distribution_match_k3=" + std::string(distribution_match_k3 ? "yes" : "no");
  s += " distribution_match_k4=" + std::string(distribution_match_k4 ? "yes" : "no");
  return s;
}

PhiReport check_phi_properties(int n) {
  PhiReport report;
  report.n = n;
  static const VincularPattern p21_3 = VincularPattern::parse("21-3");
  static const VincularPattern p13_2 = VincularPattern::parse("13-2");
  static const VincularPattern run3 = VincularPattern::parse("213");
  static const VincularPattern rise3 = VincularPattern::parse("123");
  static const VincularPattern run4 = VincularPattern::parse("3214");
  static const VincularPattern rise4 = VincularPattern::parse("1234");

  const auto domain = list_class({{VincularPattern::parse("12-3")}, std::nullopt, n});
  std::vector<Permutation> images;
  images.reserve(domain.size());
  std::map<Int, Int> dist_dom_k3, dist_img_k3, dist_dom_k4, dist_img_k4;

  auto note = [&](const std::string& what, const Permutation& p) {
    if (report.violation_examples.size() < 5)
      report.violation_examples.push_back(what + ": " + p.str());
  };

  for (const auto& p : domain) {
    const Permutation image = phi(p);
    images.push_back(image);
    report.checked += 1;

    if (!avoids(p21_3, image)) {
      report.avoidance_failures += 1;
      note("image contains 21-3", p);
    }
    if (phi(image) != p) {
      report.involution_failures += 1;
      note("phi(phi(p)) != p", p);
    }
    if (occurrences(p13_2, p) != occurrences(p13_2, image)) {
      report.preserve_13_2_failures += 1;
      note("13-2 count changed", p);
    }
    const Int d3 = occurrences(run3, p), i3 = occurrences(rise3, image);
    const Int d4 = occurrences(run4, p), i4 = occurrences(rise4, image);
    for (int r = 0; r <= 1; ++r) {
      if ((d3 == r) != (i3 == r) || (d4 == r) != (i4 == r)) {
        report.transport_failures += 1;
        note("containment transport failed at r=" + std::to_string(r), p);
      }
    }
    dist_dom_k3[d3] += 1;
    dist_img_k3[i3] += 1;
    dist_dom_k4[d4] += 1;
    dist_img_k4[i4] += 1;
  }

  std::sort(images.begin(), images.end());
  const auto target = list_class({{p21_3}, std::nullopt, n});
  report.image_set_matches = images == target;
  report.distribution_match_k3 = dist_dom_k3 == dist_img_k3;
  report.distribution_match_k4 = dist_dom_k4 == dist_img_k4;
  return report;
}

}  // namespace vinculab
