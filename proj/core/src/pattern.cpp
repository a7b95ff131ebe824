#include "vinculab/pattern.hpp"

#include <algorithm>

#include "vinculab/errors.hpp"

namespace vinculab {

VincularPattern::VincularPattern(std::vector<int> letters, std::vector<bool> glued)
    : letters_(std::move(letters)), glued_(std::move(glued)) {
  const int k = static_cast<int>(letters_.size());
  if (k < 1) throw error("pattern must have at least one letter");
  if (static_cast<int>(glued_.size()) != k - 1)
    throw error("adjacency mask must have k-1 entries");
  std::vector<bool> seen(static_cast<std::size_t>(k) + 1, false);
  for (int v : letters_) {
    if (v < 1 || v > k || seen[static_cast<std::size_t>(v)])
      throw error("pattern letters must form a permutation of {1.." +
                  std::to_string(k) + "}");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

VincularPattern VincularPattern::parse(const std::string& text) {
  std::vector<int> letters;
  std::vector<bool> glued;
  bool expect_digit = true;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '-') {
      if (expect_digit)
        throw pattern_parse_error(
            i == 0 ? "pattern may not start with a dash" : "double dash", i);
      glued.push_back(false);
      expect_digit = true;
    } else if (c >= '1' && c <= '9') {
      if (!expect_digit) glued.push_back(true);
      letters.push_back(c - '0');
      expect_digit = false;
    } else {
      throw pattern_parse_error(std::string("unexpected character '") + c + "'", i);
    }
  }
  if (text.empty()) throw pattern_parse_error("empty pattern", 0);
  if (expect_digit) throw pattern_parse_error("trailing dash", text.size() - 1);

  const int k = static_cast<int>(letters.size());
  std::vector<std::size_t> digit_pos;
  for (std::size_t i = 0; i < text.size(); ++i)
    if (text[i] != '-') digit_pos.push_back(i);
  std::vector<bool> seen(static_cast<std::size_t>(k) + 1, false);
  for (std::size_t j = 0; j < letters.size(); ++j) {
    const int v = letters[j];
    if (v > k)
      throw pattern_parse_error("letters do not form a permutation of {1.." +
                                    std::to_string(k) + "}",
                                digit_pos[j]);
    if (seen[static_cast<std::size_t>(v)])
      throw pattern_parse_error(std::string("repeated digit '") +
                                    static_cast<char>('0' + v) + "'",
                                digit_pos[j]);
    seen[static_cast<std::size_t>(v)] = true;
  }
  return VincularPattern(std::move(letters), std::move(glued));
}

bool VincularPattern::is_type_2_1() const {
  return length() == 3 && glued_[0] && !glued_[1];
}

std::string VincularPattern::str() const {
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i > 0 && !glued_[i - 1]) out.push_back('-');
    out.push_back(static_cast<char>('0' + letters_[i]));
  }
  return out;
}

VincularPattern complement_pattern(const VincularPattern& tau) {
  const int k = tau.length();
  std::vector<int> letters;
  letters.reserve(static_cast<std::size_t>(k));
  for (int v : tau.letters()) letters.push_back(k + 1 - v);
  return VincularPattern(std::move(letters), tau.glued());
}

namespace {

constexpr int kMaxLetters = 9;

// Maximal glued blocks of the pattern: letter ranges that must land on
// consecutive host positions.
struct Blocks {
  int count = 0;
  int start[kMaxLetters];   // first letter index (0-based) of each block
  int len[kMaxLetters];
  int tail_len[kMaxLetters + 1];  // total letters in blocks b..count-1
};

Blocks split_blocks(const VincularPattern& tau) {
  Blocks b;
  const int k = tau.length();
  int begin = 0;
  for (int i = 0; i < k; ++i) {
    const bool block_ends = (i == k - 1) || !tau.glued()[static_cast<std::size_t>(i)];
    if (block_ends) {
      b.start[b.count] = begin;
      b.len[b.count] = i - begin + 1;
      ++b.count;
      begin = i + 1;
    }
  }
  b.tail_len[b.count] = 0;
  for (int t = b.count - 1; t >= 0; --t) b.tail_len[t] = b.tail_len[t + 1] + b.len[t];
  return b;
}

// Depth-first placement of blocks in order. `positions[j]` is the host
// position of pattern letter j once placed. Order-isomorphism is checked
// pairwise as each letter is placed, so mismatching branches die early.
// When CountAll is false the scan stops at the first full match.
// When PinLast is true the final block is forced to end at the last host
// position (incremental containment checks during prefix extension).
template <bool CountAll, bool PinLast>
bool scan(const std::vector<int>& letters, const Blocks& bl,
          std::span<const int> vals, int block, int min_start, int* positions,
          Int& count) {
  const int n = static_cast<int>(vals.size());
  if (block == bl.count) {
    if constexpr (CountAll) {
      ++count;
      return false;
    } else {
      return true;
    }
  }
  const int len = bl.len[block];
  int lo = min_start;
  int hi = n - bl.tail_len[block];
  if (PinLast && block == bl.count - 1) lo = std::max(lo, hi);
  for (int s = lo; s <= hi; ++s) {
    bool ok = true;
    for (int j = 0; j < len && ok; ++j) {
      const int letter = bl.start[block] + j;
      const int pos = s + j;
      positions[letter] = pos;
      for (int m = 0; m < letter; ++m) {
        if ((letters[static_cast<std::size_t>(m)] < letters[static_cast<std::size_t>(letter)]) !=
            (vals[static_cast<std::size_t>(positions[m])] < vals[static_cast<std::size_t>(pos)])) {
          ok = false;
          break;
        }
      }
    }
    if (ok && scan<CountAll, PinLast>(letters, bl, vals, block + 1, s + len,
                                      positions, count))
      return true;
  }
  return false;
}

}  // namespace

Int occurrences(const VincularPattern& tau, std::span<const int> values) {
  if (tau.length() > static_cast<int>(values.size())) return 0;
  const Blocks bl = split_blocks(tau);
  int positions[kMaxLetters];
  Int count = 0;
  scan<true, false>(tau.letters(), bl, values, 0, 0, positions, count);
  return count;
}

Int occurrences(const VincularPattern& tau, const Permutation& p) {
  return occurrences(tau, std::span<const int>(p.values()));
}

bool contains(const VincularPattern& tau, std::span<const int> values) {
  if (tau.length() > static_cast<int>(values.size())) return false;
  const Blocks bl = split_blocks(tau);
  int positions[kMaxLetters];
  Int count = 0;
  return scan<false, false>(tau.letters(), bl, values, 0, 0, positions, count);
}

bool contains(const VincularPattern& tau, const Permutation& p) {
  return contains(tau, std::span<const int>(p.values()));
}

bool avoids(const VincularPattern& tau, const Permutation& p) {
  return !contains(tau, p);
}

bool occurrence_ends_at_back(const VincularPattern& tau, std::span<const int> values) {
  if (tau.length() > static_cast<int>(values.size())) return false;
  const Blocks bl = split_blocks(tau);
  int positions[kMaxLetters];
  Int count = 0;
  return scan<false, true>(tau.letters(), bl, values, 0, 0, positions, count);
}

}  // namespace vinculab
