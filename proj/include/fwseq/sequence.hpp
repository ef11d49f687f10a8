// Copyright 2026 The fwseq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Core sequence type and the pattern-containment primitives everything else
// is built on. Letters are positive integers; "canonical" means the first
// occurrences read 1, 2, ..., r from left to right.

#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fwseq {

using Letter = std::uint32_t;

// Thrown by parse_sequence. Carries the zero-based index of the offending
// token (for compact input, the character index).
class ParseError : public std::invalid_argument {
 public:
  ParseError(std::size_t token_index, const std::string& what)
      : std::invalid_argument("token " + std::to_string(token_index) + ": " + what),
        token_index_(token_index) {}

  std::size_t token_index() const noexcept { return token_index_; }

 private:
  std::size_t token_index_;
};

class Sequence {
 public:
  Sequence() = default;
  Sequence(std::initializer_list<Letter> letters) : letters_(letters) { validate(); }
  explicit Sequence(std::vector<Letter> letters) : letters_(std::move(letters)) { validate(); }

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }

  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }
  auto rbegin() const noexcept { return letters_.rbegin(); }
  auto rend() const noexcept { return letters_.rend(); }

  std::span<const Letter> letters() const noexcept { return letters_; }
  const std::vector<Letter>& vec() const noexcept { return letters_; }

  // Number of distinct letters.
  std::size_t distinct() const {
    std::vector<Letter> v = letters_;
    std::sort(v.begin(), v.end());
    return static_cast<std::size_t>(std::unique(v.begin(), v.end()) - v.begin());
  }

  Letter max_letter() const noexcept {
    return letters_.empty() ? 0 : *std::max_element(letters_.begin(), letters_.end());
  }

  friend bool operator==(const Sequence&, const Sequence&) = default;
  friend auto operator<=>(const Sequence&, const Sequence&) = default;

 private:
  void validate() const {
    for (std::size_t i = 0; i < letters_.size(); ++i) {
      if (letters_[i] == 0) throw std::invalid_argument("letter 0 at position " + std::to_string(i));
    }
  }

  std::vector<Letter> letters_;
};

// ---------------------------------------------------------------------------
// Text format
// ---------------------------------------------------------------------------

// Compact digit string when no whitespace is present ("1233121"), otherwise
// whitespace-separated positive integers ("1 2 10 1"). Letters are kept as
// written.
inline Sequence parse_sequence(std::string_view text) {
  const bool spaced = text.find_first_of(" \t\r\n") != std::string_view::npos;
  std::vector<Letter> out;
  if (!spaced) {
    for (std::size_t i = 0; i < text.size(); ++i) {
      const char c = text[i];
      if (c < '0' || c > '9') throw ParseError(i, std::string("non-numeric character '") + c + "'");
      if (c == '0') throw ParseError(i, "letter 0 is not allowed");
      out.push_back(static_cast<Letter>(c - '0'));
    }
    return Sequence(std::move(out));
  }
  std::istringstream in{std::string(text)};
  std::string tok;
  for (std::size_t idx = 0; in >> tok; ++idx) {
    std::size_t start = 0;
    if (tok[0] == '-') throw ParseError(idx, "negative letter '" + tok + "'");
    if (tok[0] == '+') start = 1;
    if (start == tok.size()) throw ParseError(idx, "non-numeric token '" + tok + "'");
    std::uint64_t value = 0;
    for (std::size_t k = start; k < tok.size(); ++k) {
      const char c = tok[k];
      if (c < '0' || c > '9') throw ParseError(idx, "non-numeric token '" + tok + "'");
      value = value * 10 + static_cast<std::uint64_t>(c - '0');
      if (value > 0xffffffffULL) throw ParseError(idx, "letter out of range '" + tok + "'");
    }
    if (value == 0) throw ParseError(idx, "letter 0 is not allowed");
    out.push_back(static_cast<Letter>(value));
  }
  return Sequence(std::move(out));
}

// Compact when every letter is a single digit, spaced otherwise. Choosing on
// the largest letter (rather than the alphabet size) keeps
// parse(to_string(s)) == s for non-canonical input too. The one exception is
// a lone letter above 9, which has no separator to mark it as spaced.
inline std::string to_string(const Sequence& s) {
  std::string out;
  const bool compact = s.max_letter() <= 9;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!compact && i > 0) out.push_back(' ');
    out += std::to_string(s[i]);
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const Sequence& s) { return os << to_string(s); }

// ---------------------------------------------------------------------------
// Transformations
// ---------------------------------------------------------------------------

inline Sequence canonicalize(const Sequence& s) {
  std::map<Letter, Letter> rename;
  std::vector<Letter> out;
  out.reserve(s.size());
  for (Letter a : s) {
    auto [it, inserted] = rename.try_emplace(a, static_cast<Letter>(rename.size() + 1));
    out.push_back(it->second);
  }
  return Sequence(std::move(out));
}

inline bool is_canonical(const Sequence& s) {
  Letter next = 1;
  for (Letter a : s) {
    if (a > next) return false;
    if (a == next) ++next;
  }
  return true;
}

inline Sequence reverse(const Sequence& s) {
  std::vector<Letter> out(s.rbegin(), s.rend());
  return Sequence(std::move(out));
}

// ---------------------------------------------------------------------------
// Occurrence profile
// ---------------------------------------------------------------------------

struct OccurrenceProfile {
  std::map<Letter, std::size_t> counts;

  std::size_t total() const {
    std::size_t t = 0;
    for (const auto& [letter, c] : counts) t += c;
    return t;
  }

  // Every letter occurs at least twice. The empty sequence counts as reduced.
  bool is_reduced() const {
    return std::all_of(counts.begin(), counts.end(), [](const auto& kv) { return kv.second >= 2; });
  }

  // Exactly one letter three times, every other letter twice.
  bool is_shape_3_2() const {
    std::size_t threes = 0;
    for (const auto& [letter, c] : counts) {
      if (c == 3) {
        ++threes;
      } else if (c != 2) {
        return false;
      }
    }
    return threes == 1;
  }
};

inline OccurrenceProfile occurrence_profile(const Sequence& s) {
  OccurrenceProfile p;
  for (Letter a : s) ++p.counts[a];
  return p;
}

// Strips every letter that occurs exactly once and canonicalizes.
inline Sequence reduce(const Sequence& s) {
  const auto profile = occurrence_profile(s);
  std::vector<Letter> kept;
  for (Letter a : s) {
    if (profile.counts.at(a) >= 2) kept.push_back(a);
  }
  return canonicalize(Sequence(std::move(kept)));
}

// Sparsity in the extension sense: each letter differs from the r-1 letters
// before it. For sequences of length >= r this is exactly "every r
// consecutive letters are pairwise distinct".
inline bool is_r_sparse(const Sequence& s, std::size_t r) {
  if (r == 0) throw std::invalid_argument("is_r_sparse: r must be >= 1");
  for (std::size_t i = 0; i < s.size(); ++i) {
    const std::size_t lo = i >= r - 1 ? i - (r - 1) : 0;
    for (std::size_t j = lo; j < i; ++j) {
      if (s[j] == s[i]) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Subsequence and containment
// ---------------------------------------------------------------------------

// Exact-letter subsequence test, greedy left to right.
inline bool is_subsequence(std::span<const Letter> haystack, std::span<const Letter> needle) {
  std::size_t k = 0;
  for (std::size_t i = 0; i < haystack.size() && k < needle.size(); ++i) {
    if (haystack[i] == needle[k]) ++k;
  }
  return k == needle.size();
}

inline bool is_subsequence(const Sequence& haystack, const Sequence& needle) {
  return is_subsequence(haystack.letters(), needle.letters());
}

// Tests containment of a fixed pattern up to injective renaming.
//
// The pattern is stored with dense letters 0..r-1 in first-occurrence order.
// Matching backtracks over the image of each pattern letter at its first
// occurrence; once a letter is bound, the next occurrence is found by a jump
// table, and greedy leftmost matching is exact for a fixed renaming.
class PatternMatcher {
 public:
  explicit PatternMatcher(const Sequence& pattern) {
    const Sequence c = canonicalize(pattern);
    pattern_.reserve(c.size());
    for (Letter a : c) pattern_.push_back(a - 1);
    alphabet_ = static_cast<std::uint32_t>(c.max_letter());
  }

  std::size_t pattern_length() const noexcept { return pattern_.size(); }
  std::uint32_t pattern_alphabet() const noexcept { return alphabet_; }

  // `text` must already use dense letters 0..text_alphabet-1.
  bool contains_dense(std::span<const std::uint32_t> text, std::uint32_t text_alphabet) const {
    if (pattern_.empty()) return true;
    if (text.size() < pattern_.size() || text_alphabet < alphabet_) return false;
    const std::size_t len = text.size();
    const std::size_t width = text_alphabet;
    // next[(i)*width + c]: smallest position >= i holding c, or len.
    next_.assign((len + 1) * width, static_cast<std::uint32_t>(len));
    for (std::size_t i = len; i-- > 0;) {
      std::copy_n(next_.begin() + static_cast<std::ptrdiff_t>((i + 1) * width), width,
                  next_.begin() + static_cast<std::ptrdiff_t>(i * width));
      next_[i * width + text[i]] = static_cast<std::uint32_t>(i);
    }
    image_.assign(alphabet_, kUnbound);
    used_.assign(width, 0);
    return search(0, 0, len, width);
  }

  bool contains(const Sequence& text) const {
    std::map<Letter, std::uint32_t> dense;
    std::vector<std::uint32_t> t;
    t.reserve(text.size());
    for (Letter a : text) {
      auto [it, inserted] = dense.try_emplace(a, static_cast<std::uint32_t>(dense.size()));
      t.push_back(it->second);
    }
    return contains_dense(t, static_cast<std::uint32_t>(dense.size()));
  }

 private:
  static constexpr std::uint32_t kUnbound = 0xffffffffu;

  bool search(std::size_t k, std::size_t pos, std::size_t len, std::size_t width) const {
    if (k == pattern_.size()) return true;
    // Not enough text left for the rest of the pattern.
    if (len - pos < pattern_.size() - k) return false;
    const std::uint32_t a = pattern_[k];
    if (image_[a] != kUnbound) {
      const std::uint32_t at = next_[pos * width + image_[a]];
      return at < len && search(k + 1, at + 1, len, width);
    }
    // First occurrence of a pattern letter: try every unused text letter.
    for (std::uint32_t c = 0; c < width; ++c) {
      if (used_[c]) continue;
      const std::uint32_t at = next_[pos * width + c];
      if (at >= len) continue;
      image_[a] = c;
      used_[c] = 1;
      const bool ok = search(k + 1, at + 1, len, width);
      image_[a] = kUnbound;
      used_[c] = 0;
      if (ok) return true;
    }
    return false;
  }

  std::vector<std::uint32_t> pattern_;
  std::uint32_t alphabet_ = 0;
  // Scratch buffers; a matcher is not shareable across threads.
  mutable std::vector<std::uint32_t> next_;
  mutable std::vector<std::uint32_t> image_;
  mutable std::vector<std::uint8_t> used_;
};

// True iff some subsequence of `s` becomes `u` under a one-to-one renaming.
inline bool contains_pattern(const Sequence& s, const Sequence& u) {
  return PatternMatcher(u).contains(s);
}

// Longest two-letter alternation x y x y ... contained in `s`. Any nonempty
// sequence has alternation length at least 1; an alternation of length >= 2
// needs two distinct letters.
inline std::size_t alternation_length(const Sequence& s) {
  if (s.empty()) return 0;
  const Sequence c = canonicalize(s);
  const std::size_t r = c.max_letter();
  std::size_t best = 1;
  for (Letter x = 1; x <= r; ++x) {
    for (Letter y = x + 1; y <= r; ++y) {
      // Greedy: the longest alternation over {x, y} is the number of runs in
      // the subsequence restricted to x and y.
      std::size_t runs = 0;
      Letter last = 0;
      for (Letter a : c) {
        if ((a == x || a == y) && a != last) {
          ++runs;
          last = a;
        }
      }
      best = std::max(best, runs);
    }
  }
  return best;
}

// a b a b ... of the given length over letters 1 and 2.
inline Sequence alternation(std::size_t length) {
  std::vector<Letter> v(length);
  for (std::size_t i = 0; i < length; ++i) v[i] = (i % 2 == 0) ? 1 : 2;
  return Sequence(std::move(v));
}

}  // namespace fwseq
