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

// Formations and the two width measures built on them.
//
// An (r, s)-formation is s permutations of the same r letters written one
// after another. A binary formation uses only one base permutation p and its
// reverse. fw(u) is the least s at which every binary (r, s)-formation with
// r = distinct(u) contains u; fl(u) is the least r at which every
// (r, fw(u))-formation does.

#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fwseq/parallel.hpp"
#include "fwseq/sequence.hpp"

namespace fwseq {

class Formation {
 public:
  Formation(std::size_t r, std::vector<std::vector<Letter>> perms) : r_(r), perms_(std::move(perms)) {
    for (std::size_t b = 0; b < perms_.size(); ++b) {
      if (perms_[b].size() != r_) throw std::invalid_argument("formation block " + std::to_string(b) + " has wrong size");
      std::vector<Letter> sorted = perms_[b];
      std::sort(sorted.begin(), sorted.end());
      for (std::size_t i = 0; i < r_; ++i) {
        if (sorted[i] != i + 1) throw std::invalid_argument("formation block " + std::to_string(b) + " is not a permutation of 1..r");
      }
    }
  }

  // Splits `flat` into r-sized blocks.
  static Formation from_flat(std::size_t r, const Sequence& flat) {
    if (r == 0 || flat.size() % r != 0) throw std::invalid_argument("flattened formation length is not a multiple of r");
    std::vector<std::vector<Letter>> perms;
    for (std::size_t i = 0; i < flat.size(); i += r) perms.emplace_back(flat.begin() + static_cast<std::ptrdiff_t>(i), flat.begin() + static_cast<std::ptrdiff_t>(i + r));
    return Formation(r, std::move(perms));
  }

  std::size_t r() const noexcept { return r_; }
  std::size_t s() const noexcept { return perms_.size(); }
  const std::vector<std::vector<Letter>>& perms() const noexcept { return perms_; }

  Sequence flatten() const {
    std::vector<Letter> out;
    out.reserve(r_ * perms_.size());
    for (const auto& p : perms_) out.insert(out.end(), p.begin(), p.end());
    return Sequence(std::move(out));
  }

  friend bool operator==(const Formation&, const Formation&) = default;

 private:
  std::size_t r_;
  std::vector<std::vector<Letter>> perms_;
};

inline bool formation_contains(const Formation& f, const Sequence& u) { return contains_pattern(f.flatten(), u); }

// Binary formation over the identity base permutation 1..r. Bit i of
// `orientation` set means block i is reversed; block 0 is always forward.
struct BinaryFormation {
  std::size_t r = 0;
  std::size_t blocks = 0;
  std::uint64_t orientation = 0;

  bool reversed(std::size_t block) const noexcept { return (orientation >> block) & 1u; }

  // Dense letters 0..r-1, appended to `out`.
  void flatten_dense(std::vector<std::uint32_t>& out) const {
    out.clear();
    out.reserve(r * blocks);
    for (std::size_t b = 0; b < blocks; ++b) {
      if (reversed(b)) {
        for (std::size_t i = r; i-- > 0;) out.push_back(static_cast<std::uint32_t>(i));
      } else {
        for (std::size_t i = 0; i < r; ++i) out.push_back(static_cast<std::uint32_t>(i));
      }
    }
  }

  Formation to_formation() const {
    std::vector<std::vector<Letter>> perms;
    for (std::size_t b = 0; b < blocks; ++b) {
      std::vector<Letter> p(r);
      std::iota(p.begin(), p.end(), Letter{1});
      if (reversed(b)) std::reverse(p.begin(), p.end());
      perms.push_back(std::move(p));
    }
    return Formation(r, std::move(perms));
  }

  // "p" for forward, "P" for reversed, e.g. "pPpp".
  std::string orientation_string() const {
    std::string s;
    for (std::size_t b = 0; b < blocks; ++b) s.push_back(reversed(b) ? 'P' : 'p');
    return s;
  }

  friend bool operator==(const BinaryFormation&, const BinaryFormation&) = default;
};

// ---------------------------------------------------------------------------
// Formation width: pruned frontier search
// ---------------------------------------------------------------------------

struct FwLevel {
  std::size_t blocks = 0;     // formation length s at this level
  std::size_t frontier = 0;   // binary formations examined
  std::size_t survivors = 0;  // of those, how many avoid the pattern
};

struct FwOptions {
  unsigned threads = 1;
  // Stop once the frontier survives this many blocks; 0 means no limit
  // beyond the length-of-pattern guard.
  std::size_t max_blocks = 0;
};

struct FwResult {
  // Unset only when `max_blocks` stopped the search: then fw > max_blocks.
  std::optional<std::size_t> fw;
  std::uint64_t nodes_visited = 0;
  std::vector<FwLevel> levels;
  // Surviving formations at the last level examined (sorted by orientation).
  std::vector<BinaryFormation> last_survivors;
};

// Frontier search. A level holds the binary formations of length s whose
// every prefix avoided the pattern; each survivor spawns two children (append
// p, append reversed p). fw is the length at which no formation survives.
inline FwResult fw_search(const Sequence& u, const FwOptions& opts = {}) {
  if (u.empty()) throw std::invalid_argument("fw: pattern must be nonempty");
  const std::size_t r = u.distinct();
  const std::size_t guard = u.size();
  if (guard > 63) throw std::invalid_argument("fw: pattern longer than 63 letters is not supported");
  const unsigned threads = resolve_threads(opts.threads);

  std::vector<PatternMatcher> matchers(threads, PatternMatcher(u));
  std::vector<std::vector<std::uint32_t>> buffers(threads);

  FwResult result;
  std::vector<BinaryFormation> frontier{BinaryFormation{r, 1, 0}};
  for (std::size_t s = 1;; ++s) {
    if (s > guard) throw std::logic_error("fw: frontier survived past |u| blocks (internal error)");
    std::vector<std::uint8_t> avoids(frontier.size(), 0);
    parallel_for(
        frontier.size(), threads,
        [&](unsigned w, std::size_t i) {
          frontier[i].flatten_dense(buffers[w]);
          avoids[i] = !matchers[w].contains_dense(buffers[w], static_cast<std::uint32_t>(r));
        },
        8);
    result.nodes_visited += frontier.size();

    std::vector<BinaryFormation> survivors;
    for (std::size_t i = 0; i < frontier.size(); ++i) {
      if (avoids[i]) survivors.push_back(frontier[i]);
    }
    result.levels.push_back({s, frontier.size(), survivors.size()});
    if (survivors.empty()) {
      result.fw = s;
      return result;
    }
    if (opts.max_blocks != 0 && s >= opts.max_blocks) {
      result.last_survivors = std::move(survivors);
      return result;
    }

    std::vector<BinaryFormation> next;
    next.reserve(survivors.size() * 2);
    for (const auto& f : survivors) {
      next.push_back({r, s + 1, f.orientation});
      next.push_back({r, s + 1, f.orientation | (std::uint64_t{1} << s)});
    }
    std::sort(next.begin(), next.end(), [](const auto& a, const auto& b) { return a.orientation < b.orientation; });
    result.last_survivors = std::move(survivors);
    frontier = std::move(next);
  }
}

inline std::size_t fw(const Sequence& u, unsigned threads = 1) { return *fw_search(u, {threads, 0}).fw; }

// ---------------------------------------------------------------------------
// Formation width: unpruned enumeration (reference)
// ---------------------------------------------------------------------------

struct NaiveFwResult {
  std::optional<std::size_t> fw;  // unset: unresolved below the cap
  std::size_t cap = 0;
  std::uint64_t nodes_visited = 0;
};

// For s = 1, 2, ... checks all 2^(s-1) binary (r, s)-formations, with no
// pruning and no early exit within a level.
inline NaiveFwResult fw_naive(const Sequence& u, std::size_t max_blocks = 20) {
  if (u.empty()) throw std::invalid_argument("fw_naive: pattern must be nonempty");
  if (max_blocks > 40) throw std::invalid_argument("fw_naive: cap above 40 blocks is not enumerable");
  const std::size_t r = u.distinct();
  const PatternMatcher matcher(u);
  std::vector<std::uint32_t> buf;
  NaiveFwResult result;
  result.cap = max_blocks;
  for (std::size_t s = 1; s <= max_blocks; ++s) {
    bool all = true;
    const std::uint64_t count = std::uint64_t{1} << (s - 1);
    for (std::uint64_t bits = 0; bits < count; ++bits) {
      BinaryFormation{r, s, bits << 1}.flatten_dense(buf);
      ++result.nodes_visited;
      if (!matcher.contains_dense(buf, static_cast<std::uint32_t>(r))) all = false;
    }
    if (all) {
      result.fw = s;
      return result;
    }
  }
  return result;
}

// ---------------------------------------------------------------------------
// Full formations and formation length
// ---------------------------------------------------------------------------

struct FormationCheckOptions {
  // Upper bound on formations examined; larger spaces are reported unresolved.
  std::uint64_t budget = 1'000'000'000ULL;
  unsigned threads = 1;
};

enum class CheckOutcome { kAllContain, kCounterexample, kUnresolved };

struct FormationCheckResult {
  CheckOutcome outcome = CheckOutcome::kUnresolved;
  // Formations examined in sequential order up to the answer; identical for
  // any thread count.
  std::uint64_t checks = 0;
  std::uint64_t space = 0;  // (r!)^(s-1), saturating
  std::optional<Formation> counterexample;
};

namespace detail {

inline std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

inline std::vector<std::vector<std::uint32_t>> all_permutations(std::size_t r) {
  std::vector<std::uint32_t> p(r);
  std::iota(p.begin(), p.end(), 0u);
  std::vector<std::vector<std::uint32_t>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace detail

// Whether every (r, s)-formation contains u. Block 0 is pinned to the
// identity: relabeling a whole formation does not change which patterns it
// contains, so this covers all (r!)^s formations with (r!)^(s-1) checks.
inline FormationCheckResult all_formations_contain(std::size_t r, std::size_t s, const Sequence& u,
                                                   const FormationCheckOptions& opts = {}) {
  if (r < u.distinct()) throw std::invalid_argument("all_formations_contain: r is smaller than the pattern alphabet");
  if (r == 0) throw std::invalid_argument("all_formations_contain: r must be >= 1");
  if (r > 12) throw std::invalid_argument("all_formations_contain: r > 12 is not enumerable");
  FormationCheckResult result;
  if (s == 0) {
    result.space = 1;
    result.checks = 1;
    result.outcome = u.empty() ? CheckOutcome::kAllContain : CheckOutcome::kCounterexample;
    if (!u.empty()) result.counterexample = Formation(r, {});
    return result;
  }

  const auto perms = detail::all_permutations(r);
  const std::uint64_t base = perms.size();
  std::uint64_t space = 1;
  for (std::size_t b = 1; b < s; ++b) space = detail::saturating_mul(space, base);
  result.space = space;
  if (space > opts.budget) return result;

  const unsigned threads = resolve_threads(opts.threads);
  std::vector<PatternMatcher> matchers(threads, PatternMatcher(u));
  std::vector<std::vector<std::uint32_t>> buffers(threads);

  auto decode = [&](std::uint64_t index, std::vector<std::uint32_t>& text) {
    text.resize(r * s);
    for (std::size_t i = 0; i < r; ++i) text[i] = static_cast<std::uint32_t>(i);
    for (std::size_t b = s; b-- > 1;) {
      const auto& p = perms[index % base];
      index /= base;
      std::copy(p.begin(), p.end(), text.begin() + static_cast<std::ptrdiff_t>(b * r));
    }
  };

  // Smallest counterexample index; workers skip chunks past it, so the final
  // value is the sequential answer whatever the scheduling.
  std::atomic<std::uint64_t> first_avoider{space};
  constexpr std::uint64_t kChunk = 256;
  const std::uint64_t chunks = (space + kChunk - 1) / kChunk;
  parallel_for(
      chunks, threads,
      [&](unsigned w, std::size_t c) {
        const std::uint64_t begin = c * kChunk;
        const std::uint64_t end = std::min(space, begin + kChunk);
        for (std::uint64_t idx = begin; idx < end; ++idx) {
          if (idx >= first_avoider.load(std::memory_order_relaxed)) return;
          decode(idx, buffers[w]);
          if (!matchers[w].contains_dense(buffers[w], static_cast<std::uint32_t>(r))) {
            std::uint64_t cur = first_avoider.load();
            while (idx < cur && !first_avoider.compare_exchange_weak(cur, idx)) {
            }
            return;
          }
        }
      },
      1);

  const std::uint64_t found = first_avoider.load();
  if (found == space) {
    result.outcome = CheckOutcome::kAllContain;
    result.checks = space;
  } else {
    result.outcome = CheckOutcome::kCounterexample;
    result.checks = found + 1;
    std::vector<std::uint32_t> text;
    decode(found, text);
    std::vector<Letter> flat(text.begin(), text.end());
    for (auto& a : flat) ++a;
    result.counterexample = Formation::from_flat(r, Sequence(std::move(flat)));
  }
  return result;
}

struct FlStep {
  std::size_t r = 0;
  FormationCheckResult check;
};

struct FlResult {
  std::size_t fw = 0;
  std::optional<std::size_t> fl;  // unset: unresolved
  std::size_t max_r = 0;
  std::uint64_t checks = 0;
  std::vector<FlStep> steps;
  bool budget_exhausted = false;
};

// Least r in [distinct(u), max_r] such that every (r, fw(u))-formation
// contains u. Containment is monotone in r (delete one letter from an
// (r+1, s)-formation to get an (r, s)-formation), so the first success wins.
inline FlResult fl(const Sequence& u, std::size_t max_r, const FormationCheckOptions& opts = {}) {
  if (u.empty()) throw std::invalid_argument("fl: pattern must be nonempty");
  if (max_r < u.distinct()) throw std::invalid_argument("fl: max_r is smaller than the pattern alphabet");
  FlResult result;
  result.max_r = max_r;
  result.fw = fw(u, opts.threads);
  for (std::size_t r = u.distinct(); r <= max_r; ++r) {
    auto check = all_formations_contain(r, result.fw, u, opts);
    result.checks += check.checks;
    const CheckOutcome outcome = check.outcome;
    result.steps.push_back({r, std::move(check)});
    if (outcome == CheckOutcome::kAllContain) {
      result.fl = r;
      return result;
    }
    if (outcome == CheckOutcome::kUnresolved) {
      result.budget_exhausted = true;
      return result;
    }
  }
  return result;
}

}  // namespace fwseq
