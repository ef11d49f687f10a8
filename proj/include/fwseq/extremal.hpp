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

// Exhaustive search for Ex(u, n): the longest r-sparse sequence on at most n
// letters that avoids u, with r = distinct(u). Only practical for tiny n.

#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fwseq/sequence.hpp"

namespace fwseq {

struct ExtremalOptions {
  std::uint64_t budget = 100'000'000ULL;  // search-tree nodes
  // Re-check every accepted node with a full containment scan. Slow; tests only.
  bool cross_check = false;
};

struct ExtremalResult {
  Sequence pattern;
  std::size_t n = 0;
  std::size_t value = 0;  // exact unless cap_hit, then a lower bound
  Sequence witness;
  std::uint64_t nodes = 0;
  bool cap_hit = false;
};

// n choose r times l times r, saturating.
inline std::uint64_t pigeonhole_bound(std::size_t n, std::size_t r, std::size_t l) {
  if (r > n) return 0;
  unsigned __int128 c = 1;
  for (std::size_t k = 1; k <= r; ++k) c = c * (n - r + k) / k;
  c = c * l * r;
  if (c > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  return static_cast<std::uint64_t>(c);
}

namespace detail {

// Incremental containment state. A partial embedding is the renaming of the
// pattern letters seen so far plus how far into the pattern it reaches; for a
// fixed renaming only the furthest reach matters, so states are keyed by the
// renaming alone.
class EmbeddingFrontier {
 public:
  static constexpr std::size_t kMaxPatternLetters = 16;
  using Map = std::array<std::uint8_t, kMaxPatternLetters>;  // 0 = unbound, else text letter

  struct State {
    Map image{};
    std::uint8_t reach = 0;
  };

  EmbeddingFrontier() { states_.push_back(State{}); }

  // Appends text letter c (1-based, < 256). Returns false if the pattern
  // becomes fully embedded, in which case the frontier is left unchanged.
  bool push(const std::vector<std::uint8_t>& pattern, std::uint8_t c, EmbeddingFrontier& out) const {
    out.states_ = states_;
    for (const State& st : states_) {
      if (st.reach == pattern.size()) continue;
      const std::uint8_t a = pattern[st.reach];
      State next = st;
      if (st.image[a] == c) {
        ++next.reach;
      } else if (st.image[a] == 0 && !uses(st.image, c)) {
        next.image[a] = c;
        ++next.reach;
      } else {
        continue;
      }
      if (next.reach == pattern.size()) return false;
      out.upsert(next);
    }
    return true;
  }

  std::size_t size() const noexcept { return states_.size(); }

 private:
  static bool uses(const Map& m, std::uint8_t c) { return std::find(m.begin(), m.end(), c) != m.end(); }

  void upsert(const State& s) {
    for (State& t : states_) {
      if (t.image == s.image) {
        t.reach = std::max(t.reach, s.reach);
        return;
      }
    }
    states_.push_back(s);
  }

  std::vector<State> states_;
};

class ExtremalSearch {
 public:
  ExtremalSearch(const Sequence& u, std::size_t n, const ExtremalOptions& opts) : n_(n), opts_(opts), original_(u) {
    const Sequence c = canonicalize(u);
    for (Letter a : c) pattern_.push_back(static_cast<std::uint8_t>(a - 1));
    r_ = c.max_letter();
    depth_cap_ = n < r_ ? n : static_cast<std::size_t>(std::min<std::uint64_t>(pigeonhole_bound(n, r_, c.size()), 1u << 20));
  }

  ExtremalResult run() {
    ExtremalResult res;
    res.pattern = original_;
    res.n = n_;
    std::vector<EmbeddingFrontier> stack(1);
    dfs(stack, 0);
    res.value = best_.size();
    res.witness = Sequence(std::vector<Letter>(best_.begin(), best_.end()));
    res.nodes = nodes_;
    res.cap_hit = cap_hit_;
    return res;
  }

 private:
  // `prefix_` is an accepted (sparse, avoiding) canonical prefix whose
  // containment state is stack[depth].
  void dfs(std::vector<EmbeddingFrontier>& stack, Letter max_used) {
    if (prefix_.size() > best_.size()) best_ = prefix_;
    if (prefix_.size() > depth_cap_) throw std::logic_error("ex: sequence grew past the pigeonhole bound");
    const std::size_t depth = prefix_.size();
    if (stack.size() <= depth + 1) stack.resize(depth + 2);
    const Letter limit = std::min<Letter>(static_cast<Letter>(n_), max_used + 1);
    for (Letter c = 1; c <= limit; ++c) {
      if (cap_hit_) return;
      if (!sparse_after(c)) continue;
      if (!stack[depth].push(pattern_, static_cast<std::uint8_t>(c), stack[depth + 1])) continue;
      if (nodes_ >= opts_.budget) {
        cap_hit_ = true;
        return;
      }
      ++nodes_;
      prefix_.push_back(c);
      if (opts_.cross_check) check_node();
      dfs(stack, std::max(max_used, c));
      prefix_.pop_back();
    }
  }

  bool sparse_after(Letter c) const {
    const std::size_t len = prefix_.size();
    const std::size_t look = r_ == 0 ? 0 : std::min(len, r_ - 1);
    for (std::size_t k = 0; k < look; ++k) {
      if (prefix_[len - 1 - k] == c) return false;
    }
    return true;
  }

  void check_node() const {
    Sequence s(std::vector<Letter>(prefix_.begin(), prefix_.end()));
    if (contains_pattern(s, original_)) throw std::logic_error("ex: incremental containment accepted " + to_string(s));
  }

  std::size_t n_;
  ExtremalOptions opts_;
  Sequence original_;
  std::vector<std::uint8_t> pattern_;
  std::size_t r_ = 0;
  std::size_t depth_cap_ = 0;
  std::vector<Letter> prefix_;
  std::vector<Letter> best_;
  std::uint64_t nodes_ = 0;
  bool cap_hit_ = false;
};

}  // namespace detail

// Depth-first search over canonical r-sparse sequences, extending only with
// letters that keep the last r positions distinct and pruning as soon as the
// pattern embeds. Letters are tried in ascending order.
inline ExtremalResult ex_bruteforce(const Sequence& u, std::size_t n, const ExtremalOptions& opts = {}) {
  if (u.empty()) throw std::invalid_argument("ex: pattern must be nonempty");
  if (n == 0) throw std::invalid_argument("ex: n must be >= 1");
  if (n > 255) throw std::invalid_argument("ex: n must be <= 255");
  if (u.distinct() > detail::EmbeddingFrontier::kMaxPatternLetters) throw std::invalid_argument("ex: pattern has too many distinct letters");
  if (u.size() > 255) throw std::invalid_argument("ex: pattern too long");
  return detail::ExtremalSearch(u, n, opts).run();
}

}  // namespace fwseq
