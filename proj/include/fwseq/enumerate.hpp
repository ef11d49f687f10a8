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

// Generators for the candidate space of reduced sequences: every letter
// twice, or one letter three times and the rest twice. All output is
// canonical, duplicate-free, and sorted by its text form.

#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "fwseq/formation.hpp"
#include "fwseq/parallel.hpp"
#include "fwseq/sequence.hpp"

namespace fwseq {

struct CandidateSet {
  std::size_t n = 0;
  std::string provenance;
  std::vector<Sequence> members;

  std::set<std::string> as_strings() const {
    std::set<std::string> out;
    for (const auto& m : members) out.insert(to_string(m));
    return out;
  }
};

namespace detail {

inline std::ptrdiff_t first_occurrence(const std::vector<Letter>& w, Letter a) {
  const auto it = std::find(w.begin(), w.end(), a);
  return it == w.end() ? -1 : it - w.begin();
}

inline std::ptrdiff_t last_occurrence(const std::vector<Letter>& w, Letter a) {
  const auto it = std::find(w.rbegin(), w.rend(), a);
  return it == w.rend() ? -1 : static_cast<std::ptrdiff_t>(w.rend() - it) - 1;
}

// Both copies of letter k go after the first occurrence of k-1, the second
// after the first; this reaches every canonical doubled word exactly once.
inline void doubled_rec(std::vector<Letter>& w, Letter k, Letter n, const std::function<void(const std::vector<Letter>&)>& visit) {
  if (k > n) {
    visit(w);
    return;
  }
  const auto len = static_cast<std::ptrdiff_t>(w.size());
  for (std::ptrdiff_t i = first_occurrence(w, k - 1) + 1; i <= len; ++i) {
    w.insert(w.begin() + i, k);
    for (std::ptrdiff_t j = i + 1; j <= len + 1; ++j) {
      w.insert(w.begin() + j, k);
      doubled_rec(w, k + 1, n, visit);
      w.erase(w.begin() + j);
    }
    w.erase(w.begin() + i);
  }
}

inline void sort_by_text(std::vector<Sequence>& v) {
  std::sort(v.begin(), v.end(), [](const Sequence& a, const Sequence& b) { return to_string(a) < to_string(b); });
}

inline void assert_unique(const std::vector<Sequence>& sorted, const char* who) {
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i] == sorted[i - 1]) throw std::logic_error(std::string(who) + ": generator emitted a duplicate " + to_string(sorted[i]));
  }
}

}  // namespace detail

// Streams every canonical word of length 2n in which each letter occurs twice.
inline void for_each_doubled(std::size_t n, const std::function<void(const Sequence&)>& visit) {
  if (n == 0) throw std::invalid_argument("gen_doubled: n must be >= 1");
  std::vector<Letter> w{1, 1};
  detail::doubled_rec(w, 2, static_cast<Letter>(n), [&](const std::vector<Letter>& word) { visit(Sequence(word)); });
}

inline CandidateSet gen_doubled(std::size_t n) {
  CandidateSet out{n, "doubled", {}};
  for_each_doubled(n, [&](const Sequence& s) { out.members.push_back(s); });
  detail::sort_by_text(out.members);
  detail::assert_unique(out.members, "gen_doubled");
  return out;
}

// Streams every canonical word of length 2n+1 with one letter three times,
// every other letter twice, that contains a 5-alternation. Each word is built
// from the doubled word left after deleting the last copy of its triple
// letter, so it is reached exactly once.
inline void for_each_alt5_candidate(std::size_t n, const std::function<void(const Sequence&)>& visit) {
  if (n < 2) throw std::invalid_argument("gen_alt5_candidates: n must be >= 2");
  for_each_doubled(n, [&](const Sequence& x) {
    const std::vector<Letter>& base = x.vec();
    for (Letter i = 1; i <= n; ++i) {
      const auto last = detail::last_occurrence(base, i);
      for (auto j = last + 1; j <= static_cast<std::ptrdiff_t>(base.size()); ++j) {
        std::vector<Letter> w = base;
        w.insert(w.begin() + j, i);
        Sequence cand(std::move(w));
        if (alternation_length(cand) >= 5) visit(cand);
      }
    }
  });
}

inline CandidateSet gen_alt5_candidates(std::size_t n) {
  CandidateSet out{n, "alt5_candidates", {}};
  for_each_alt5_candidate(n, [&](const Sequence& s) { out.members.push_back(s); });
  detail::sort_by_text(out.members);
  detail::assert_unique(out.members, "gen_alt5_candidates");
  return out;
}

struct EnumerateOptions {
  unsigned threads = 1;
  // Called from the calling thread with (done, total) while filtering.
  std::function<void(std::size_t, std::size_t)> progress;
};

struct EnumerateStats {
  std::size_t candidates = 0;
  std::uint64_t fw_nodes = 0;
};

// The candidates with fw = 4 and alternation length exactly 5.
inline CandidateSet enumerate_fw4_alt5(std::size_t n, const EnumerateOptions& opts = {}, EnumerateStats* stats = nullptr) {
  if (n < 2) throw std::invalid_argument("enumerate_fw4_alt5: n must be >= 2");
  const CandidateSet cands = gen_alt5_candidates(n);
  const std::size_t total = cands.members.size();
  std::vector<std::uint8_t> keep(total, 0);
  std::vector<std::uint64_t> nodes(total, 0);

  constexpr std::size_t kBatch = 4096;
  for (std::size_t begin = 0; begin < total; begin += kBatch) {
    const std::size_t end = std::min(total, begin + kBatch);
    parallel_for(end - begin, opts.threads, [&](unsigned, std::size_t k) {
      const std::size_t idx = begin + k;
      const Sequence& u = cands.members[idx];
      if (alternation_length(u) != 5) return;
      // One block past 4 settles "fw == 4" without searching further.
      const FwResult r = fw_search(u, {1, 4});
      nodes[idx] = r.nodes_visited;
      keep[idx] = r.fw.has_value() && *r.fw == 4;
    });
    if (opts.progress) opts.progress(end, total);
  }

  CandidateSet out{n, "fw4_alt5", {}};
  for (std::size_t i = 0; i < total; ++i) {
    if (keep[i]) out.members.push_back(cands.members[i]);
  }
  if (stats != nullptr) {
    stats->candidates = total;
    stats->fw_nodes = 0;
    for (auto v : nodes) stats->fw_nodes += v;
  }
  return out;
}

}  // namespace fwseq
