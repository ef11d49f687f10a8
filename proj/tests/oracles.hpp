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

// Brute-force reference implementations used only by the tests. None of
// these call into the library's matching or search code.

#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "fwseq/sequence.hpp"

namespace fwseq::oracle {

using Word = std::vector<Letter>;

// Right-to-left recursive subsequence test.
inline bool issubseq(const Word& seq, std::size_t seq_len, const Word& sub, std::size_t sub_len) {
  if (sub_len == 0) return true;
  if (seq_len == 0) return false;
  if (seq[seq_len - 1] == sub[sub_len - 1]) return issubseq(seq, seq_len - 1, sub, sub_len - 1);
  return issubseq(seq, seq_len - 1, sub, sub_len);
}

inline bool issubseq(const Word& seq, const Word& sub) { return issubseq(seq, seq.size(), sub, sub.size()); }

inline Word letters_of(const Word& w) {
  Word v = w;
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// Tries every injective renaming of u's letters into s's letters.
inline bool contains(const Word& s, const Word& u) {
  const Word ul = letters_of(u);
  const Word sl = letters_of(s);
  if (ul.size() > sl.size()) return false;
  if (ul.empty()) return true;
  // Choose an ordered ul.size()-subset of sl: permute a selector mask.
  std::vector<std::size_t> idx(sl.size());
  std::iota(idx.begin(), idx.end(), 0);
  bool found = false;
  std::function<void(std::size_t, std::vector<bool>&, std::map<Letter, Letter>&)> rec =
      [&](std::size_t k, std::vector<bool>& used, std::map<Letter, Letter>& m) {
        if (found) return;
        if (k == ul.size()) {
          Word mapped;
          for (Letter a : u) mapped.push_back(m[a]);
          if (issubseq(s, mapped)) found = true;
          return;
        }
        for (std::size_t j = 0; j < sl.size(); ++j) {
          if (used[j]) continue;
          used[j] = true;
          m[ul[k]] = sl[j];
          rec(k + 1, used, m);
          used[j] = false;
        }
      };
  std::vector<bool> used(sl.size(), false);
  std::map<Letter, Letter> m;
  rec(0, used, m);
  return found;
}

inline bool contains(const Sequence& s, const Sequence& u) { return contains(s.vec(), u.vec()); }

// Longest x y x y ... found by testing explicit alternations.
inline std::size_t alternation_length(const Word& s) {
  if (s.empty()) return 0;
  std::size_t best = 1;
  const Word ls = letters_of(s);
  for (Letter x : ls) {
    for (Letter y : ls) {
      if (x == y) continue;
      for (std::size_t k = 2; k <= s.size(); ++k) {
        Word alt;
        for (std::size_t i = 0; i < k; ++i) alt.push_back(i % 2 == 0 ? x : y);
        if (!issubseq(s, alt)) break;
        best = std::max(best, k);
      }
    }
  }
  return best;
}

// Every restricted-growth word of the given length on at most max_letters.
inline void for_each_canonical_word(std::size_t length, std::size_t max_letters, const std::function<void(const Word&)>& visit) {
  Word w;
  std::function<void(Letter)> rec = [&](Letter used) {
    if (w.size() == length) {
      visit(w);
      return;
    }
    for (Letter a = 1; a <= std::min<Letter>(used + 1, static_cast<Letter>(max_letters)); ++a) {
      w.push_back(a);
      rec(std::max(used, a));
      w.pop_back();
    }
  };
  rec(0);
}

inline Word canonical(const Word& s) {
  std::map<Letter, Letter> m;
  Word out;
  for (Letter a : s) out.push_back(m.try_emplace(a, static_cast<Letter>(m.size() + 1)).first->second);
  return out;
}

// All 2^(s-1) binary formations over 1..r, flattened.
inline std::vector<Word> binary_formations(std::size_t r, std::size_t s) {
  std::vector<Word> out;
  Word p(r);
  std::iota(p.begin(), p.end(), Letter{1});
  Word q(p.rbegin(), p.rend());
  for (std::size_t bits = 0; bits < (std::size_t{1} << (s - 1)); ++bits) {
    Word f = p;
    for (std::size_t b = 0; b + 1 < s; ++b) {
      const Word& blk = ((bits >> b) & 1) ? q : p;
      f.insert(f.end(), blk.begin(), blk.end());
    }
    out.push_back(f);
  }
  return out;
}

// Every (r, s)-formation, block 0 included, flattened.
inline std::vector<Word> all_formations(std::size_t r, std::size_t s) {
  std::vector<Word> perms;
  Word p(r);
  std::iota(p.begin(), p.end(), Letter{1});
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::vector<Word> out{Word{}};
  for (std::size_t b = 0; b < s; ++b) {
    std::vector<Word> next;
    for (const auto& f : out) {
      for (const auto& q : perms) {
        Word g = f;
        g.insert(g.end(), q.begin(), q.end());
        next.push_back(g);
      }
    }
    out = std::move(next);
  }
  return out;
}

inline Sequence random_sequence(std::mt19937_64& rng, std::size_t max_len, std::size_t max_letters) {
  std::uniform_int_distribution<std::size_t> len_d(0, max_len);
  std::uniform_int_distribution<Letter> letter_d(1, static_cast<Letter>(max_letters));
  const std::size_t len = len_d(rng);
  Word w(len);
  for (auto& a : w) a = letter_d(rng);
  return Sequence(std::move(w));
}

// A random subsequence of s (each position kept with probability 1/2).
inline Sequence random_subsequence(std::mt19937_64& rng, const Sequence& s) {
  Word w;
  std::bernoulli_distribution keep(0.5);
  for (Letter a : s) {
    if (keep(rng)) w.push_back(a);
  }
  return Sequence(std::move(w));
}

}  // namespace fwseq::oracle
