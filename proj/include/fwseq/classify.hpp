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

// The known list of reduced sequences with formation width 4 and
// alternation length 5, as symbolic families, plus classification of an
// arbitrary sequence against it and a two-way check against enumeration.
//
// Family ids F01..F22 follow the order of the list: F01..F12 are fixed
// sequences, F13..F22 are parametrized by the alphabet size n and, for some,
// an index i.

#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "fwseq/enumerate.hpp"
#include "fwseq/sequence.hpp"

namespace fwseq {

struct FamilyDescriptor {
  std::string id;
  std::string pattern;  // human-readable form
  std::size_t min_n = 0;
  std::size_t max_n = 0;  // 0: unbounded
  // Admissible i for a given n; empty vector means "no index parameter".
  std::function<std::vector<std::size_t>(std::size_t)> indices;
  std::function<Sequence(std::size_t n, std::size_t i)> instantiate;

  bool admits(std::size_t n) const { return n >= min_n && (max_n == 0 || n <= max_n); }
  bool has_index() const { return static_cast<bool>(indices); }
};

namespace detail {

inline void append_range(std::vector<Letter>& out, std::size_t from, std::size_t to) {
  for (std::size_t a = from; a <= to; ++a) out.push_back(static_cast<Letter>(a));
}

inline FamilyDescriptor fixed_family(std::string id, const char* text) {
  Sequence s = parse_sequence(text);
  const std::size_t n = s.distinct();
  return {std::move(id), text, n, n, nullptr, [s](std::size_t, std::size_t) { return s; }};
}

inline std::function<std::vector<std::size_t>(std::size_t)> index_range(std::size_t lo, std::ptrdiff_t hi_offset) {
  return [lo, hi_offset](std::size_t n) {
    std::vector<std::size_t> out;
    const auto hi = static_cast<std::ptrdiff_t>(n) + hi_offset;
    for (auto i = static_cast<std::ptrdiff_t>(lo); i <= hi; ++i) out.push_back(static_cast<std::size_t>(i));
    return out;
  };
}

inline std::vector<FamilyDescriptor> build_families() {
  std::vector<FamilyDescriptor> f;
  f.push_back(fixed_family("F01", "12121"));
  f.push_back(fixed_family("F02", "1233121"));
  f.push_back(fixed_family("F03", "123412134"));
  f.push_back(fixed_family("F04", "123441213"));
  f.push_back(fixed_family("F05", "123413214"));
  f.push_back(fixed_family("F06", "123431243"));
  f.push_back(fixed_family("F07", "123421432"));
  f.push_back(fixed_family("F08", "123431214"));
  f.push_back(fixed_family("F09", "123432143"));
  f.push_back(fixed_family("F10", "123412143"));
  f.push_back(fixed_family("F11", "12345124325"));
  f.push_back(fixed_family("F12", "12345312154"));

  f.push_back({"F13", "1 2..n 1 3..i 2 (i+1)..n 1", 4, 0, index_range(3, -1), [](std::size_t n, std::size_t i) {
                 std::vector<Letter> v;
                 append_range(v, 1, n);
                 v.push_back(1);
                 append_range(v, 3, i);
                 v.push_back(2);
                 append_range(v, i + 1, n);
                 v.push_back(1);
                 return Sequence(std::move(v));
               }});
  f.push_back({"F14", "1 2..n 1 2..(i-1) (i+1)..n i 1", 4, 0, index_range(3, -1), [](std::size_t n, std::size_t i) {
                 std::vector<Letter> v;
                 append_range(v, 1, n);
                 v.push_back(1);
                 append_range(v, 2, i - 1);
                 append_range(v, i + 1, n);
                 v.push_back(static_cast<Letter>(i));
                 v.push_back(1);
                 return Sequence(std::move(v));
               }});
  f.push_back({"F15", "1 2..n 1 3..n 2 1", 3, 0, nullptr, [](std::size_t n, std::size_t) {
                 std::vector<Letter> v;
                 append_range(v, 1, n);
                 v.push_back(1);
                 append_range(v, 3, n);
                 v.push_back(2);
                 v.push_back(1);
                 return Sequence(std::move(v));
               }});
  f.push_back({"F16", "1..n 2..n 2 1", 3, 0, nullptr, [](std::size_t n, std::size_t) {
                 std::vector<Letter> v;
                 append_range(v, 1, n);
                 append_range(v, 2, n);
                 v.push_back(2);
                 v.push_back(1);
                 return Sequence(std::move(v));
               }});
  f.push_back({"F17", "1..n 2 1 3..n 1", 3, 0, nullptr, [](std::size_t n, std::size_t) {
                 std::vector<Letter> v;
                 append_range(v, 1, n);
                 v.push_back(2);
                 v.push_back(1);
                 append_range(v, 3, n);
                 v.push_back(1);
                 return Sequence(std::move(v));
               }});
  f.push_back({"F18", "1..n 2 1 3..n 2", 3, 0, nullptr, [](std::size_t n, std::size_t) {
                 std::vector<Letter> v;
                 append_range(v, 1, n);
                 v.push_back(2);
                 v.push_back(1);
                 append_range(v, 3, n);
                 v.push_back(2);
                 return Sequence(std::move(v));
               }});
  f.push_back({"F19", "1..n 1..n i", 2, 0, index_range(1, -1), [](std::size_t n, std::size_t i) {
                 std::vector<Letter> v;
                 append_range(v, 1, n);
                 append_range(v, 1, n);
                 v.push_back(static_cast<Letter>(i));
                 return Sequence(std::move(v));
               }});
  f.push_back({"F20", "1..n 1..(n-1) i n", 3, 0, index_range(1, -2), [](std::size_t n, std::size_t i) {
                 std::vector<Letter> v;
                 append_range(v, 1, n);
                 append_range(v, 1, n - 1);
                 v.push_back(static_cast<Letter>(i));
                 v.push_back(static_cast<Letter>(n));
                 return Sequence(std::move(v));
               }});
  f.push_back({"F21", "1..n 1 2 4..n 3 2", 4, 0, nullptr, [](std::size_t n, std::size_t) {
                 std::vector<Letter> v;
                 append_range(v, 1, n);
                 v.push_back(1);
                 v.push_back(2);
                 append_range(v, 4, n);
                 v.push_back(3);
                 v.push_back(2);
                 return Sequence(std::move(v));
               }});
  f.push_back({"F22", "1..n 1 3..n 3 2", 4, 0, nullptr, [](std::size_t n, std::size_t) {
                 std::vector<Letter> v;
                 append_range(v, 1, n);
                 v.push_back(1);
                 append_range(v, 3, n);
                 v.push_back(3);
                 v.push_back(2);
                 return Sequence(std::move(v));
               }});
  return f;
}

}  // namespace detail

inline const std::vector<FamilyDescriptor>& families() {
  static const std::vector<FamilyDescriptor> kFamilies = detail::build_families();
  return kFamilies;
}

inline const FamilyDescriptor& family_by_id(const std::string& id) {
  for (const auto& f : families()) {
    if (f.id == id) return f;
  }
  throw std::invalid_argument("unknown family id " + id);
}

struct FamilyInstance {
  std::string id;
  std::size_t n = 0;
  std::optional<std::size_t> i;
  Sequence sequence;
};

// Every instantiation of every family with exactly n letters (no reversal).
inline std::vector<FamilyInstance> family_instances(std::size_t n) {
  std::vector<FamilyInstance> out;
  for (const auto& f : families()) {
    if (!f.admits(n)) continue;
    if (f.has_index()) {
      for (std::size_t i : f.indices(n)) out.push_back({f.id, n, i, f.instantiate(n, i)});
    } else {
      out.push_back({f.id, n, std::nullopt, f.instantiate(n, 0)});
    }
  }
  return out;
}

// Canonical family members on n letters, closed under reversal.
inline std::set<Sequence> theorem_families(std::size_t n) {
  if (n < 2) throw std::invalid_argument("theorem_families: n must be >= 2");
  std::set<Sequence> out;
  for (const auto& inst : family_instances(n)) {
    out.insert(canonicalize(inst.sequence));
    out.insert(canonicalize(reverse(inst.sequence)));
  }
  return out;
}

struct FamilyMatch {
  std::string id;
  std::size_t n = 0;
  std::optional<std::size_t> i;
  bool reversed = false;  // matched after reversing the reduced input

  friend bool operator==(const FamilyMatch&, const FamilyMatch&) = default;
};

inline std::string describe(const FamilyMatch& m) {
  std::string s = m.id + " n=" + std::to_string(m.n);
  if (m.i) s += " i=" + std::to_string(*m.i);
  if (m.reversed) s += " reversed";
  return s;
}

// Every family match of the reduced form of u, ordered by family id, then
// index, with direct matches before reversed ones.
inline std::vector<FamilyMatch> classify_all(const Sequence& u) {
  const Sequence core = reduce(u);
  std::vector<FamilyMatch> out;
  if (core.empty()) return out;
  const Sequence rev = canonicalize(reverse(core));
  const std::size_t n = core.distinct();
  for (const auto& inst : family_instances(n)) {
    const Sequence c = canonicalize(inst.sequence);
    if (c == core) out.push_back({inst.id, n, inst.i, false});
    if (c == rev) out.push_back({inst.id, n, inst.i, true});
  }
  std::stable_sort(out.begin(), out.end(), [](const FamilyMatch& a, const FamilyMatch& b) {
    if (a.id != b.id) return a.id < b.id;
    if (a.i != b.i) return a.i < b.i;
    return a.reversed < b.reversed;
  });
  return out;
}

inline std::optional<FamilyMatch> classify_sequence(const Sequence& u) {
  auto all = classify_all(u);
  if (all.empty()) return std::nullopt;
  return all.front();
}

struct ClassificationReport {
  std::size_t n = 0;
  std::size_t enumerated = 0;
  std::size_t family_members = 0;
  // family id -> enumerated sequences it covers (text form, sorted)
  std::map<std::string, std::vector<std::string>> matched;
  std::vector<std::string> unmatched_enumerated;
  std::vector<std::string> unmatched_family;

  bool passed() const { return unmatched_enumerated.empty() && unmatched_family.empty(); }
};

// Builds the report from an already enumerated set.
inline ClassificationReport compare_with_families(std::size_t n, const std::vector<Sequence>& enumerated) {
  ClassificationReport rep;
  rep.n = n;
  rep.enumerated = enumerated.size();
  const auto fam = theorem_families(n);
  rep.family_members = fam.size();
  std::set<Sequence> seen(enumerated.begin(), enumerated.end());
  for (const auto& s : enumerated) {
    const auto matches = classify_all(s);
    if (matches.empty()) {
      rep.unmatched_enumerated.push_back(to_string(s));
      continue;
    }
    std::set<std::string> ids;
    for (const auto& m : matches) ids.insert(m.id);
    for (const auto& id : ids) rep.matched[id].push_back(to_string(s));
  }
  for (const auto& f : fam) {
    if (!seen.count(f)) rep.unmatched_family.push_back(to_string(f));
  }
  return rep;
}

inline ClassificationReport verify_theorem(std::size_t n, const EnumerateOptions& opts = {}) {
  if (n < 2) throw std::invalid_argument("verify_theorem: n must be >= 2");
  const CandidateSet e = enumerate_fw4_alt5(n, opts);
  return compare_with_families(n, e.members);
}

}  // namespace fwseq
