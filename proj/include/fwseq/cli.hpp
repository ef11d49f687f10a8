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

// Command-line front end. `run` takes the arguments after the program name
// and writes results to `out`, diagnostics and progress to `err`.
//
// Exit codes: 0 ok, 1 verification failure, 2 usage error, 3 work cap hit.

#pragma once

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "fwseq/classify.hpp"
#include "fwseq/enumerate.hpp"
#include "fwseq/extremal.hpp"
#include "fwseq/formation.hpp"
#include "fwseq/golden.hpp"
#include "fwseq/sequence.hpp"

namespace fwseq::cli {

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kUsage = 2, kUnresolved = 3 };

using Json = nlohmann::ordered_json;

namespace detail {

// FWSEQ_LOG_LEVEL=quiet silences progress output.
inline bool progress_enabled() {
  const char* level = std::getenv("FWSEQ_LOG_LEVEL");
  return level == nullptr || std::string(level) != "quiet";
}

inline Json level_json(const FwLevel& l) { return Json{{"blocks", l.blocks}, {"frontier", l.frontier}, {"survivors", l.survivors}}; }

inline const char* outcome_name(CheckOutcome o) {
  switch (o) {
    case CheckOutcome::kAllContain:
      return "all_contain";
    case CheckOutcome::kCounterexample:
      return "counterexample";
    case CheckOutcome::kUnresolved:
      return "unresolved";
  }
  return "unresolved";
}

inline Json match_json(const FamilyMatch& m) {
  Json j{{"family", m.id}, {"pattern", family_by_id(m.id).pattern}, {"n", m.n}};
  j["i"] = m.i ? Json(*m.i) : Json(nullptr);
  j["reversed"] = m.reversed;
  return j;
}

struct Options {
  std::string format = "text";
  unsigned threads = 0;
  std::string seq_a;
  std::string seq_b;
  bool naive = false;
  bool verbose = false;
  std::size_t max_r = 6;
  std::uint64_t budget = 0;  // 0: command default
  std::size_t letters = 0;
  std::size_t max_letters = 0;
  std::string golden;
  std::string pattern;
  std::size_t n = 0;
};

class Runner {
 public:
  Runner(const Options& o, std::ostream& out, std::ostream& err) : o_(o), out_(out), err_(err) {}

  int fw_cmd() {
    const Sequence u = parse_sequence(o_.seq_a);
    if (u.empty()) throw CLI::ValidationError("fw", "sequence must be nonempty");
    const FwResult r = fw_search(u, {o_.threads, 0});
    std::optional<NaiveFwResult> naive;
    if (o_.naive) naive = fw_naive(u, std::min<std::size_t>(u.size(), 40));
    if (json()) {
      Json j{{"sequence", to_string(u)}, {"fw", *r.fw}, {"nodes_visited", r.nodes_visited}};
      Json levels = Json::array();
      for (const auto& l : r.levels) levels.push_back(level_json(l));
      j["levels"] = levels;
      if (naive) {
        j["naive_fw"] = naive->fw ? Json(*naive->fw) : Json(nullptr);
        j["naive_nodes"] = naive->nodes_visited;
      }
      emit(j);
    } else {
      out_ << "fw=" << *r.fw << '\n';
      if (naive) out_ << "naive_fw=" << (naive->fw ? std::to_string(*naive->fw) : "unresolved") << " naive_nodes=" << naive->nodes_visited << " nodes_visited=" << r.nodes_visited << '\n';
    }
    return kOk;
  }

  int fl_cmd() {
    const Sequence u = parse_sequence(o_.seq_a);
    if (u.empty()) throw CLI::ValidationError("fl", "sequence must be nonempty");
    if (o_.max_r < u.distinct()) throw CLI::ValidationError("--max-r", "must be at least the number of distinct letters");
    FormationCheckOptions fo;
    fo.threads = o_.threads;
    if (o_.budget != 0) fo.budget = o_.budget;
    const FlResult r = fl(u, o_.max_r, fo);
    if (json()) {
      Json j{{"sequence", to_string(u)}, {"fw", r.fw}};
      j["fl"] = r.fl ? Json(*r.fl) : Json(nullptr);
      j["resolved"] = r.fl.has_value();
      j["max_r"] = r.max_r;
      j["checks"] = r.checks;
      Json steps = Json::array();
      for (const auto& s : r.steps) {
        steps.push_back(Json{{"r", s.r}, {"outcome", outcome_name(s.check.outcome)}, {"checks", s.check.checks}, {"space", s.check.space}});
      }
      j["steps"] = steps;
      emit(j);
    } else if (r.fl) {
      out_ << "fl=" << *r.fl << '\n';
    } else {
      out_ << "fl=unresolved(max_r=" << r.max_r << (r.budget_exhausted ? ", budget exhausted" : "") << ")\n";
    }
    return r.fl ? kOk : kUnresolved;
  }

  int contains_cmd() {
    const Sequence s = parse_sequence(o_.seq_a);
    const Sequence u = parse_sequence(o_.seq_b);
    const bool c = contains_pattern(s, u);
    if (json()) {
      emit(Json{{"sequence", to_string(s)}, {"pattern", to_string(u)}, {"contains", c}});
    } else {
      out_ << (c ? "true" : "false") << '\n';
    }
    return kOk;
  }

  int alt_cmd() {
    const Sequence s = parse_sequence(o_.seq_a);
    const std::size_t a = alternation_length(s);
    if (json()) {
      emit(Json{{"sequence", to_string(s)}, {"alternation_length", a}});
    } else {
      out_ << "alt=" << a << '\n';
    }
    return kOk;
  }

  int enumerate_cmd() {
    if (o_.letters < 2) throw CLI::ValidationError("--letters", "must be >= 2");
    const CandidateSet set = enumerate_fw4_alt5(o_.letters, enum_options("enumerate", o_.letters));
    if (json()) {
      Json seqs = Json::array();
      for (const auto& m : set.members) {
        seqs.push_back(Json{{"sequence", to_string(m)}, {"fw", fw(m)}, {"alternation_length", alternation_length(m)}});
      }
      emit(Json{{"n", o_.letters}, {"count", set.members.size()}, {"sequences", seqs}});
    } else {
      for (const auto& m : set.members) out_ << to_string(m) << '\n';
    }
    return kOk;
  }

  int classify_cmd() {
    const Sequence u = parse_sequence(o_.seq_a);
    const auto all = classify_all(u);
    if (json()) {
      Json j{{"sequence", to_string(u)}, {"reduced", to_string(reduce(u))}};
      j["match"] = all.empty() ? Json(nullptr) : match_json(all.front());
      if (o_.verbose) {
        Json ms = Json::array();
        for (const auto& m : all) ms.push_back(match_json(m));
        j["matches"] = ms;
      }
      emit(j);
    } else if (all.empty()) {
      out_ << "none\n";
    } else if (o_.verbose) {
      for (const auto& m : all) out_ << describe(m) << "  [" << family_by_id(m.id).pattern << "]\n";
    } else {
      out_ << describe(all.front()) << '\n';
    }
    return kOk;
  }

  int verify_cmd() {
    if (o_.max_letters < 2) throw CLI::ValidationError("--max-letters", "must be >= 2");
    std::optional<GoldenBlocks> golden;
    if (!o_.golden.empty()) golden = read_golden_file(o_.golden);

    bool ok = true;
    Json report = Json::array();
    for (std::size_t n = 2; n <= o_.max_letters; ++n) {
      const CandidateSet e = enumerate_fw4_alt5(n, enum_options("verify-theorem", n));
      const ClassificationReport rep = compare_with_families(n, e.members);
      ok = ok && rep.passed();

      std::optional<bool> golden_ok;
      std::vector<std::string> golden_missing, golden_extra;
      if (golden) {
        const auto it = golden->find(n);
        if (it != golden->end()) {
          const auto got = e.as_strings();
          std::set_difference(it->second.begin(), it->second.end(), got.begin(), got.end(), std::back_inserter(golden_missing));
          std::set_difference(got.begin(), got.end(), it->second.begin(), it->second.end(), std::back_inserter(golden_extra));
          golden_ok = golden_missing.empty() && golden_extra.empty();
          ok = ok && *golden_ok;
        }
      }

      if (json()) {
        Json j{{"n", n}, {"enumerated", rep.enumerated}, {"family_members", rep.family_members}};
        Json per = Json::object();
        for (const auto& [id, seqs] : rep.matched) per[id] = seqs.size();
        j["per_family"] = per;
        j["unmatched_enumerated"] = rep.unmatched_enumerated;
        j["unmatched_family"] = rep.unmatched_family;
        j["golden"] = golden_ok ? Json(*golden_ok) : Json(nullptr);
        if (golden_ok && !*golden_ok) {
          j["golden_missing"] = golden_missing;
          j["golden_extra"] = golden_extra;
        }
        j["passed"] = rep.passed() && golden_ok.value_or(true);
        report.push_back(j);
      } else {
        out_ << "n=" << n << " enumerated=" << rep.enumerated << " family_members=" << rep.family_members
             << " unmatched_enumerated=" << rep.unmatched_enumerated.size() << " unmatched_family=" << rep.unmatched_family.size();
        if (golden_ok) out_ << " golden=" << (*golden_ok ? "match" : "MISMATCH");
        out_ << ' ' << (rep.passed() && golden_ok.value_or(true) ? "PASS" : "FAIL") << '\n';
        for (const auto& [id, seqs] : rep.matched) out_ << "  " << id << ": " << seqs.size() << '\n';
        for (const auto& s : rep.unmatched_enumerated) out_ << "  unmatched enumerated: " << s << '\n';
        for (const auto& s : rep.unmatched_family) out_ << "  unmatched family member: " << s << '\n';
        for (const auto& s : golden_missing) out_ << "  golden only: " << s << '\n';
        for (const auto& s : golden_extra) out_ << "  enumeration only: " << s << '\n';
      }
    }
    if (json()) {
      emit(Json{{"max_letters", o_.max_letters}, {"passed", ok}, {"results", report}});
    } else {
      out_ << (ok ? "PASS" : "FAIL") << '\n';
    }
    return ok ? kOk : kVerifyFailed;
  }

  int ex_cmd() {
    const Sequence u = parse_sequence(o_.pattern);
    if (u.empty()) throw CLI::ValidationError("--pattern", "must be nonempty");
    if (o_.n == 0) throw CLI::ValidationError("--n", "must be >= 1");
    ExtremalOptions eo;
    if (o_.budget != 0) eo.budget = o_.budget;
    const ExtremalResult r = ex_bruteforce(u, o_.n, eo);
    if (json()) {
      emit(Json{{"pattern", to_string(u)},
                {"n", r.n},
                {"value", r.value},
                {"exact", !r.cap_hit},
                {"witness", to_string(r.witness)},
                {"nodes", r.nodes},
                {"cap_hit", r.cap_hit}});
    } else {
      out_ << (r.cap_hit ? "ex>=" : "ex=") << r.value << " witness=" << to_string(r.witness) << " nodes=" << r.nodes << '\n';
    }
    return r.cap_hit ? kUnresolved : kOk;
  }

 private:
  bool json() const { return o_.format == "json"; }
  void emit(const Json& j) { out_ << j.dump(2) << '\n'; }

  EnumerateOptions enum_options(const char* tag, std::size_t n) {
    EnumerateOptions eo;
    eo.threads = o_.threads;
    if (progress_enabled()) {
      eo.progress = [this, tag, n](std::size_t done, std::size_t total) {
        err_ << "[" << tag << " n=" << n << "] filtered " << done << "/" << total << " candidates\n";
      };
    }
    return eo;
  }

  const Options& o_;
  std::ostream& out_;
  std::ostream& err_;
};

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  detail::Options o;
  CLI::App app{"Formation width, pattern containment and sequence classification tools", "fwseq"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--threads", o.threads, "Worker threads (0 = all hardware threads)");

  auto* fw_c = app.add_subcommand("fw", "Formation width of a sequence");
  fw_c->add_option("sequence", o.seq_a, "Sequence, e.g. 12121 or \"1 2 10 1\"")->required();
  fw_c->add_flag("--naive", o.naive, "Also run the unpruned enumeration and report its node count");

  auto* fl_c = app.add_subcommand("fl", "Formation length of a sequence");
  fl_c->add_option("sequence", o.seq_a, "Sequence")->required();
  fl_c->add_option("--max-r", o.max_r, "Largest alphabet size to try");
  fl_c->add_option("--budget", o.budget, "Maximum formations to examine per alphabet size");

  auto* contains_c = app.add_subcommand("contains", "Whether a sequence contains a pattern up to renaming");
  contains_c->add_option("sequence", o.seq_a, "Sequence")->required();
  contains_c->add_option("pattern", o.seq_b, "Pattern")->required();

  auto* alt_c = app.add_subcommand("alt", "Alternation length of a sequence");
  alt_c->add_option("sequence", o.seq_a, "Sequence")->required();

  auto* enum_c = app.add_subcommand("enumerate", "Every reduced sequence with fw 4 and alternation length 5 on n letters");
  enum_c->add_option("--letters", o.letters, "Number of distinct letters n")->required();

  auto* classify_c = app.add_subcommand("classify", "Match a sequence against the known fw-4 families");
  classify_c->add_option("sequence", o.seq_a, "Sequence")->required();
  classify_c->add_flag("--verbose", o.verbose, "List every matching family");

  auto* verify_c = app.add_subcommand("verify-theorem", "Compare enumeration against the families for n = 2..N");
  verify_c->add_option("--max-letters", o.max_letters, "Largest n")->required();
  verify_c->add_option("--golden", o.golden, "Golden file to compare the enumeration with");

  auto* ex_c = app.add_subcommand("ex", "Exact Ex(u, n) by exhaustive search");
  ex_c->add_option("--pattern", o.pattern, "Pattern u")->required();
  ex_c->add_option("--n", o.n, "Number of letters")->required();
  ex_c->add_option("--budget", o.budget, "Search node budget");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  }

  detail::Runner runner(o, out, err);
  try {
    if (*fw_c) return runner.fw_cmd();
    if (*fl_c) return runner.fl_cmd();
    if (*contains_c) return runner.contains_cmd();
    if (*alt_c) return runner.alt_cmd();
    if (*enum_c) return runner.enumerate_cmd();
    if (*classify_c) return runner.classify_cmd();
    if (*verify_c) return runner.verify_cmd();
    if (*ex_c) return runner.ex_cmd();
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "error: bad sequence: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
    return kVerifyFailed;
  }
  return kUsage;
}

}  // namespace fwseq::cli
