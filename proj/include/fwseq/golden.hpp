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

// Golden files: one sequence per line, blocks separated by blank lines, one
// block per alphabet size, '#' starts a comment.

#pragma once

#include <cstddef>
#include <fstream>
#include <istream>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "fwseq/sequence.hpp"

namespace fwseq {

using GoldenBlocks = std::map<std::size_t, std::set<std::string>>;

inline GoldenBlocks read_golden(std::istream& in) {
  GoldenBlocks blocks;
  std::set<std::string> block;
  std::size_t block_n = 0;
  std::size_t line_no = 0;
  auto flush = [&] {
    if (block.empty()) return;
    if (blocks.count(block_n)) throw std::runtime_error("golden: second block for n=" + std::to_string(block_n));
    blocks[block_n] = std::move(block);
    block.clear();
    block_n = 0;
  };
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      // A comment line is not a block separator.
      if (line.find_first_not_of(" \t\r", 0) == hash) continue;
      line.erase(hash);
    }
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) {
      flush();
      continue;
    }
    const auto e = line.find_last_not_of(" \t\r");
    const Sequence s = parse_sequence(line.substr(b, e - b + 1));
    if (!is_canonical(s)) throw std::runtime_error("golden line " + std::to_string(line_no) + ": not canonical");
    const std::size_t n = s.distinct();
    if (block.empty()) {
      block_n = n;
    } else if (n != block_n) {
      throw std::runtime_error("golden line " + std::to_string(line_no) + ": block mixes alphabet sizes");
    }
    if (!block.insert(to_string(s)).second) throw std::runtime_error("golden line " + std::to_string(line_no) + ": duplicate entry");
  }
  flush();
  return blocks;
}

inline GoldenBlocks read_golden_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open golden file " + path);
  return read_golden(in);
}

}  // namespace fwseq
