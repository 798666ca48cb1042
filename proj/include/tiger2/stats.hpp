// Copyright 2026 The tiger2 Authors.
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

#ifndef TIGER2_STATS_HPP_
#define TIGER2_STATS_HPP_

#include <cstddef>
#include <map>
#include <string>

#include "tiger2/model.hpp"

namespace tiger2 {

// Element counts keyed by elem_type; untyped elements are counted under
// kUntyped.
using TypeCounts = std::map<std::string, std::size_t>;

std::size_t total(const TypeCounts& counts);

struct CorpusStats {
  std::size_t segments = 0;
  std::size_t graphs = 0;
  TypeCounts terminals;
  TypeCounts nonterminals;
  TypeCounts edges;

  CorpusStats& operator+=(const CorpusStats& other);
  friend CorpusStats operator+(CorpusStats a, const CorpusStats& b) {
    return a += b;
  }
  bool operator==(const CorpusStats&) const = default;
};

CorpusStats stats(const Corpus& corpus);
CorpusStats stats(const Graph& graph);

}  // namespace tiger2

#endif  // TIGER2_STATS_HPP_
