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

#ifndef TIGER2_TESTS_SUPPORT_FIXTURES_HPP_
#define TIGER2_TESTS_SUPPORT_FIXTURES_HPP_

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "tiger2/model.hpp"
#include "tiger2/tiger2_xml.hpp"

#ifndef TIGER2_FIXTURE_DIR
#error "TIGER2_FIXTURE_DIR must be defined by the build"
#endif

namespace tiger2::testing {

inline std::string fixture_path(const std::string& name) {
  return std::string(TIGER2_FIXTURE_DIR) + "/" + name;
}

inline std::string read_fixture(const std::string& name) {
  std::ifstream in(fixture_path(name), std::ios::binary);
  if (!in) throw std::runtime_error("missing fixture " + name);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

inline ParseResult parse_fixture(const std::string& name) {
  return parse_tiger2(read_fixture(name));
}

inline Corpus wallpaper_corpus() { return parse_fixture("wallpaper.xml").corpus; }

inline const Graph& first_graph(const Corpus& corpus) {
  return corpus.segments.at(0).graphs.at(0);
}

inline std::string replace_once(std::string text, const std::string& from,
                                const std::string& to) {
  auto pos = text.find(from);
  if (pos == std::string::npos)
    throw std::runtime_error("fixture edit target not found: " + from);
  return text.replace(pos, from.size(), to);
}

}  // namespace tiger2::testing

#endif  // TIGER2_TESTS_SUPPORT_FIXTURES_HPP_
