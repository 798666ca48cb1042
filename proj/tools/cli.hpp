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

#ifndef TIGER2_TOOLS_CLI_HPP_
#define TIGER2_TOOLS_CLI_HPP_

#include <ostream>

namespace tiger2::cli {

// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kErrors = 1;
inline constexpr int kFatal = 2;

// Runs the `tiger2` command line. Payload goes to `out`, diagnostics and
// reports to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tiger2::cli

#endif  // TIGER2_TOOLS_CLI_HPP_
