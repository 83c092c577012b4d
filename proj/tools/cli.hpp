// Copyright 2026 The Authors.
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

#ifndef MCONVEX_TOOLS_CLI_HPP_
#define MCONVEX_TOOLS_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace mconvex::cli {

// Exit codes: 0 success, 1 verdict false or fixture mismatch, 2 input error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFalse = 1;
inline constexpr int kExitInput = 2;

struct SubcommandInfo {
  std::string name;
  std::vector<std::string> operations;  // library operations reachable from it
};

const std::vector<SubcommandInfo>& dispatch_table();

// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mconvex::cli

#endif  // MCONVEX_TOOLS_CLI_HPP_
