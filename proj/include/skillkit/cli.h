// Copyright 2026 The SkillKit Authors.
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

#ifndef SKILLKIT_CLI_H_
#define SKILLKIT_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace skillkit {

// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 1;  // bad flags, config, or missing input
inline constexpr int kExitData = 2;    // data errors under --strict, fatal data

// Runs the `skillkit` command line. `args[0]` is the program name. Reports go
// to `out` unless --report is given; diagnostics go to `err`.
int RunCli(const std::vector<std::string> &args, std::ostream &out,
           std::ostream &err);

}  // namespace skillkit

#endif  // SKILLKIT_CLI_H_
