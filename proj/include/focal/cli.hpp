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
#ifndef FOCAL_CLI_HPP_
#define FOCAL_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace focal::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFailedVerdict = 1;
inline constexpr int kExitUsage = 2;

// Runs one subcommand (cameras, focals, complex, matroid, verify, basecase).
// args excludes the program name. Output goes to out unless --out names a
// file; diagnostics go to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace focal::cli

#endif  // FOCAL_CLI_HPP_
