// Copyright 2026 The ballid Authors
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

#ifndef BALLID_CLI_HPP_
#define BALLID_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace ballid {

// Process exit codes.
enum ExitCode : int {
  kExitOk = 0,
  kExitInvalidInput = 2,
  kExitNumerical = 3,
  kExitIo = 4,
};

// Subcommands: simulate | identify | sample | reward-eval | curriculum-replay.
// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace ballid

#endif  // BALLID_CLI_HPP_
