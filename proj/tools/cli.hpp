// Copyright 2026 The Baskets Authors
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

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace baskets::cli {

// Process exit statuses.
enum ExitCode : int {
  kExitOk = 0,
  kExitMismatch = 1,  // oracle disagreement, or an unexpected internal failure
  kExitUsage = 2,
  kExitDomain = 3,
  kExitIo = 4,
  kExitCapacity = 5,
};

// Parses args (without the program name) and runs the subcommand.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace baskets::cli
