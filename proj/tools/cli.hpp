// Copyright 2026 The djnmr Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DJNMR_TOOLS_CLI_HPP
#define DJNMR_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace djnmr::cli {

/// Exit codes: 0 success, 2 validation/usage error (stderr line prefixed
/// "error:"), 1 internal error.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

struct CommandResult {
  int exit_code;
  std::string out;
  std::string err;
};

/// Convenience wrapper capturing both streams (used by the tests).
CommandResult run_capture(std::vector<std::string> args);

}  // namespace djnmr::cli

#endif  // DJNMR_TOOLS_CLI_HPP
