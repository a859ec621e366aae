// Copyright 2026 The csskit Authors.
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
#ifndef CSSKIT_TOOLS_CLI_HPP
#define CSSKIT_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace csskit::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 1,
  kInvalidCss = 2,
  kSeparableInput = 3,
  kViolation = 4,
};

/// Entry point of the `csskit` binary; argv[0] is the program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Same as run() with the arguments after the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace csskit::cli

#endif  // CSSKIT_TOOLS_CLI_HPP
