// Copyright 2026 The renner-hecke Authors
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
//
// The `renner` command line front end, as a library call so tests can drive it.

#ifndef RENNER_CLI_HPP_
#define RENNER_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace renner::cli {

  enum ExitCode : int { kOk = 0, kFailure = 1, kUsage = 2 };

  //! argv[0] is the program name.  Returns the process exit status.
  int run(int argc, char const* const* argv, std::ostream& out, std::ostream& err);

  //! Convenience overload; `args` excludes the program name.
  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace renner::cli

#endif  // RENNER_CLI_HPP_
