// Copyright 2026 The galcheck Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GALCHECK_TESTS_SUPPORT_PROCESS_HPP_
#define GALCHECK_TESTS_SUPPORT_PROCESS_HPP_

#include <string>

namespace galcheck::testing {

struct CommandResult {
  int exit_code = -1;
  std::string out;
  double millis = 0;
};

// Runs `command` through the shell. Stderr is discarded unless the command
// redirects it.
CommandResult run_command(const std::string& command);

std::string shell_quote(const std::string& s);

// A fresh path under the system temp directory.
std::string temp_path(const std::string& name);

}  // namespace galcheck::testing

#endif  // GALCHECK_TESTS_SUPPORT_PROCESS_HPP_
