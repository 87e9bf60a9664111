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

#include "galcheck/error.hpp"

#include <utility>

namespace galcheck {
namespace {

std::string describe_parse_error(std::size_t position,
                                 const std::vector<std::string>& expected,
                                 const std::string& found) {
  std::string msg = "syntax error at offset " + std::to_string(position);
  if (!expected.empty()) {
    msg += ": expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i > 0) msg += i + 1 == expected.size() ? " or " : ", ";
      msg += expected[i];
    }
  }
  msg += found.empty() ? ", found end of input" : ", found '" + found + "'";
  return msg;
}

std::string describe_violations(const std::string& what,
                                const std::vector<std::string>& violations) {
  std::string msg = what;
  for (const auto& v : violations) msg += "\n  " + v;
  return msg;
}

}  // namespace

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse: return "parse";
    case ErrorCode::kSort: return "sort";
    case ErrorCode::kUnknownIdentifier: return "unknown-identifier";
    case ErrorCode::kValidation: return "validation";
    case ErrorCode::kSchema: return "schema";
    case ErrorCode::kBinding: return "binding";
    case ErrorCode::kInterpretation: return "interpretation";
    case ErrorCode::kInvalidArgument: return "invalid-argument";
    case ErrorCode::kLimit: return "limit";
    case ErrorCode::kIo: return "io";
  }
  return "unknown";
}

ParseError::ParseError(std::size_t position, std::vector<std::string> expected,
                       const std::string& found)
    : Error(ErrorCode::kParse, describe_parse_error(position, expected, found)),
      position_(position),
      expected_(std::move(expected)) {}

ValidationError::ValidationError(const std::string& what,
                                 std::vector<std::string> violations)
    : Error(ErrorCode::kValidation, describe_violations(what, violations)),
      violations_(std::move(violations)) {}

}  // namespace galcheck
