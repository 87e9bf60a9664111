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

#ifndef GALCHECK_SRC_LOGIC_INTERNAL_HPP_
#define GALCHECK_SRC_LOGIC_INTERNAL_HPP_

#include <memory>
#include <string_view>
#include <vector>

#include "galcheck/logic.hpp"

namespace galcheck {

bool is_identifier(std::string_view name);
bool is_reserved_word(std::string_view name);

struct TermAccess {
  static Term wrap(std::shared_ptr<const TermNode> node);
};

struct FormulaAccess {
  static Formula make(FormulaNode node);
};

// Same node kind and symbol as the template, new children.
Term rebuild_application(const Term& t, std::vector<Term> args);
Formula rebuild_formula(const Formula& f, std::vector<Term> terms,
                        std::vector<Formula> operands);

}  // namespace galcheck

#endif  // GALCHECK_SRC_LOGIC_INTERNAL_HPP_
