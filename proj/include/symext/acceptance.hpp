// Copyright 2026 The symext Authors.
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

// The twelve end-to-end acceptance checks, shared by the acceptance test
// binary and the `selftest` command. Tolerances are fixed here.

#ifndef SYMEXT_ACCEPTANCE_HPP
#define SYMEXT_ACCEPTANCE_HPP

#include <functional>
#include <string>
#include <vector>

namespace symext::acceptance {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

inline constexpr int kCriterionCount = 12;

CriterionResult run_criterion(int id);

/// Runs the listed criteria (all when empty), reporting each result as it
/// completes.
std::vector<CriterionResult> run(const std::vector<int>& ids,
                                 const std::function<void(const CriterionResult&)>& on_result = {});

std::string format_line(const CriterionResult& r);

}  // namespace symext::acceptance

#endif  // SYMEXT_ACCEPTANCE_HPP
