// Copyright 2026 The Latroid Authors
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

// The ten acceptance criteria over a seeded corpus of codes and latroids.

#include <cstdint>
#include <string>
#include <vector>

namespace latroid {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

constexpr std::uint64_t kDefaultAcceptanceSeed = 20260101;
constexpr int kNumCriteria = 10;

// Runs criterion `id` (1..10); InputError for other ids. Exceptions inside a
// criterion are reported as a failure, not rethrown.
CriterionResult run_criterion(int id, std::uint64_t seed = kDefaultAcceptanceSeed);
std::vector<CriterionResult> run_acceptance(std::uint64_t seed = kDefaultAcceptanceSeed);

}  // namespace latroid
