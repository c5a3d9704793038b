// Copyright 2026 The hopfcoords Authors.
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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hopf {

/// Deliberate defects for checking that the suite can fail.
enum class Fault {
  None,
  FlipLinkingSign,  // negates the closed-form linking number
};

struct VerifyConfig {
  std::uint64_t seed = 1;
  /// Overrides the sample count of every randomized suite.
  std::optional<int> samples;
  Fault fault = Fault::None;
};

struct CriterionResult {
  int number = 0;
  std::string name;
  bool passed = false;
  std::string detail;

  /// "PASS [n] name: detail" or "FAIL [n] ...".
  std::string line() const;
};

CriterionResult check_motion_group(const VerifyConfig& cfg);
CriterionResult check_quotient_coordinate(const VerifyConfig& cfg);
CriterionResult check_retraction_contract(const VerifyConfig& cfg);
CriterionResult check_linking_agreement(const VerifyConfig& cfg);
CriterionResult check_scheduling(const VerifyConfig& cfg);
CriterionResult check_pattern_extraction(const VerifyConfig& cfg);
CriterionResult check_xi_suite(const VerifyConfig& cfg);
CriterionResult check_double_cover(const VerifyConfig& cfg);

/// All eight suites in order.
std::vector<CriterionResult> run_acceptance(const VerifyConfig& cfg);

}  // namespace hopf
