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

namespace hopf {

/// SplitMix64 (Steele, Lea, Flood 2014). Distributions are computed here
/// rather than with <random> so that streams are identical across
/// standard libraries.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  /// Uniform in [0, 1) with 53 random bits.
  double uniform();
  double uniform(double lo, double hi);
  /// Standard normal by Box-Muller (one draw per call).
  double normal();
  /// Uniform integer in [0, n).
  int below(int n);
  /// Independent child stream; advances this one by one step.
  SplitMix64 split();

 private:
  std::uint64_t state_;
};

}  // namespace hopf
