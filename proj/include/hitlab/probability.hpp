// Copyright 2026 The hitlab Authors
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

#include <cstddef>
#include <cstdint>
#include <span>

#include "hitlab/schedule.hpp"

namespace hitlab {

// ln C(n, k) for real n >= k >= 0; -inf when k > n or k < 0.
double LogBinomial(double n, double k);

// ln(sum exp(x_i)); -inf for an empty span or all -inf terms.
double LogSumExp(std::span<const double> terms);

struct LowIntersection {
  // P[|I_j ∩ N_I(v)| <= s-1] when I_j is a uniform k-subset of I
  // (hypergeometric tail).
  double exact = 0.0;
  // sum_{x<s} C(k,x) (1 - d/|I|)^{k-x} (d/|I|)^x, the independent-draw
  // estimate.
  double paper_form = 0.0;
};

// Requires d <= i_size and k <= i_size.
LowIntersection ProbLowIntersection(std::size_t i_size, std::size_t d, std::uint64_t k,
                                    std::size_t s);

struct EBound {
  // ln(theta_lo (1 - c) n): edges into vertices below the bin.
  double log_small_part = 0.0;
  // ln(c (1 - c) n^2 sum_{x<s} k^x (1 - theta_hi/(c n))^{k-x}): edges into
  // vertices above the bin.
  double log_large_part = 0.0;
  // False when theta_hi >= c n, where the large-part chain does not apply;
  // log_large_part is then NaN.
  bool large_part_valid = true;
};

// Both bounds for bin `bin_index` (1-based) of `sched`, in log space.
// Requires n > 0 and c in (0, 1).
EBound AnalyticEBound(double n, double c, const ParamSchedule& sched,
                      std::size_t bin_index);

}  // namespace hitlab
