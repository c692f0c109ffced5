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
#include <optional>
#include <vector>

namespace hitlab {

// Degree window [theta_lo, theta_hi) on |N_I(v)|, plus the sample size used
// when the window is selected. Log-space copies are authoritative: the
// linear thresholds of the asymptotic schedule under- and overflow.
struct DegreeBin {
  double theta_lo = 0.0;
  double theta_hi = 0.0;
  double log_theta_lo = 0.0;
  double log_theta_hi = 0.0;
  // Natural log of the sample size k_j.
  double log_k = 0.0;
  // floor(k_j) when it fits in 62 bits, otherwise 0.
  std::uint64_t k = 0;
  // Logs of the threshold/sample exponents for exponent-generated bins; they
  // stay finite when the thresholds themselves do not.
  std::optional<double> log_exponent_lo;
  std::optional<double> log_exponent_hi;

  bool Contains(std::size_t degree) const;
};

// Tunable constants of the construction. Bin j (1-based) sits at index j-1;
// bins are listed from the highest degree window down.
struct ParamSchedule {
  std::size_t s = 1;
  std::size_t t = 1;
  double delta = 0.5;
  // alpha(G)/n; 0 until a graph fixes it.
  double c = 0.0;
  std::vector<DegreeBin> bins;
  // Sample size for user schedules; exponent schedules carry k per bin.
  std::uint64_t k = 0;
  bool paper_mode = false;
  bool feasible = true;
  // Base b of the exponent family (10s for the asymptotic schedule).
  double exponent_base = 0.0;

  std::uint64_t SampleSize(std::size_t bin_index) const;
};

struct ThresholdPair {
  double lo;
  double hi;
};

// Schedule with explicit absolute thresholds and a single sample size.
// Throws kPrecondition unless 1 <= s <= t, k >= s, delta in (0,1), and the
// bins are nonempty, well-formed, disjoint, and ordered high to low.
ParamSchedule UserSchedule(std::size_t s, std::size_t t, double delta,
                           std::uint64_t k, const std::vector<ThresholdPair>& bins);

// `count` half-open windows splitting [lo, hi) geometrically, highest first.
// Requires 0 < lo < hi.
std::vector<ThresholdPair> GeometricBins(double lo, double hi, std::size_t count);

// Exponent-family schedule over ceil(2/delta) bins with base b:
//   theta_lo_j = n (ln n)^{-b^{2j+1}}, theta_hi_j = n (ln n)^{-b^{2j-1}},
//   k_j = (ln n)^{b^{2j}},
// everything evaluated from log_n = ln n. Requires ln n > 1.
ParamSchedule ExponentScheduleFromLogN(double log_n, std::size_t s, std::size_t t,
                                       double delta, double base);
ParamSchedule ExponentSchedule(std::size_t n, std::size_t s, std::size_t t,
                               double delta, double base);

// The asymptotic schedule: base 10s. Requires n >= 3.
ParamSchedule PaperSchedule(std::size_t n, std::size_t s, std::size_t t, double delta);
ParamSchedule PaperScheduleFromLogN(double log_n, std::size_t s, std::size_t t,
                                    double delta);

// Throws kPrecondition describing the first broken schedule invariant.
void ValidateSchedule(const ParamSchedule& sched);

// C(n, k), or nullopt on 64-bit overflow.
std::optional<std::uint64_t> BinomialExact(std::uint64_t n, std::uint64_t k);

// (t-1) C(k, s) + 1, or nullopt on overflow.
std::optional<std::uint64_t> HSize(std::uint64_t k, std::size_t s, std::size_t t);

// delta c n^2 / (2 (t-1) C(k,s) + 2) - c n. Negative means the point cannot
// certify |T| < delta n. Requires positive arguments and c in (0, 1/2].
double Budget(double n, double c, double delta, double k, std::size_t s,
              std::size_t t);

}  // namespace hitlab
