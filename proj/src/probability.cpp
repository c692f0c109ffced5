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

#include "hitlab/probability.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "hitlab/error.hpp"

namespace hitlab {

namespace {
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
}

double LogBinomial(double n, double k) {
  if (k < 0.0 || k > n) return kNegInf;
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

double LogSumExp(std::span<const double> terms) {
  double peak = kNegInf;
  for (double x : terms) peak = std::max(peak, x);
  if (peak == kNegInf) return kNegInf;
  if (std::isinf(peak)) return peak;
  double acc = 0.0;
  for (double x : terms) acc += std::exp(x - peak);
  return peak + std::log(acc);
}

LowIntersection ProbLowIntersection(std::size_t i_size, std::size_t d, std::uint64_t k,
                                    std::size_t s) {
  if (d > i_size || k > i_size) {
    throw Error(ErrorKind::kPrecondition, "need d <= |I| and k <= |I|");
  }
  const auto N = static_cast<double>(i_size);
  const auto D = static_cast<double>(d);
  const auto K = static_cast<double>(k);
  LowIntersection out;
  if (s == 0) return out;

  std::vector<double> exact_terms;
  const double log_total = LogBinomial(N, K);
  for (std::size_t x = 0; x < s; ++x) {
    const auto X = static_cast<double>(x);
    exact_terms.push_back(LogBinomial(D, X) + LogBinomial(N - D, K - X) - log_total);
  }
  out.exact = std::min(1.0, std::exp(LogSumExp(exact_terms)));

  const double q = i_size == 0 ? 0.0 : D / N;
  for (std::size_t x = 0; x < s; ++x) {
    if (x > k) break;
    const auto X = static_cast<double>(x);
    out.paper_form += std::exp(LogBinomial(K, X)) * std::pow(1.0 - q, K - X) * std::pow(q, X);
  }
  return out;
}

EBound AnalyticEBound(double n, double c, const ParamSchedule& sched,
                      std::size_t bin_index) {
  if (!(n > 0.0) || !(c > 0.0 && c < 1.0)) {
    throw Error(ErrorKind::kPrecondition, "AnalyticEBound needs n > 0 and c in (0, 1)");
  }
  if (bin_index < 1 || bin_index > sched.bins.size()) {
    throw Error(ErrorKind::kPrecondition, "bin index " + std::to_string(bin_index) +
                                              " out of range");
  }
  const DegreeBin& bin = sched.bins[bin_index - 1];
  const double log_n = std::log(n);
  EBound out;
  out.log_small_part = bin.log_theta_lo + std::log1p(-c) + log_n;

  // q = theta_hi / (c n) is the per-draw hit probability floor for vertices
  // at or above the bin.
  const double log_q = bin.log_theta_hi - std::log(c) - log_n;
  if (log_q >= 0.0) {
    out.large_part_valid = false;
    out.log_large_part = std::numeric_limits<double>::quiet_NaN();
    return out;
  }
  const double log_1mq = std::log1p(-std::exp(log_q));
  const double k = std::exp(bin.log_k);
  std::vector<double> terms;
  for (std::size_t x = 0; x < sched.s; ++x) {
    const auto X = static_cast<double>(x);
    const double tail = log_1mq == 0.0 ? 0.0 : (k - X) * log_1mq;
    terms.push_back(X * bin.log_k + tail);
  }
  out.log_large_part = std::log(c) + std::log1p(-c) + 2.0 * log_n + LogSumExp(terms);
  return out;
}

}  // namespace hitlab
