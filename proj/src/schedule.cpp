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

#include "hitlab/schedule.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "hitlab/error.hpp"

namespace hitlab {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

[[noreturn]] void Reject(const std::string& msg) {
  throw Error(ErrorKind::kPrecondition, msg);
}

double SafeLog(double x) { return x > 0.0 ? std::log(x) : kNegInf; }

void CheckPattern(std::size_t s, std::size_t t, double delta) {
  if (s < 1 || s > t) Reject("schedule needs 1 <= s <= t");
  if (!(delta > 0.0 && delta < 1.0)) Reject("delta must lie in (0, 1)");
}

}  // namespace

bool DegreeBin::Contains(std::size_t degree) const {
  if (log_exponent_lo) {
    if (degree == 0) return false;
    const double ld = std::log(static_cast<double>(degree));
    return ld >= log_theta_lo && ld < log_theta_hi;
  }
  const auto d = static_cast<double>(degree);
  return d >= theta_lo && d < theta_hi;
}

std::uint64_t ParamSchedule::SampleSize(std::size_t bin_index) const {
  if (bin_index < 1 || bin_index > bins.size()) {
    Reject("bin index " + std::to_string(bin_index) + " out of range");
  }
  return exponent_base > 0.0 ? bins[bin_index - 1].k : k;
}

ParamSchedule UserSchedule(std::size_t s, std::size_t t, double delta,
                           std::uint64_t k, const std::vector<ThresholdPair>& bins) {
  CheckPattern(s, t, delta);
  ParamSchedule sched;
  sched.s = s;
  sched.t = t;
  sched.delta = delta;
  sched.k = k;
  for (const auto& [lo, hi] : bins) {
    DegreeBin bin;
    bin.theta_lo = lo;
    bin.theta_hi = hi;
    bin.log_theta_lo = SafeLog(lo);
    bin.log_theta_hi = SafeLog(hi);
    bin.log_k = SafeLog(static_cast<double>(k));
    bin.k = k;
    sched.bins.push_back(bin);
  }
  ValidateSchedule(sched);
  return sched;
}

std::vector<ThresholdPair> GeometricBins(double lo, double hi, std::size_t count) {
  if (!(lo > 0.0 && lo < hi) || count == 0) {
    Reject("geometric bins need 0 < lo < hi and a positive count");
  }
  std::vector<double> cuts(count + 1);
  const double ratio = std::log(hi / lo) / static_cast<double>(count);
  for (std::size_t i = 0; i <= count; ++i) {
    cuts[i] = lo * std::exp(ratio * static_cast<double>(i));
  }
  cuts.front() = lo;
  cuts.back() = hi;
  std::vector<ThresholdPair> out;
  for (std::size_t i = count; i > 0; --i) out.push_back({cuts[i - 1], cuts[i]});
  return out;
}

ParamSchedule ExponentScheduleFromLogN(double log_n, std::size_t s, std::size_t t,
                                       double delta, double base) {
  CheckPattern(s, t, delta);
  if (!(log_n > 1.0)) Reject("exponent schedule needs ln n > 1 (n >= 3)");
  if (!(base > 1.0)) Reject("exponent base must exceed 1");
  const double log_log_n = std::log(log_n);
  const double log_base = std::log(base);
  const auto num_bins = static_cast<std::size_t>(std::ceil(2.0 / delta));
  // Largest k we store exactly; beyond this k_j is only kept in log form.
  const double log_k_limit = 62.0 * std::log(2.0);

  ParamSchedule sched;
  sched.s = s;
  sched.t = t;
  sched.delta = delta;
  sched.exponent_base = base;
  sched.feasible = true;
  for (std::size_t j = 1; j <= num_bins; ++j) {
    DegreeBin bin;
    const double le_lo = static_cast<double>(2 * j + 1) * log_base;
    const double le_hi = static_cast<double>(2 * j - 1) * log_base;
    const double le_k = static_cast<double>(2 * j) * log_base;
    bin.log_exponent_lo = le_lo;
    bin.log_exponent_hi = le_hi;
    // exponent * ln ln n, formed as exp(log exponent + log ln ln n) so the
    // product stays meaningful when ln ln n < 1.
    bin.log_theta_lo = log_n - std::exp(le_lo + std::log(log_log_n));
    bin.log_theta_hi = log_n - std::exp(le_hi + std::log(log_log_n));
    bin.log_k = std::exp(le_k + std::log(log_log_n));
    bin.theta_lo = std::exp(bin.log_theta_lo);
    bin.theta_hi = std::exp(bin.log_theta_hi);
    bin.k = bin.log_k < log_k_limit
                ? static_cast<std::uint64_t>(std::floor(std::exp(bin.log_k)))
                : 0;

    bool ok = bin.k >= s && bin.log_theta_lo >= 0.0 && bin.log_theta_hi <= log_n;
    if (ok) {
      const auto h = HSize(bin.k, s, t);
      ok = h.has_value() && std::log(static_cast<double>(*h)) <= log_n;
    }
    sched.feasible = sched.feasible && ok;
    sched.bins.push_back(bin);
  }
  ValidateSchedule(sched);
  return sched;
}

ParamSchedule ExponentSchedule(std::size_t n, std::size_t s, std::size_t t,
                               double delta, double base) {
  if (n < 3) Reject("exponent schedule needs n >= 3");
  return ExponentScheduleFromLogN(std::log(static_cast<double>(n)), s, t, delta, base);
}

ParamSchedule PaperSchedule(std::size_t n, std::size_t s, std::size_t t, double delta) {
  ParamSchedule sched = ExponentSchedule(n, s, t, delta, 10.0 * static_cast<double>(s));
  sched.paper_mode = true;
  return sched;
}

ParamSchedule PaperScheduleFromLogN(double log_n, std::size_t s, std::size_t t,
                                    double delta) {
  ParamSchedule sched =
      ExponentScheduleFromLogN(log_n, s, t, delta, 10.0 * static_cast<double>(s));
  sched.paper_mode = true;
  return sched;
}

void ValidateSchedule(const ParamSchedule& sched) {
  CheckPattern(sched.s, sched.t, sched.delta);
  if (sched.bins.empty()) Reject("schedule has no degree bins");
  const bool exponent = sched.exponent_base > 0.0;
  if (!exponent && sched.k < sched.s) {
    Reject("sample size k = " + std::to_string(sched.k) + " is below s = " +
           std::to_string(sched.s));
  }
  for (std::size_t i = 0; i < sched.bins.size(); ++i) {
    const DegreeBin& bin = sched.bins[i];
    const std::string where = "bin " + std::to_string(i + 1);
    if (exponent) {
      if (!bin.log_exponent_lo || !bin.log_exponent_hi ||
          !(*bin.log_exponent_lo > *bin.log_exponent_hi)) {
        Reject(where + ": exponent window is empty");
      }
      if (i > 0 && *bin.log_exponent_hi < *sched.bins[i - 1].log_exponent_lo) {
        Reject(where + ": overlaps the previous bin");
      }
    } else {
      if (!std::isfinite(bin.theta_lo) || !std::isfinite(bin.theta_hi) ||
          bin.theta_lo < 0.0 || !(bin.theta_lo < bin.theta_hi)) {
        Reject(where + ": needs finite 0 <= lo < hi");
      }
      if (i > 0 && bin.theta_hi > sched.bins[i - 1].theta_lo) {
        Reject(where + ": must lie below the previous bin (hi <= previous lo)");
      }
    }
  }
}

std::optional<std::uint64_t> BinomialExact(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 acc = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    acc = acc * (n - k + i) / i;
    if (acc > std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
  }
  return static_cast<std::uint64_t>(acc);
}

std::optional<std::uint64_t> HSize(std::uint64_t k, std::size_t s, std::size_t t) {
  const auto binom = BinomialExact(k, s);
  if (!binom) return std::nullopt;
  const unsigned __int128 h = static_cast<unsigned __int128>(t - 1) * *binom + 1;
  if (h > std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
  return static_cast<std::uint64_t>(h);
}

double Budget(double n, double c, double delta, double k, std::size_t s,
              std::size_t t) {
  if (!(n > 0.0 && delta > 0.0 && k > 0.0 && s >= 1 && t >= s)) {
    Reject("budget needs positive n, delta, k and 1 <= s <= t");
  }
  if (!(c > 0.0 && c <= 0.5)) Reject("budget needs c in (0, 1/2]");
  double binom = 1.0;
  for (std::size_t i = 0; i < s; ++i) {
    binom *= (k - static_cast<double>(i)) / static_cast<double>(i + 1);
  }
  if (binom < 0.0) binom = 0.0;
  const double denom = 2.0 * static_cast<double>(t - 1) * binom + 2.0;
  return delta * c * n * n / denom - c * n;
}

}  // namespace hitlab
