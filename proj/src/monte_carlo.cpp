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

#include "hitlab/monte_carlo.hpp"

#include <cmath>
#include <string>

#include "hitlab/hitting.hpp"
#include "hitlab/random.hpp"

namespace hitlab {

MonteCarloE MonteCarloEstimateE(const Graph& g, const VertexSet& I,
                                const ParamSchedule& sched, std::size_t trials,
                                std::uint64_t seed, std::size_t workers) {
  ValidateSchedule(sched);
  if (!g.is_independent(I)) {
    throw Error(ErrorKind::kPrecondition, "I is not an independent set");
  }
  const BinSelection selection = BinAndSelect(g, I, sched);
  const std::uint64_t k = sched.SampleSize(selection.index);
  if (k > I.size()) {
    throw Error(ErrorKind::kInfeasible, "sample size k = " + std::to_string(k) +
                                            " exceeds |I| = " + std::to_string(I.size()));
  }
  const VertexSet base = I | selection.members;

  MonteCarloE out;
  out.bin_index = selection.index;
  out.samples.assign(trials, 0);
  ParallelFor(
      trials,
      [&](std::size_t trial) {
        const VertexSet I_j = SampleIj(I, k, DeriveSeed(seed, trial));
        const VertexSet K = BuildK(g, I_j, sched.s, sched.t);
        out.samples[trial] = g.edges_between(I, (base | K).complement());
      },
      workers);

  if (trials == 0) return out;
  // Reduction in trial order keeps the floating-point result schedule-free.
  double sum = 0.0;
  for (std::size_t e : out.samples) sum += static_cast<double>(e);
  out.mean = sum / static_cast<double>(trials);
  if (trials > 1) {
    double sq = 0.0;
    for (std::size_t e : out.samples) {
      const double dev = static_cast<double>(e) - out.mean;
      sq += dev * dev;
    }
    out.std_error = std::sqrt(sq / static_cast<double>(trials - 1) /
                              static_cast<double>(trials));
  }
  return out;
}

FrequencyEstimate EmpiricalLowIntersection(std::size_t i_size, std::size_t d,
                                           std::uint64_t k, std::size_t s,
                                           std::size_t draws, std::uint64_t seed) {
  if (d > i_size || k > i_size) {
    throw Error(ErrorKind::kPrecondition, "need d <= |I| and k <= |I|");
  }
  const VertexSet ground = VertexSet::Full(i_size);
  VertexSet marked(i_size);
  for (Vertex v = 0; v < d; ++v) marked.insert(v);
  FrequencyEstimate out;
  out.draws = draws;
  for (std::size_t i = 0; i < draws; ++i) {
    const VertexSet pick = SampleIj(ground, k, DeriveSeed(seed, i));
    if (pick.intersection_size(marked) + 1 <= s) ++out.hits;
  }
  out.rate = draws == 0 ? 0.0 : static_cast<double>(out.hits) / static_cast<double>(draws);
  return out;
}

}  // namespace hitlab
