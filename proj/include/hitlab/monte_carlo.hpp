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
#include <vector>

#include "hitlab/graph.hpp"
#include "hitlab/parallel.hpp"
#include "hitlab/schedule.hpp"

namespace hitlab {

struct MonteCarloE {
  double mean = 0.0;
  double std_error = 0.0;
  // e per trial, in trial order.
  std::vector<std::size_t> samples;
  std::size_t bin_index = 0;
};

// Repeats the sampling step of the construction: the bin is fixed by
// (g, I, sched); each trial draws I_j with DeriveSeed(seed, trial), builds
// K, and records e = |E(I, V \ (I u K u S_j))|.
MonteCarloE MonteCarloEstimateE(const Graph& g, const VertexSet& I,
                                const ParamSchedule& sched, std::size_t trials,
                                std::uint64_t seed, std::size_t workers = WorkerCount());

struct FrequencyEstimate {
  std::size_t hits = 0;
  std::size_t draws = 0;
  double rate = 0.0;
};

// Frequency of |I_j ∩ D| <= s-1 over `draws` uniform k-subsets of a ground
// set of size i_size, with D its first d elements.
FrequencyEstimate EmpiricalLowIntersection(std::size_t i_size, std::size_t d,
                                           std::uint64_t k, std::size_t s,
                                           std::size_t draws, std::uint64_t seed);

}  // namespace hitlab
