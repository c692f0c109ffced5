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

#include "hitlab/graph.hpp"

namespace hitlab {

// Erdos-Renyi G(n, p): every pair independently with probability p.
Graph GenGnp(std::size_t n, double p, std::uint64_t seed);

// Disjoint union of cliques, numbered consecutively clique by clique.
Graph GenCluster(std::span<const std::size_t> sizes);

// Random edge-addition process over a shuffled pair order that skips any
// pair closing a 4-cycle subgraph. Stops at target_m edges or when every
// pair has been offered; the result may have fewer than target_m edges.
Graph GenC4FreeProcess(std::size_t n, std::size_t target_m, std::uint64_t seed);

// Random chordal graph: each new vertex attaches to a random subset of a
// random clique of the graph built so far. Chordal graphs are induced
// C4-free but may contain 4-cycle subgraphs. `density` in [0, 1] scales the
// attachment subset.
Graph GenChordal(std::size_t n, double density, std::uint64_t seed);

Graph GenPath(std::size_t n);
Graph GenCycle(std::size_t n);
Graph GenComplete(std::size_t n);
Graph GenEmpty(std::size_t n);
// Star K_{1,leaves} with centre 0.
Graph GenStar(std::size_t leaves);
Graph GenPetersen();

}  // namespace hitlab
