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
#include <vector>

#include "hitlab/graph.hpp"

namespace hitlab {

inline constexpr std::size_t kDefaultEnumerationCap = 48;

struct MisResult {
  std::size_t size = 0;
  VertexSet witness;
};

// Every maximum independent set of a host graph, sorted by LexLess.
struct MisFamily {
  std::size_t alpha = 0;
  std::vector<VertexSet> sets;
  std::size_t host_n = 0;
};

// Exact independence number with one witness. Branch and bound: branches on
// the vertex of largest degree among the remaining candidates (smallest id
// on ties), include-branch first, and prunes with a greedy clique cover.
MisResult AlphaWithWitness(const Graph& g);

// Same search confined to the subgraph induced by `candidates`.
MisResult AlphaWithin(const Graph& g, const VertexSet& candidates);

// All maximum independent sets. Refuses (kCapExceeded) when n > cap.
MisFamily EnumerateMis(const Graph& g, std::size_t cap = kDefaultEnumerationCap);

// Intersection of all maximum independent sets.
VertexSet Kernel(const Graph& g, std::size_t cap = kDefaultEnumerationCap);

// Upper bound on the independence number of g[candidates]: the number of
// cliques in a greedy clique cover taken in id order.
std::size_t CliqueCoverBound(const Graph& g, const VertexSet& candidates);

}  // namespace hitlab
