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
#include <optional>
#include <string>
#include <vector>

#include "hitlab/graph.hpp"

namespace hitlab {

// Large cliques in dense induced-C4-free graphs: a codegree scan over
// missing edges, then a derandomised dependent-random-choice step inside a
// single neighbourhood.

enum class BetaRule {
  kQuadratic,  // beta = alpha^2 / 128
  kHolmsen,    // beta = (1 - sqrt(1 - alpha))^2, comparison only
};

double DrcBeta(double alpha_density, BetaRule rule);

struct CodegreeHit {
  Edge missing_edge;
  VertexSet common;
};

// First missing edge (lexicographic) whose common neighbourhood has at least
// beta n vertices. That neighbourhood must be a clique; otherwise a
// FreenessViolation carrying the induced C4 (as K_{2,2}) is thrown.
std::optional<CodegreeHit> CodegreeScan(const Graph& g, double beta);

// Greedy maximal matching of non-adjacent pairs inside U, scanning pairs in
// lexicographic order.
std::vector<Edge> MaximalMissingMatching(const Graph& g, const VertexSet& U);

// Non-adjacent pairs inside U.
std::size_t MissingEdgesWithin(const Graph& g, const VertexSet& U);

// Z(x) = |U| - alpha Y / (beta (1 - alpha) n) - alpha (n - 1) / 2 with
// U = N(x) and Y the missing edges inside U.
double DrcScore(const Graph& g, Vertex x, double alpha_density, double beta);

enum class DrcBranch { kCodegree, kNeighborhood };

struct DrcTrace {
  DrcBranch branch = DrcBranch::kNeighborhood;
  double alpha_density = 0.0;
  double beta = 0.0;
  // Neighbourhood branch.
  std::optional<Vertex> x;
  VertexSet U;
  std::size_t Y = 0;
  double Z = 0.0;
  std::vector<Edge> matching;
  // Codegree branch.
  std::optional<Edge> missing_edge;
  VertexSet clique;
};

// Requires e(g) >= alpha_density C(n,2) with alpha_density in (0, 1].
// Picks x maximising Z (smallest id on ties) and returns
// clique = {x} u (U minus matched vertices), of size |U| - 2m + 1.
DrcTrace DrcClique(const Graph& g, double alpha_density,
                   BetaRule rule = BetaRule::kQuadratic);

// Missing edges inside U number at least m + C(m, 2) for a matching of size
// m; holds in induced-C4-free graphs.
bool MatchingPairAudit(const Graph& g, const DrcTrace& trace);

std::string FormatDrcTrace(const DrcTrace& trace);

}  // namespace hitlab
