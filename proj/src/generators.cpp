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

#include "hitlab/generators.hpp"

#include <string>
#include <vector>

#include "hitlab/random.hpp"

namespace hitlab {

Graph GenGnp(std::size_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw Error(ErrorKind::kPrecondition, "edge probability outside [0, 1]");
  }
  Rng rng(seed);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (rng.unit() < p) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

Graph GenCluster(std::span<const std::size_t> sizes) {
  if (sizes.empty()) {
    throw Error(ErrorKind::kPrecondition, "cluster graph needs at least one clique");
  }
  std::size_t n = 0;
  std::vector<Edge> edges;
  for (std::size_t size : sizes) {
    if (size == 0) {
      throw Error(ErrorKind::kPrecondition, "clique sizes must be positive");
    }
    for (std::size_t i = 0; i < size; ++i) {
      for (std::size_t j = i + 1; j < size; ++j) {
        edges.emplace_back(static_cast<Vertex>(n + i), static_cast<Vertex>(n + j));
      }
    }
    n += size;
  }
  return Graph(n, edges);
}

Graph GenC4FreeProcess(std::size_t n, std::size_t target_m, std::uint64_t seed) {
  if (target_m > n * (n - (n > 0)) / 2) {
    throw Error(ErrorKind::kPrecondition, "target edge count exceeds C(n,2)");
  }
  std::vector<Edge> pairs;
  pairs.reserve(n * (n - (n > 0)) / 2);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }
  Rng rng(seed);
  rng.shuffle(pairs);

  std::vector<VertexSet> rows(n, VertexSet(n));
  std::vector<Edge> accepted;
  for (const auto& [u, v] : pairs) {
    if (accepted.size() >= target_m) break;
    // u-v closes a 4-cycle u-a-b-v iff some neighbour a of u is adjacent to
    // some neighbour b of v.
    bool closes = false;
    rows[u].for_each([&](Vertex a) {
      closes = closes || rows[a].intersects(rows[v]);
    });
    if (closes) continue;
    rows[u].insert(v);
    rows[v].insert(u);
    accepted.emplace_back(u, v);
  }
  return Graph(n, accepted);
}

Graph GenChordal(std::size_t n, double density, std::uint64_t seed) {
  if (!(density >= 0.0 && density <= 1.0)) {
    throw Error(ErrorKind::kPrecondition, "chordal density outside [0, 1]");
  }
  Rng rng(seed);
  std::vector<VertexSet> rows(n, VertexSet(n));
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) {
    const auto anchor = static_cast<Vertex>(rng.below(v));
    std::vector<Vertex> order = rows[anchor].members();
    rng.shuffle(order);
    std::vector<Vertex> clique{anchor};
    for (Vertex w : order) {
      bool fits = true;
      for (Vertex c : clique) fits = fits && rows[w].contains(c);
      if (fits) clique.push_back(w);
    }
    for (Vertex c : clique) {
      if (rng.unit() < density) {
        rows[c].insert(v);
        rows[v].insert(c);
        edges.emplace_back(c, v);
      }
    }
  }
  return Graph(n, edges);
}

Graph GenPath(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
  return Graph(n, edges);
}

Graph GenCycle(std::size_t n) {
  if (n < 3) throw Error(ErrorKind::kPrecondition, "cycle needs n >= 3");
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
  edges.emplace_back(0, static_cast<Vertex>(n - 1));
  return Graph(n, edges);
}

Graph GenComplete(std::size_t n) {
  const std::size_t sizes[] = {n};
  if (n == 0) return Graph();
  return GenCluster(sizes);
}

Graph GenEmpty(std::size_t n) { return Graph(n, {}); }

Graph GenStar(std::size_t leaves) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return Graph(leaves + 1, edges);
}

Graph GenPetersen() {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);
    edges.emplace_back(i, 5 + i);
  }
  return Graph(10, edges);
}

}  // namespace hitlab
