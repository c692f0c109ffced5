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
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hitlab/error.hpp"
#include "hitlab/vertex_set.hpp"

namespace hitlab {

using Edge = std::pair<Vertex, Vertex>;

// Immutable simple undirected graph on dense ids 0..n-1. Each vertex owns a
// bit row of its neighbours.
class Graph {
 public:
  Graph() = default;

  // Builds from an edge list. Duplicate edges collapse; self-loops and
  // out-of-range ids throw.
  Graph(std::size_t n, std::span<const Edge> edges);

  // Builds from adjacency rows; the rows must already be symmetric and
  // irreflexive (checked).
  static Graph FromRows(std::vector<VertexSet> rows);

  std::size_t n() const { return rows_.size(); }
  std::size_t m() const { return m_; }

  const VertexSet& neighbors(Vertex v) const { return rows_[v]; }
  std::size_t degree(Vertex v) const { return rows_[v].size(); }
  bool adjacent(Vertex u, Vertex v) const { return rows_[u].contains(v); }

  // Edges as (u, v) with u < v, sorted.
  std::vector<Edge> edges() const;

  VertexSet all() const { return VertexSet::Full(n()); }
  VertexSet empty_set() const { return VertexSet(n()); }

  bool is_independent(const VertexSet& s) const;
  bool is_clique(const VertexSet& s) const;

  // Number of edges with one endpoint in a and the other in b. The sets
  // are expected to be disjoint.
  std::size_t edges_between(const VertexSet& a, const VertexSet& b) const;
  // Number of edges with both endpoints in s.
  std::size_t edges_within(const VertexSet& s) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.rows_ == b.rows_;
  }

 private:
  std::vector<VertexSet> rows_;
  std::size_t m_ = 0;
};

// Throws kPrecondition describing the first broken invariant (symmetry,
// irreflexivity, edge count).
void ValidateGraph(const Graph& g);

Graph Complement(const Graph& g);

// Subgraph induced by `keep`, relabelled to 0..|keep|-1 in increasing id
// order.
Graph InducedSubgraph(const Graph& g, const VertexSet& keep);

struct DegreeWitness {
  Vertex vertex;
  std::size_t degree;
};

// Minimum-degree vertex, smallest id on ties. Requires n >= 1.
DegreeWitness MinDegreeVertex(const Graph& g);

// Closed neighbourhood {v} u N(v).
VertexSet ClosedNeighborhood(const Graph& g, Vertex v);

// Common neighbourhood of every member of `s` (all vertices when s is empty).
VertexSet CommonNeighborhood(const Graph& g, const VertexSet& s);

// An induced copy of K_{s,t}: both sides independent, every cross pair
// adjacent.
struct InducedEmbedding {
  std::vector<Vertex> side_a;
  std::vector<Vertex> side_b;

  bool IsValidIn(const Graph& g) const;
  std::string ToString() const;

  friend bool operator==(const InducedEmbedding&,
                         const InducedEmbedding&) = default;
};

// Raised when an input that must be induced-K_{s,t}-free is not.
class FreenessViolation : public Error {
 public:
  FreenessViolation(const std::string& what, InducedEmbedding witness)
      : Error(ErrorKind::kFreenessViolation, what + " (witness " +
                                                 witness.ToString() + ")"),
        witness_(std::move(witness)) {}

  const InducedEmbedding& witness() const { return witness_; }

 private:
  InducedEmbedding witness_;
};

// Default ceiling on s + t for the exhaustive pattern search.
inline constexpr std::size_t kDefaultPatternCap = 8;

// Searches for an induced K_{s,t}. A sides are tried in lexicographic order
// and, for the first A side that admits one, the lexicographically least B
// side is returned. Requires 1 <= s <= t and s + t <= pattern_cap.
std::optional<InducedEmbedding> FindInducedKst(
    const Graph& g, std::size_t s, std::size_t t,
    std::size_t pattern_cap = kDefaultPatternCap);

// Lexicographically least independent set of exactly `size` vertices inside
// `candidates`, if any.
std::optional<std::vector<Vertex>> FindIndependentSubset(
    const Graph& g, const VertexSet& candidates, std::size_t size);

}  // namespace hitlab
