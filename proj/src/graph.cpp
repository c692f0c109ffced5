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

#include "hitlab/graph.hpp"

#include <algorithm>
#include <string>

namespace hitlab {

Graph::Graph(std::size_t n, std::span<const Edge> edges)
    : rows_(n, VertexSet(n)) {
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      throw Error(ErrorKind::kRange,
                  "edge (" + std::to_string(u) + ", " + std::to_string(v) +
                      ") has an endpoint >= n = " + std::to_string(n));
    }
    if (u == v) {
      throw Error(ErrorKind::kSelfLoop,
                  "self-loop at vertex " + std::to_string(u));
    }
    if (!rows_[u].contains(v)) {
      rows_[u].insert(v);
      rows_[v].insert(u);
      ++m_;
    }
  }
}

Graph Graph::FromRows(std::vector<VertexSet> rows) {
  Graph g;
  g.rows_ = std::move(rows);
  std::size_t degree_sum = 0;
  for (const auto& row : g.rows_) {
    if (row.universe() != g.rows_.size()) {
      throw Error(ErrorKind::kPrecondition, "adjacency row has wrong width");
    }
    degree_sum += row.size();
  }
  g.m_ = degree_sum / 2;
  ValidateGraph(g);
  return g;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n(); ++u) {
    for (Vertex v = rows_[u].next(u); v < n(); v = rows_[u].next(v)) {
      out.emplace_back(u, v);
    }
  }
  return out;
}

bool Graph::is_independent(const VertexSet& s) const {
  bool ok = true;
  s.for_each([&](Vertex v) { ok = ok && !rows_[v].intersects(s); });
  return ok;
}

bool Graph::is_clique(const VertexSet& s) const {
  bool ok = true;
  s.for_each([&](Vertex v) {
    ok = ok && rows_[v].intersection_size(s) + 1 == s.size();
  });
  return ok;
}

std::size_t Graph::edges_between(const VertexSet& a, const VertexSet& b) const {
  std::size_t count = 0;
  a.for_each([&](Vertex v) { count += rows_[v].intersection_size(b); });
  return count;
}

std::size_t Graph::edges_within(const VertexSet& s) const {
  std::size_t count = 0;
  s.for_each([&](Vertex v) { count += rows_[v].intersection_size(s); });
  return count / 2;
}

void ValidateGraph(const Graph& g) {
  std::size_t degree_sum = 0;
  for (Vertex v = 0; v < g.n(); ++v) {
    const VertexSet& row = g.neighbors(v);
    if (row.contains(v)) {
      throw Error(ErrorKind::kPrecondition,
                  "vertex " + std::to_string(v) + " is its own neighbour");
    }
    bool symmetric = true;
    row.for_each([&](Vertex u) { symmetric = symmetric && g.adjacent(u, v); });
    if (!symmetric) {
      throw Error(ErrorKind::kPrecondition,
                  "adjacency row of " + std::to_string(v) + " is not mirrored");
    }
    degree_sum += row.size();
  }
  if (degree_sum != 2 * g.m()) {
    throw Error(ErrorKind::kPrecondition, "cached edge count is stale");
  }
}

Graph Complement(const Graph& g) {
  std::vector<VertexSet> rows;
  rows.reserve(g.n());
  for (Vertex v = 0; v < g.n(); ++v) {
    VertexSet row = g.neighbors(v).complement();
    row.erase(v);
    rows.push_back(std::move(row));
  }
  return Graph::FromRows(std::move(rows));
}

Graph InducedSubgraph(const Graph& g, const VertexSet& keep) {
  std::vector<Vertex> ids = keep.members();
  std::vector<Vertex> relabel(g.n(), 0);
  for (std::size_t i = 0; i < ids.size(); ++i) relabel[ids[i]] = static_cast<Vertex>(i);
  std::vector<Edge> edges;
  for (Vertex u : ids) {
    const VertexSet nbrs = g.neighbors(u) & keep;
    nbrs.for_each([&](Vertex v) {
      if (u < v) edges.emplace_back(relabel[u], relabel[v]);
    });
  }
  return Graph(ids.size(), edges);
}

DegreeWitness MinDegreeVertex(const Graph& g) {
  if (g.n() == 0) {
    throw Error(ErrorKind::kPrecondition, "minimum degree of an empty graph");
  }
  DegreeWitness best{0, g.degree(0)};
  for (Vertex v = 1; v < g.n(); ++v) {
    if (g.degree(v) < best.degree) best = {v, g.degree(v)};
  }
  return best;
}

VertexSet ClosedNeighborhood(const Graph& g, Vertex v) {
  VertexSet out = g.neighbors(v);
  out.insert(v);
  return out;
}

VertexSet CommonNeighborhood(const Graph& g, const VertexSet& s) {
  VertexSet out = g.all();
  s.for_each([&](Vertex v) { out &= g.neighbors(v); });
  return out;
}

bool InducedEmbedding::IsValidIn(const Graph& g) const {
  const auto in_range = [&](Vertex v) { return v < g.n(); };
  if (!std::all_of(side_a.begin(), side_a.end(), in_range) ||
      !std::all_of(side_b.begin(), side_b.end(), in_range)) {
    return false;
  }
  const VertexSet a(g.n(), side_a);
  const VertexSet b(g.n(), side_b);
  if (a.size() != side_a.size() || b.size() != side_b.size()) return false;
  if (a.intersects(b)) return false;
  if (!g.is_independent(a) || !g.is_independent(b)) return false;
  for (Vertex u : side_a) {
    if (!b.is_subset_of(g.neighbors(u))) return false;
  }
  return true;
}

std::string InducedEmbedding::ToString() const {
  std::string out = "A={";
  for (std::size_t i = 0; i < side_a.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(side_a[i]);
  }
  out += "} B={";
  for (std::size_t i = 0; i < side_b.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(side_b[i]);
  }
  return out + "}";
}

namespace {

// Depth-first, smallest id first, so the first hit is the lexicographically
// least independent subset.
bool ExtendIndependent(const Graph& g, const VertexSet& candidates,
                       std::size_t size, std::vector<Vertex>& chosen) {
  if (chosen.size() == size) return true;
  if (candidates.size() < size - chosen.size()) return false;
  for (Vertex v = candidates.first(); v < g.n(); v = candidates.next(v)) {
    VertexSet rest = candidates - g.neighbors(v);
    rest.erase_through(v);
    chosen.push_back(v);
    if (ExtendIndependent(g, rest, size, chosen)) return true;
    chosen.pop_back();
  }
  return false;
}

bool SearchASide(const Graph& g, std::size_t s, std::size_t t,
                 const VertexSet& candidates, VertexSet& side_a,
                 std::vector<Vertex>& a_list, InducedEmbedding& out) {
  if (a_list.size() == s) {
    const VertexSet common = CommonNeighborhood(g, side_a);
    std::vector<Vertex> b_list;
    if (ExtendIndependent(g, common, t, b_list)) {
      out = {a_list, b_list};
      return true;
    }
    return false;
  }
  for (Vertex v = candidates.first(); v < g.n(); v = candidates.next(v)) {
    // A side vertices need at least t common neighbours.
    if (g.degree(v) < t) continue;
    VertexSet rest = candidates - g.neighbors(v);
    rest.erase_through(v);
    side_a.insert(v);
    a_list.push_back(v);
    if (SearchASide(g, s, t, rest, side_a, a_list, out)) return true;
    a_list.pop_back();
    side_a.erase(v);
  }
  return false;
}

}  // namespace

std::optional<InducedEmbedding> FindInducedKst(const Graph& g, std::size_t s,
                                               std::size_t t,
                                               std::size_t pattern_cap) {
  if (s < 1 || s > t) {
    throw Error(ErrorKind::kPrecondition,
                "pattern K_{s,t} needs 1 <= s <= t");
  }
  if (s + t > pattern_cap) {
    throw Error(ErrorKind::kCapExceeded,
                "pattern size s + t = " + std::to_string(s + t) +
                    " exceeds cap " + std::to_string(pattern_cap));
  }
  VertexSet side_a(g.n());
  std::vector<Vertex> a_list;
  InducedEmbedding out;
  if (SearchASide(g, s, t, g.all(), side_a, a_list, out)) return out;
  return std::nullopt;
}

std::optional<std::vector<Vertex>> FindIndependentSubset(
    const Graph& g, const VertexSet& candidates, std::size_t size) {
  std::vector<Vertex> chosen;
  if (ExtendIndependent(g, candidates, size, chosen)) return chosen;
  return std::nullopt;
}

}  // namespace hitlab
