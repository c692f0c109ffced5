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

#include "hitlab/drc.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "hitlab/certificate.hpp"

namespace hitlab {

double DrcBeta(double alpha_density, BetaRule rule) {
  if (rule == BetaRule::kHolmsen) {
    const double r = 1.0 - std::sqrt(1.0 - alpha_density);
    return r * r;
  }
  return alpha_density * alpha_density / 128.0;
}

std::optional<CodegreeHit> CodegreeScan(const Graph& g, double beta) {
  const double threshold = beta * static_cast<double>(g.n());
  for (Vertex u = 0; u < g.n(); ++u) {
    for (Vertex v = u + 1; v < g.n(); ++v) {
      if (g.adjacent(u, v)) continue;
      const VertexSet common = g.neighbors(u) & g.neighbors(v);
      if (static_cast<double>(common.size()) < threshold) continue;
      if (auto pair = FindIndependentSubset(g, common, 2)) {
        throw FreenessViolation("common neighbourhood of a missing edge is not a clique",
                                InducedEmbedding{{u, v}, *pair});
      }
      return CodegreeHit{{u, v}, common};
    }
  }
  return std::nullopt;
}

std::vector<Edge> MaximalMissingMatching(const Graph& g, const VertexSet& U) {
  std::vector<Edge> matching;
  VertexSet free = U;
  for (Vertex u = free.first(); u < g.n(); u = free.next(u)) {
    VertexSet partners = free - g.neighbors(u);
    partners.erase_through(u);
    if (partners.empty()) continue;
    const Vertex v = partners.first();
    matching.emplace_back(u, v);
    free.erase(u);
    free.erase(v);
  }
  return matching;
}

std::size_t MissingEdgesWithin(const Graph& g, const VertexSet& U) {
  const std::size_t k = U.size();
  return k * (k - (k > 0)) / 2 - g.edges_within(U);
}

double DrcScore(const Graph& g, Vertex x, double alpha_density, double beta) {
  const double n = static_cast<double>(g.n());
  const VertexSet& U = g.neighbors(x);
  const auto y = static_cast<double>(MissingEdgesWithin(g, U));
  const double scale = beta * (1.0 - alpha_density) * n;
  double penalty = 0.0;
  if (y > 0.0) {
    penalty = scale > 0.0 ? alpha_density * y / scale
                          : std::numeric_limits<double>::infinity();
  }
  return static_cast<double>(U.size()) - penalty - alpha_density * (n - 1.0) / 2.0;
}

DrcTrace DrcClique(const Graph& g, double alpha_density, BetaRule rule) {
  if (!(alpha_density > 0.0 && alpha_density <= 1.0)) {
    throw Error(ErrorKind::kPrecondition, "edge density must lie in (0, 1]");
  }
  if (g.n() == 0) throw Error(ErrorKind::kPrecondition, "graph has no vertices");
  const double pairs = static_cast<double>(g.n()) * static_cast<double>(g.n() - 1) / 2.0;
  // Relative slack so that passing m / C(n,2) back in is accepted.
  if (static_cast<double>(g.m()) < alpha_density * pairs * (1.0 - 1e-12)) {
    throw Error(ErrorKind::kPrecondition,
                "e(G) = " + std::to_string(g.m()) + " is below the density floor " +
                    FormatReal(alpha_density * pairs));
  }

  DrcTrace trace;
  trace.alpha_density = alpha_density;
  trace.beta = DrcBeta(alpha_density, rule);
  trace.U = g.empty_set();

  if (auto hit = CodegreeScan(g, trace.beta)) {
    trace.branch = DrcBranch::kCodegree;
    trace.missing_edge = hit->missing_edge;
    trace.clique = std::move(hit->common);
    return trace;
  }

  std::vector<double> scores(g.n());
  for (Vertex x = 0; x < g.n(); ++x) {
    scores[x] = DrcScore(g, x, alpha_density, trace.beta);
  }
  Vertex best = 0;
  for (Vertex x = 1; x < g.n(); ++x) {
    if (scores[x] > scores[best]) best = x;
  }

  trace.branch = DrcBranch::kNeighborhood;
  trace.x = best;
  trace.Z = scores[best];
  trace.U = g.neighbors(best);
  trace.Y = MissingEdgesWithin(g, trace.U);
  trace.matching = MaximalMissingMatching(g, trace.U);
  trace.clique = trace.U;
  for (const auto& [u, v] : trace.matching) {
    trace.clique.erase(u);
    trace.clique.erase(v);
  }
  trace.clique.insert(best);
  return trace;
}

bool MatchingPairAudit(const Graph& g, const DrcTrace& trace) {
  const std::size_t m = trace.matching.size();
  return MissingEdgesWithin(g, trace.U) >= m + m * (m - (m > 0)) / 2;
}

std::string FormatDrcTrace(const DrcTrace& trace) {
  std::ostringstream out;
  out << "hitlab-drc-trace: 1\n";
  out << "branch: " << (trace.branch == DrcBranch::kCodegree ? "codegree" : "neighborhood")
      << '\n';
  out << "alpha_density: " << FormatReal(trace.alpha_density) << '\n';
  out << "beta: " << FormatReal(trace.beta) << '\n';
  out << "x:";
  if (trace.x) out << ' ' << *trace.x;
  out << "\nmissing_edge:";
  if (trace.missing_edge) out << ' ' << trace.missing_edge->first << ' ' << trace.missing_edge->second;
  out << "\nU:";
  if (!trace.U.empty()) out << ' ' << trace.U.ToString();
  out << "\nY: " << trace.Y << '\n';
  out << "Z: " << FormatReal(trace.Z) << '\n';
  out << "matching:";
  for (const auto& [u, v] : trace.matching) out << ' ' << u << '-' << v;
  out << "\nclique:";
  if (!trace.clique.empty()) out << ' ' << trace.clique.ToString();
  out << "\nclique_size: " << trace.clique.size() << '\n';
  return out.str();
}

}  // namespace hitlab
