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

#include "hitlab/hitting.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "hitlab/random.hpp"

namespace hitlab {

const char* CertificateModeName(CertificateMode mode) {
  switch (mode) {
    case CertificateMode::kLowDegree: return "low-degree";
    case CertificateMode::kBetConstruction: return "bet-construction";
    case CertificateMode::kSampling: return "sampling";
    case CertificateMode::kKernel: return "kernel";
    case CertificateMode::kTrivial: return "trivial";
  }
  return "unknown";
}

CertificateMode ParseCertificateMode(std::string_view name) {
  for (auto mode : {CertificateMode::kLowDegree, CertificateMode::kBetConstruction,
                    CertificateMode::kSampling, CertificateMode::kKernel,
                    CertificateMode::kTrivial}) {
    if (name == CertificateModeName(mode)) return mode;
  }
  throw Error(ErrorKind::kParse, "unknown certificate mode '" + std::string(name) + "'");
}

namespace {

HittingCertificate BlankCertificate(const Graph& g, CertificateMode mode) {
  HittingCertificate cert;
  cert.mode = mode;
  cert.n = g.n();
  for (VertexSet* set : {&cert.T, &cert.I, &cert.S_j, &cert.I_j, &cert.K,
                         &cert.H, &cert.NH}) {
    *set = g.empty_set();
  }
  return cert;
}

void CopyScheduleHeader(const ParamSchedule& sched, std::uint64_t seed,
                        HittingCertificate& cert) {
  cert.seed = seed;
  cert.s = sched.s;
  cert.t = sched.t;
  cert.delta = sched.delta;
}

}  // namespace

HittingCertificate ClosedNeighborhoodHitting(const Graph& g, Vertex v) {
  if (v >= g.n()) {
    throw Error(ErrorKind::kPrecondition, "vertex " + std::to_string(v) + " out of range");
  }
  HittingCertificate cert = BlankCertificate(g, CertificateMode::kLowDegree);
  cert.anchor = v;
  cert.T = ClosedNeighborhood(g, v);
  return cert;
}

BinSelection BinAndSelect(const Graph& g, const VertexSet& I,
                          const ParamSchedule& sched) {
  if (sched.bins.empty()) {
    throw Error(ErrorKind::kPrecondition, "schedule has no degree bins");
  }
  std::vector<VertexSet> bins(sched.bins.size(), g.empty_set());
  const VertexSet outside = I.complement();
  outside.for_each([&](Vertex v) {
    const std::size_t d = g.neighbors(v).intersection_size(I);
    for (std::size_t j = 0; j < sched.bins.size(); ++j) {
      if (sched.bins[j].Contains(d)) {
        bins[j].insert(v);
        break;
      }
    }
  });
  BinSelection out;
  std::size_t best = 0;
  for (std::size_t j = 0; j < bins.size(); ++j) {
    out.bin_sizes.push_back(bins[j].size());
    if (bins[j].size() < bins[best].size()) best = j;
  }
  out.index = best + 1;
  out.members = std::move(bins[best]);
  return out;
}

VertexSet SampleIj(const VertexSet& I, std::uint64_t k, std::uint64_t seed) {
  if (k > I.size()) {
    throw Error(ErrorKind::kPrecondition,
                "cannot sample " + std::to_string(k) + " vertices from a set of " +
                    std::to_string(I.size()));
  }
  std::vector<Vertex> pool = I.members();
  Rng rng(seed);
  // Partial Fisher-Yates: the first k slots end up a uniform k-subset.
  for (std::size_t i = 0; i < k; ++i) {
    std::swap(pool[i], pool[i + rng.below(pool.size() - i)]);
  }
  VertexSet out(I.universe());
  for (std::size_t i = 0; i < k; ++i) out.insert(pool[i]);
  return out;
}

VertexSet BuildK(const Graph& g, const VertexSet& I_j, std::size_t s, std::size_t t) {
  if (s < 1 || s > t) {
    throw Error(ErrorKind::kPrecondition, "BuildK needs 1 <= s <= t");
  }
  if (I_j.size() < s) {
    throw Error(ErrorKind::kPrecondition,
                "sample has " + std::to_string(I_j.size()) + " vertices, fewer than s = " +
                    std::to_string(s));
  }
  if (!g.is_independent(I_j)) {
    throw Error(ErrorKind::kPrecondition, "sample is not an independent set");
  }
  const std::vector<Vertex> pool = I_j.members();
  VertexSet K = g.empty_set();
  // Walk the s-subsets of pool in lexicographic order of index tuples.
  std::vector<std::size_t> idx(s);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    VertexSet common = g.all();
    for (std::size_t i : idx) common &= g.neighbors(pool[i]);
    if (auto b = FindIndependentSubset(g, common, t)) {
      InducedEmbedding witness;
      for (std::size_t i : idx) witness.side_a.push_back(pool[i]);
      witness.side_b = std::move(*b);
      throw FreenessViolation("common neighbourhood contains an independent set of size t = " +
                                  std::to_string(t),
                              std::move(witness));
    }
    K |= common;

    std::size_t pos = s;
    while (pos > 0 && idx[pos - 1] == pool.size() - s + pos - 1) --pos;
    if (pos == 0) break;
    ++idx[pos - 1];
    for (std::size_t i = pos; i < s; ++i) idx[i] = idx[i - 1] + 1;
  }
  return K;
}

VertexSet ChooseH(const Graph& g, const VertexSet& I, const VertexSet& R,
                  std::size_t h_size) {
  if (R.intersects(I)) {
    throw Error(ErrorKind::kPrecondition, "residual set must avoid I");
  }
  if (h_size > I.size()) {
    throw Error(ErrorKind::kInfeasible,
                "H needs " + std::to_string(h_size) + " vertices but I has " +
                    std::to_string(I.size()));
  }
  struct Ranked {
    std::size_t residual_degree;
    Vertex v;
  };
  std::vector<Ranked> ranked;
  I.for_each([&](Vertex v) {
    ranked.push_back({g.neighbors(v).intersection_size(R), v});
  });
  std::stable_sort(ranked.begin(), ranked.end(), [](const Ranked& a, const Ranked& b) {
    return a.residual_degree < b.residual_degree;
  });
  VertexSet H(g.n());
  for (std::size_t i = 0; i < h_size; ++i) H.insert(ranked[i].v);
  return H;
}

VertexSet ResidualNeighbors(const Graph& g, const VertexSet& H, const VertexSet& R) {
  VertexSet out = g.empty_set();
  H.for_each([&](Vertex v) { out |= g.neighbors(v) & R; });
  return out;
}

HittingCertificate ConstructBetHittingSet(const Graph& g, const ParamSchedule& sched,
                                          std::uint64_t seed,
                                          const ConstructionOptions& options) {
  if (g.n() == 0) throw Error(ErrorKind::kPrecondition, "graph has no vertices");
  ValidateSchedule(sched);
  if (sched.exponent_base > 0.0 && !sched.feasible) {
    throw Error(ErrorKind::kInfeasible,
                "exponent schedule is infeasible at n = " + std::to_string(g.n()));
  }
  const double n = static_cast<double>(g.n());

  if (options.low_degree_shortcut) {
    const DegreeWitness low = MinDegreeVertex(g);
    if (static_cast<double>(low.degree) < sched.delta * n - 1.0) {
      HittingCertificate cert = ClosedNeighborhoodHitting(g, low.vertex);
      CopyScheduleHeader(sched, seed, cert);
      return cert;
    }
  }

  const MisResult mis = AlphaWithWitness(g);
  const VertexSet& I = mis.witness;

  if (options.kernel_route && 2 * mis.size > g.n()) {
    // alpha > n/2: some vertex lies in every maximum independent set; it is
    // the first v whose removal lowers alpha.
    for (Vertex v = 0; v < g.n(); ++v) {
      VertexSet rest = g.all();
      rest.erase(v);
      if (AlphaWithin(g, rest).size < mis.size) {
        HittingCertificate cert = BlankCertificate(g, CertificateMode::kKernel);
        CopyScheduleHeader(sched, seed, cert);
        cert.anchor = v;
        cert.I = I;
        cert.T.insert(v);
        return cert;
      }
    }
    throw Error(ErrorKind::kVerification, "alpha > n/2 but the kernel is empty");
  }

  HittingCertificate cert = BlankCertificate(g, CertificateMode::kBetConstruction);
  CopyScheduleHeader(sched, seed, cert);
  cert.I = I;

  BinSelection selection = BinAndSelect(g, I, sched);
  cert.bin_index = selection.index;
  cert.bin = sched.bins[selection.index - 1];
  cert.S_j = std::move(selection.members);

  const std::uint64_t k = sched.SampleSize(selection.index);
  cert.k = k;
  const auto h = HSize(k, sched.s, sched.t);
  if (k < sched.s || !h || k > I.size() || *h > I.size()) {
    if (options.trivial_fallback) {
      HittingCertificate trivial = BlankCertificate(g, CertificateMode::kTrivial);
      CopyScheduleHeader(sched, seed, trivial);
      trivial.I = I;
      trivial.k = k;
      trivial.T = g.all();
      return trivial;
    }
    throw Error(ErrorKind::kInfeasible,
                "(t-1)C(k,s)+1 = " + (h ? std::to_string(*h) : std::string("overflow")) +
                    " with k = " + std::to_string(k) + " does not fit in alpha = " +
                    std::to_string(I.size()));
  }

  cert.I_j = SampleIj(I, k, seed);
  cert.K = BuildK(g, cert.I_j, sched.s, sched.t);
  const VertexSet R = (I | cert.K | cert.S_j).complement();
  cert.e_observed = g.edges_between(I, R);
  cert.H = ChooseH(g, I, R, static_cast<std::size_t>(*h));
  cert.NH = ResidualNeighbors(g, cert.H, R);
  cert.T = cert.H | cert.NH | cert.S_j;
  cert.size_accounting = {cert.H.size(), cert.NH.size(), cert.S_j.size()};
  return cert;
}

bool VerifyHittingSet(const Graph& g, const VertexSet& T, std::size_t cap) {
  return VerifyHittingSet(EnumerateMis(g, cap), T);
}

bool VerifyHittingSet(const MisFamily& family, const VertexSet& T) {
  return std::all_of(family.sets.begin(), family.sets.end(),
                     [&](const VertexSet& s) { return s.intersects(T); });
}

bool HitsAllMaximum(const Graph& g, const VertexSet& T) {
  const std::size_t alpha = AlphaWithWitness(g).size;
  return AlphaWithin(g, T.complement()).size < alpha;
}

namespace {

// Decision search for transversals of a fixed hyperedge list.
class TransversalSearch {
 public:
  TransversalSearch(const std::vector<VertexSet>& edges, std::size_t universe)
      : edges_(edges), universe_(universe) {}

  // Is there a transversal T with chosen <= T <= chosen | allowed and
  // |T| <= |chosen| + budget?
  bool Feasible(const VertexSet& chosen, const VertexSet& allowed, std::size_t budget) const {
    std::vector<std::size_t> open;
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      if (!edges_[i].intersects(chosen)) open.push_back(i);
    }
    return Search(open, allowed, budget);
  }

  // Lower bound: greedy packing of pairwise disjoint open edges.
  std::size_t PackingBound(const std::vector<std::size_t>& open,
                           const VertexSet& allowed) const {
    VertexSet used(universe_);
    std::size_t count = 0;
    for (std::size_t i : open) {
      const VertexSet live = edges_[i] & allowed;
      if (!live.intersects(used)) {
        used |= live;
        ++count;
      }
    }
    return count;
  }

  std::size_t GreedyUpperBound() const {
    std::vector<std::size_t> open(edges_.size());
    std::iota(open.begin(), open.end(), 0);
    std::size_t picks = 0;
    while (!open.empty()) {
      std::vector<std::size_t> freq(universe_, 0);
      for (std::size_t i : open) edges_[i].for_each([&](Vertex v) { ++freq[v]; });
      const auto best = static_cast<Vertex>(
          std::max_element(freq.begin(), freq.end()) - freq.begin());
      std::erase_if(open, [&](std::size_t i) { return edges_[i].contains(best); });
      ++picks;
    }
    return picks;
  }

 private:
  bool Search(const std::vector<std::size_t>& open, const VertexSet& allowed,
              std::size_t budget) const {
    if (open.empty()) return true;
    if (budget == 0) return false;
    std::size_t pick = open.front();
    std::size_t pick_live = universe_ + 1;
    for (std::size_t i : open) {
      const std::size_t live = edges_[i].intersection_size(allowed);
      if (live == 0) return false;
      if (live < pick_live) {
        pick_live = live;
        pick = i;
      }
    }
    if (PackingBound(open, allowed) > budget) return false;

    VertexSet branch_allowed = allowed;
    const VertexSet live = edges_[pick] & allowed;
    bool found = false;
    live.for_each([&](Vertex v) {
      if (found) return;
      branch_allowed.erase(v);
      std::vector<std::size_t> rest;
      for (std::size_t i : open) {
        if (!edges_[i].contains(v)) rest.push_back(i);
      }
      // Later siblings exclude v, so each transversal is explored once.
      found = Search(rest, branch_allowed, budget - 1);
    });
    return found;
  }

  const std::vector<VertexSet>& edges_;
  std::size_t universe_;
};

}  // namespace

MinHittingResult MinHittingSet(const Graph& g, std::size_t cap) {
  return MinHittingSet(EnumerateMis(g, cap));
}

MinHittingResult MinHittingSet(const MisFamily& family) {
  const std::size_t n = family.host_n;
  if (family.alpha == 0) {
    throw Error(ErrorKind::kPrecondition, "the empty independent set cannot be hit");
  }
  const TransversalSearch search(family.sets, n);
  const VertexSet none(n);
  const VertexSet all = VertexSet::Full(n);

  std::vector<std::size_t> every(family.sets.size());
  std::iota(every.begin(), every.end(), 0);
  std::size_t size = search.PackingBound(every, all);
  const std::size_t upper = search.GreedyUpperBound();
  while (size < upper && !search.Feasible(none, all, size)) ++size;

  // Lexicographically least: fix the smallest feasible element position by
  // position, later elements drawn from larger ids only.
  VertexSet chosen(n);
  Vertex floor = 0;
  for (std::size_t pos = 0; pos < size; ++pos) {
    bool placed = false;
    for (Vertex v = floor; v < n && !placed; ++v) {
      VertexSet trial = chosen;
      trial.insert(v);
      VertexSet above = all;
      above.erase_through(v);
      if (search.Feasible(trial, above, size - pos - 1)) {
        chosen = std::move(trial);
        floor = v + 1;
        placed = true;
      }
    }
    if (!placed) {
      throw Error(ErrorKind::kVerification, "minimum transversal reconstruction failed");
    }
  }
  return {size, chosen};
}

SamplingResult SampleHittingSet(const Graph& g, std::size_t p, std::uint64_t seed,
                                std::size_t trials, std::size_t cap) {
  if (p > g.n()) {
    throw Error(ErrorKind::kPrecondition, "sample size p exceeds n");
  }
  const MisFamily family = EnumerateMis(g, cap);
  SamplingResult out;
  out.trials = trials;
  out.family_size = family.sets.size();
  out.alpha = family.alpha;
  out.union_bound =
      g.n() == 0 ? 0.0
                 : static_cast<double>(family.sets.size()) *
                       std::pow(1.0 - static_cast<double>(p) / static_cast<double>(g.n()),
                                static_cast<double>(family.alpha));
  const VertexSet all = g.all();
  for (std::size_t trial = 0; trial < trials; ++trial) {
    const VertexSet T = SampleIj(all, p, DeriveSeed(seed, trial));
    if (VerifyHittingSet(family, T)) {
      if (!out.first_success) {
        out.first_success = T;
        out.first_success_trial = trial;
      }
    } else {
      ++out.failures;
    }
  }
  out.fail_rate = trials == 0 ? 0.0
                              : static_cast<double>(out.failures) / static_cast<double>(trials);
  return out;
}

bool SizeBoundCheck(const HittingCertificate& cert, const ParamSchedule& sched,
                    std::size_t e_observed) {
  if (cert.mode != CertificateMode::kBetConstruction) {
    throw Error(ErrorKind::kPrecondition, "size audit applies to bet-construction certificates");
  }
  const auto h = HSize(cert.k, sched.s, sched.t);
  if (!h || cert.I.empty()) return false;
  // Plain double arithmetic: the decimal delta the user typed, so that a
  // boundary such as delta = 0.8 on C5 stays on the boundary.
  const double hh = static_cast<double>(*h);
  const double bound = hh + hh * static_cast<double>(e_observed) /
                                static_cast<double>(cert.I.size()) +
                       sched.delta * static_cast<double>(cert.n) / 2.0;
  return static_cast<double>(cert.T.size()) < bound;
}

}  // namespace hitlab
