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
#include <optional>
#include <string>
#include <vector>

#include "hitlab/graph.hpp"
#include "hitlab/mis.hpp"
#include "hitlab/schedule.hpp"

namespace hitlab {

enum class CertificateMode {
  kLowDegree,
  kBetConstruction,
  kSampling,
  kKernel,
  kTrivial,
};

const char* CertificateModeName(CertificateMode mode);
CertificateMode ParseCertificateMode(std::string_view name);

struct SizeAccounting {
  std::size_t h = 0;
  std::size_t nh = 0;
  std::size_t s_j = 0;

  friend bool operator==(const SizeAccounting&, const SizeAccounting&) = default;
};

// Trace of one construction run. Sets that the mode does not produce are
// left empty over the host universe.
struct HittingCertificate {
  CertificateMode mode = CertificateMode::kBetConstruction;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::size_t s = 0;
  std::size_t t = 0;
  double delta = 0.0;
  // Sample size used (bet-construction) or sample size p (sampling).
  std::uint64_t k = 0;
  // Vertex whose closed neighbourhood (low-degree) or singleton (kernel)
  // forms T.
  std::optional<Vertex> anchor;
  // 1-based selected degree bin; 0 when no bin was used.
  std::size_t bin_index = 0;
  std::optional<DegreeBin> bin;
  VertexSet T;
  VertexSet I;
  VertexSet S_j;
  VertexSet I_j;
  VertexSet K;
  VertexSet H;
  VertexSet NH;
  SizeAccounting size_accounting;
  // |E(I, V \ (I u K u S_j))|.
  std::size_t e_observed = 0;
};

struct ConstructionOptions {
  // Return {v} u N(v) when some vertex has degree < delta n - 1.
  bool low_degree_shortcut = true;
  // Route alpha > n/2 to a single kernel vertex.
  bool kernel_route = true;
  // Return T = V instead of raising kInfeasible when H cannot fit in I.
  bool trivial_fallback = false;
};

HittingCertificate ClosedNeighborhoodHitting(const Graph& g, Vertex v);

struct BinSelection {
  std::size_t index = 0;  // 1-based
  VertexSet members;
  std::vector<std::size_t> bin_sizes;
};

// Buckets every v outside I by |N_I(v)| and returns the least-populated bin,
// smallest index on ties.
BinSelection BinAndSelect(const Graph& g, const VertexSet& I,
                          const ParamSchedule& sched);

// Uniform k-subset of I without replacement, deterministic in the seed.
VertexSet SampleIj(const VertexSet& I, std::uint64_t k, std::uint64_t seed);

// Union of the common neighbourhoods of all s-subsets of I_j. Each common
// neighbourhood must have independence number < t; otherwise a
// FreenessViolation carrying the induced K_{s,t} is thrown.
VertexSet BuildK(const Graph& g, const VertexSet& I_j, std::size_t s, std::size_t t);

// The h_size members of I with the fewest neighbours in R (smallest id on
// ties).
VertexSet ChooseH(const Graph& g, const VertexSet& I, const VertexSet& R,
                  std::size_t h_size);

// Neighbours of H inside R.
VertexSet ResidualNeighbors(const Graph& g, const VertexSet& H, const VertexSet& R);

HittingCertificate ConstructBetHittingSet(const Graph& g, const ParamSchedule& sched,
                                          std::uint64_t seed,
                                          const ConstructionOptions& options = {});

// True iff every maximum independent set of g meets T (enumeration route).
bool VerifyHittingSet(const Graph& g, const VertexSet& T,
                      std::size_t cap = kDefaultEnumerationCap);
bool VerifyHittingSet(const MisFamily& family, const VertexSet& T);

// Same predicate through alpha(G - T) < alpha(G); no enumeration.
bool HitsAllMaximum(const Graph& g, const VertexSet& T);

struct MinHittingResult {
  std::size_t size = 0;
  VertexSet witness;
};

// Exact minimum transversal of the maximum-independent-set hypergraph; the
// witness is the lexicographically least minimum solution.
MinHittingResult MinHittingSet(const Graph& g, std::size_t cap = kDefaultEnumerationCap);
MinHittingResult MinHittingSet(const MisFamily& family);

struct SamplingResult {
  std::optional<VertexSet> first_success;
  std::size_t first_success_trial = 0;
  std::size_t trials = 0;
  std::size_t failures = 0;
  double fail_rate = 0.0;
  // m (1 - p/n)^alpha.
  double union_bound = 0.0;
  std::size_t family_size = 0;
  std::size_t alpha = 0;
};

// Draws `trials` uniform p-subsets of V (trial i seeded by
// DeriveSeed(seed, i)) and tests each against the full family.
SamplingResult SampleHittingSet(const Graph& g, std::size_t p, std::uint64_t seed,
                                std::size_t trials,
                                std::size_t cap = kDefaultEnumerationCap);

// |T| < h + h e/|I| + delta n/2 with h = (t-1)C(k,s)+1.
bool SizeBoundCheck(const HittingCertificate& cert, const ParamSchedule& sched,
                    std::size_t e_observed);

}  // namespace hitlab
