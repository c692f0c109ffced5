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

#include <cmath>
#include <map>
#include <vector>

#include "doctest.h"
#include "hitlab/certificate.hpp"
#include "hitlab/generators.hpp"
#include "hitlab/hitting.hpp"
#include "hitlab/mis.hpp"
#include "hitlab/random.hpp"
#include "hitlab/schedule.hpp"
#include "../oracles.hpp"

using namespace hitlab;

namespace {

// Single bin [1,2), k = 2, s = t = 2, delta = 0.9 on C5.
ParamSchedule C5Schedule(double delta = 0.9) { return UserSchedule(2, 2, delta, 2, {{1, 2}}); }

ConstructionOptions NoShortcut() {
  ConstructionOptions o;
  o.low_degree_shortcut = false;
  return o;
}

ErrorKind KindOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::kParse;
}

}  // namespace

TEST_CASE("paper_schedule examples") {
  const ParamSchedule at2 = PaperScheduleFromLogN(2.0, 1, 2, 0.5);
  REQUIRE(at2.bins.size() == 4);
  CHECK(at2.bins[0].log_k == doctest::Approx(100.0 * std::log(2.0)).epsilon(1e-12));
  CHECK(at2.bins[0].k == 0);  // 2^100 does not fit
  CHECK(at2.paper_mode);
  CHECK_FALSE(at2.feasible);

  const ParamSchedule big = PaperSchedule(1000000, 1, 2, 0.5);
  CHECK_FALSE(big.feasible);
  CHECK(big.bins[0].log_k == doctest::Approx(100.0 * std::log(std::log(1e6))));
  CHECK(big.bins[0].log_k > std::log(1e6));

  for (const auto& sched : {at2, big, PaperSchedule(5000, 2, 3, 0.3)}) {
    for (std::size_t j = 1; j < sched.bins.size(); ++j) {
      // Bin j sits strictly below bin j-1.
      CHECK(sched.bins[j].log_theta_hi <= sched.bins[j - 1].log_theta_lo);
      CHECK(sched.bins[j].log_theta_lo < sched.bins[j].log_theta_hi);
    }
  }
}

TEST_CASE("user schedules validate ordering") {
  CHECK_NOTHROW(ValidateSchedule(UserSchedule(1, 2, 0.5, 1, {{4, 8}, {2, 4}, {1, 2}})));
  CHECK(KindOf([] { ValidateSchedule(UserSchedule(1, 2, 0.5, 1, {{1, 2}, {2, 4}})); }) ==
        ErrorKind::kPrecondition);
  CHECK(KindOf([] { ValidateSchedule(UserSchedule(2, 2, 0.5, 1, {{1, 2}})); }) ==
        ErrorKind::kPrecondition);
  CHECK(KindOf([] { ValidateSchedule(UserSchedule(3, 2, 0.5, 4, {{1, 2}})); }) ==
        ErrorKind::kPrecondition);
  CHECK(KindOf([] { ValidateSchedule(UserSchedule(1, 2, 1.0, 1, {{1, 2}})); }) ==
        ErrorKind::kPrecondition);
  const auto geo = GeometricBins(1, 65, 3);
  REQUIRE(geo.size() == 3);
  CHECK(geo[0].hi == doctest::Approx(65));
  CHECK(geo[2].lo == doctest::Approx(1));
  CHECK(geo[1].hi == doctest::Approx(geo[0].lo));
}

TEST_CASE("closed_neighborhood_hitting examples") {
  const HittingCertificate e = ClosedNeighborhoodHitting(GenEmpty(4), 0);
  CHECK(e.mode == CertificateMode::kLowDegree);
  CHECK(e.T.ToString() == "0");
  CHECK(VerifyHittingSet(GenEmpty(4), e.T));

  const HittingCertificate k4 = ClosedNeighborhoodHitting(GenComplete(4), 0);
  CHECK(k4.T == VertexSet::Full(4));
  CHECK(VerifyHittingSet(GenComplete(4), k4.T));

  const HittingCertificate c5 = ClosedNeighborhoodHitting(GenCycle(5), 0);
  CHECK(c5.T.ToString() == "0 1 4");
  CHECK(VerifyHittingSet(GenCycle(5), c5.T));
}

TEST_CASE("bin_and_select examples") {
  const Graph c5 = GenCycle(5);
  const VertexSet I(5, {0, 2});
  const BinSelection sel = BinAndSelect(c5, I, C5Schedule());
  CHECK(sel.index == 1);
  CHECK(sel.members.ToString() == "3 4");

  const BinSelection none = BinAndSelect(c5, I, UserSchedule(2, 2, 0.9, 2, {{10, 20}}));
  CHECK(none.index == 1);
  CHECK(none.members.empty());

  const BinSelection tie = BinAndSelect(c5, I, UserSchedule(2, 2, 0.9, 2, {{10, 20}, {5, 10}}));
  CHECK(tie.index == 1);
  CHECK(tie.bin_sizes == std::vector<std::size_t>{0, 0});
}

TEST_CASE("pigeonhole bound on the selected bin") {
  Rng rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = GenGnp(10 + rng.below(15), 0.3, rng.next());
    const VertexSet I = AlphaWithWitness(g).witness;
    const std::size_t bins = 1 + rng.below(5);
    const ParamSchedule sched = UserSchedule(1, 2, 0.5, 1, GeometricBins(1, double(g.n()), bins));
    const BinSelection sel = BinAndSelect(g, I, sched);
    CHECK(sel.members.size() * bins <= g.n() - I.size());
    CHECK_FALSE(sel.members.intersects(I));
  }
}

TEST_CASE("sample_Ij examples") {
  const VertexSet I(9, {1, 4, 6, 8});
  CHECK(SampleIj(I, 4, 3) == I);
  CHECK(SampleIj(I, 0, 3).empty());
  CHECK(SampleIj(I, 2, 99) == SampleIj(I, 2, 99));
  CHECK(SampleIj(I, 2, 99).is_subset_of(I));
  CHECK(KindOf([&] { SampleIj(I, 5, 0); }) == ErrorKind::kPrecondition);

  const VertexSet five = VertexSet::Full(5);
  std::map<std::string, int> counts;
  const int draws = 10000;
  for (int i = 0; i < draws; ++i) ++counts[SampleIj(five, 2, DeriveSeed(5, i)).ToString()];
  CHECK(counts.size() == 10);
  const double sigma = std::sqrt(draws * 0.1 * 0.9);
  for (const auto& [pair, c] : counts) {
    CHECK(std::abs(c - draws * 0.1) <= 3 * sigma);
  }
}

TEST_CASE("build_K examples") {
  CHECK(BuildK(GenCycle(5), VertexSet(5, {0, 2}), 2, 2).ToString() == "1");
  try {
    BuildK(GenCycle(4), VertexSet(4, {0, 2}), 2, 2);
    FAIL("expected freeness violation");
  } catch (const FreenessViolation& e) {
    CHECK(e.witness().side_a == std::vector<Vertex>{0, 2});
    CHECK(e.witness().side_b == std::vector<Vertex>{1, 3});
    CHECK(e.witness().IsValidIn(GenCycle(4)));
  }
  CHECK(KindOf([] { BuildK(GenCycle(5), VertexSet(5, {0}), 2, 2); }) == ErrorKind::kPrecondition);
}

TEST_CASE("choose_H examples") {
  // I = {0,1,2}; 0 sees both residual vertices, 1 sees one, 2 none.
  const std::vector<Edge> edges{{0, 3}, {0, 4}, {1, 3}};
  const Graph g(5, edges);
  const VertexSet I(5, {0, 1, 2});
  const VertexSet R(5, {3, 4});
  CHECK(ChooseH(g, I, R, 2).ToString() == "1 2");
  CHECK(ChooseH(g, I, R, 3) == I);
  CHECK(ChooseH(g, I, VertexSet(5), 2).ToString() == "0 1");
  CHECK(KindOf([&] { ChooseH(g, I, R, 4); }) == ErrorKind::kInfeasible);
  CHECK(KindOf([&] { ChooseH(g, I, VertexSet(5, {0, 3}), 1); }) == ErrorKind::kPrecondition);
}

TEST_CASE("choose_H average bound with exact arithmetic") {
  Rng rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = GenGnp(20, 0.25, rng.next());
    const VertexSet I = AlphaWithWitness(g).witness;
    VertexSet R = I.complement();
    for (Vertex v = 0; v < 20; ++v) {
      if (rng.below(3) == 0) R.erase(v);
    }
    const std::size_t h = 1 + rng.below(I.size());
    const VertexSet H = ChooseH(g, I, R, h);
    CHECK(H.size() == h);
    CHECK(H.is_subset_of(I));
    const std::size_t e = g.edges_between(I, R);
    std::size_t total = 0;
    H.for_each([&](Vertex v) { total += g.neighbors(v).intersection_size(R); });
    CHECK(total * I.size() <= h * e);
  }
}

TEST_CASE("construct_bet_hitting_set C5 hand trace") {
  const Graph c5 = GenCycle(5);
  const HittingCertificate cert = ConstructBetHittingSet(c5, C5Schedule(), 7, NoShortcut());
  CHECK(cert.mode == CertificateMode::kBetConstruction);
  CHECK(cert.I.ToString() == "0 2");
  CHECK(cert.S_j.ToString() == "3 4");
  CHECK(cert.I_j.ToString() == "0 2");
  CHECK(cert.K.ToString() == "1");
  CHECK(cert.H == cert.I);
  CHECK(cert.NH.empty());
  CHECK(cert.T.ToString() == "0 2 3 4");
  CHECK(cert.e_observed == 0);
  CHECK(cert.size_accounting == SizeAccounting{2, 0, 2});
  CHECK(VerifyHittingSet(c5, cert.T));
  CHECK(AuditCertificate(c5, cert).empty());

  // With the shortcut on, C5 has degree 2 < 0.9 * 5 - 1.
  const HittingCertificate quick = ConstructBetHittingSet(c5, C5Schedule(), 7);
  CHECK(quick.mode == CertificateMode::kLowDegree);
  CHECK(VerifyHittingSet(c5, quick.T));
}

TEST_CASE("construct_bet_hitting_set shortcut and cluster seeds") {
  const HittingCertificate e = ConstructBetHittingSet(GenEmpty(6), C5Schedule(0.5), 1);
  CHECK(e.mode == CertificateMode::kLowDegree);
  CHECK(e.T.ToString() == "0");

  const Graph g = GenCluster(std::vector<std::size_t>{4, 4, 4});
  const ParamSchedule sched = UserSchedule(2, 2, 0.3, 2, {{1, 2}});
  const MisFamily fam = EnumerateMis(g);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const HittingCertificate cert = ConstructBetHittingSet(g, sched, seed);
    CHECK(cert.mode == CertificateMode::kBetConstruction);
    CHECK(VerifyHittingSet(fam, cert.T));
    CHECK(cert.T.size() >= MinHittingSet(fam).size);
  }
}

TEST_CASE("construction raises on infeasible parameters") {
  const Graph g = GenCluster(std::vector<std::size_t>{4, 4, 4});
  // h = (t-1) C(3,2) + 1 = 4 > alpha = 3.
  const ParamSchedule sched = UserSchedule(2, 2, 0.3, 3, {{1, 2}});
  CHECK(KindOf([&] { ConstructBetHittingSet(g, sched, 0); }) == ErrorKind::kInfeasible);
  ConstructionOptions o;
  o.trivial_fallback = true;
  const HittingCertificate cert = ConstructBetHittingSet(g, sched, 0, o);
  CHECK(cert.mode == CertificateMode::kTrivial);
  CHECK(cert.T == g.all());
  CHECK(KindOf([] {
          ConstructBetHittingSet(GenCycle(6), PaperSchedule(6, 1, 2, 0.5), 0);
        }) == ErrorKind::kInfeasible);
}

TEST_CASE("construction surfaces freeness violations") {
  // K_{2,3} itself: any two of the three leaves share an independent pair.
  const std::vector<Edge> k23{{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}};
  const Graph g(5, k23);
  ConstructionOptions o = NoShortcut();
  o.kernel_route = false;
  CHECK(KindOf([&] { ConstructBetHittingSet(g, UserSchedule(2, 2, 0.5, 2, {{1, 4}}), 0, o); }) ==
        ErrorKind::kFreenessViolation);
}

TEST_CASE("kernel route when alpha exceeds n/2") {
  // Star: alpha = 3 > 4/2, kernel = leaves.
  const Graph g = GenStar(3);
  ConstructionOptions o = NoShortcut();
  const HittingCertificate cert = ConstructBetHittingSet(g, UserSchedule(1, 2, 0.5, 1, {{1, 2}}), 0, o);
  CHECK(cert.mode == CertificateMode::kKernel);
  CHECK(cert.T.size() == 1);
  CHECK(VerifyHittingSet(g, cert.T));
  CHECK(cert.T.is_subset_of(Kernel(g)));
}

TEST_CASE("verify_hitting_set examples") {
  const Graph c5 = GenCycle(5);
  CHECK_FALSE(VerifyHittingSet(c5, VertexSet(5, {0})));
  CHECK(VerifyHittingSet(c5, VertexSet(5, {0, 1, 2})));
  CHECK(VerifyHittingSet(c5, c5.all()));
  CHECK_FALSE(HitsAllMaximum(c5, VertexSet(5, {0})));
  CHECK(HitsAllMaximum(c5, VertexSet(5, {0, 1, 2})));
  CHECK_THROWS_AS(VerifyHittingSet(GenEmpty(50), VertexSet::Full(50)), Error);
}

TEST_CASE("min_hitting_set examples") {
  for (std::size_t q = 1; q <= 6; ++q) CHECK(MinHittingSet(GenComplete(q)).size == q);
  const MinHittingResult c5 = MinHittingSet(GenCycle(5));
  CHECK(c5.size == 3);
  CHECK(c5.witness.ToString() == "0 1 2");
  CHECK(MinHittingSet(GenCluster(std::vector<std::size_t>{2, 3})).size == 2);
}

TEST_CASE("min_hitting_set matches brute force") {
  Rng rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = GenGnp(3 + rng.below(8), 0.4, rng.next());
    const MinHittingResult r = MinHittingSet(g);
    CHECK(r.size == oracle::MinHitting(g));
    CHECK(r.witness.size() == r.size);
    CHECK(VerifyHittingSet(g, r.witness));
  }
}

TEST_CASE("sample_hitting_set examples") {
  const Graph c5 = GenCycle(5);
  const SamplingResult full = SampleHittingSet(c5, 5, 1, 10);
  REQUIRE(full.first_success.has_value());
  CHECK(full.first_success_trial == 0);
  CHECK(full.fail_rate == 0.0);

  const SamplingResult none = SampleHittingSet(c5, 0, 1, 10);
  CHECK_FALSE(none.first_success.has_value());
  CHECK(none.failures == 10);

  const SamplingResult cl = SampleHittingSet(GenCluster(std::vector<std::size_t>{3, 3, 3}), 6, 2, 10000);
  CHECK(cl.family_size == 27);
  CHECK(cl.alpha == 3);
  CHECK(cl.union_bound == doctest::Approx(27.0 / 27.0));
  const double sigma = std::sqrt(cl.fail_rate * (1 - cl.fail_rate) / 10000.0);
  CHECK(cl.fail_rate <= cl.union_bound + 3 * sigma);
}

TEST_CASE("budget examples") {
  CHECK(Budget(100, 0.3, 0.1, 4, 2, 2) == doctest::Approx(300.0 / 14.0 - 30.0));
  CHECK(Budget(100, 0.3, 0.1, 4, 1, 1) == doctest::Approx(120.0));
  double prev = Budget(100, 0.3, 0.05, 4, 2, 3);
  for (double d = 0.1; d < 1.0; d += 0.05) {
    const double b = Budget(100, 0.3, d, 4, 2, 3);
    CHECK(b > prev);
    prev = b;
  }
  CHECK_THROWS_AS(Budget(100, 0.6, 0.1, 4, 2, 2), Error);
  CHECK(HSize(4, 2, 3) == 13u);
  CHECK(BinomialExact(60, 30) == 118264581564861424u);
  CHECK_FALSE(BinomialExact(200, 100).has_value());
}

TEST_CASE("size_bound_check examples") {
  const Graph c5 = GenCycle(5);
  for (double delta : {0.79, 0.8, 0.81, 0.9}) {
    const ParamSchedule sched = C5Schedule(delta);
    const HittingCertificate cert = ConstructBetHittingSet(c5, sched, 7, NoShortcut());
    CHECK(cert.T.size() == 4);
    CHECK(SizeBoundCheck(cert, sched, 0) == (delta > 0.8));
  }
  // e = 0 and S_j empty: T = H, bound |H| + delta n / 2.
  HittingCertificate cert;
  cert.mode = CertificateMode::kBetConstruction;
  cert.n = 10;
  cert.k = 2;
  cert.I = VertexSet(10, {0, 1, 2});
  cert.T = VertexSet(10, {0, 1});
  CHECK(SizeBoundCheck(cert, UserSchedule(2, 2, 0.1, 2, {{1, 2}}), 0));
  cert.mode = CertificateMode::kLowDegree;
  CHECK_THROWS_AS(SizeBoundCheck(cert, UserSchedule(2, 2, 0.1, 2, {{1, 2}}), 0), Error);
}

TEST_CASE("K-exclusion arithmetic and unconditional validity on a corpus") {
  Rng rng(17);
  std::size_t bet_runs = 0;
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t n = 8 + rng.below(8);
    const Graph g = (trial % 2 == 0) ? GenC4FreeProcess(n, n + rng.below(n), rng.next())
                                     : GenChordal(n, 0.5, rng.next());
    if (FindInducedKst(g, 2, 2)) continue;
    const MisFamily fam = EnumerateMis(g);
    const std::uint64_t k = 2;
    if (*HSize(k, 2, 2) > fam.alpha) continue;
    const std::size_t mindeg = MinDegreeVertex(g).degree;
    const double delta = std::min(0.95, (double(mindeg) + 1.0) / double(n));
    const ParamSchedule sched = UserSchedule(2, 2, delta, k, GeometricBins(1, double(n) + 1, 3));
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const HittingCertificate cert = ConstructBetHittingSet(g, sched, seed);
      CHECK(VerifyHittingSet(fam, cert.T));
      CHECK(AuditCertificate(g, cert).empty());
      if (cert.mode != CertificateMode::kBetConstruction) continue;
      ++bet_runs;
      for (const auto& mis : fam.sets) {
        CHECK(mis.intersection_size(cert.K) <= (2 - 1) * oracle::Binomial(k, 2));
      }
      CHECK(cert.T == (cert.H | cert.NH | cert.S_j));
      CHECK(cert.H.is_subset_of(cert.I));
      CHECK(cert.I_j.is_subset_of(cert.I));
      CHECK_FALSE(cert.K.intersects(cert.I));
    }
  }
  CHECK(bet_runs > 0);
}

TEST_CASE("certificate round trip and replay") {
  const Graph g = GenCluster(std::vector<std::size_t>{3, 4, 5});
  const ParamSchedule sched = UserSchedule(1, 2, 0.2, 1, {{1, 2}});
  const HittingCertificate cert = ConstructBetHittingSet(g, sched, 3);
  const std::string text = FormatCertificate(cert);
  const HittingCertificate back = ParseCertificate(text);
  CHECK(FormatCertificate(back) == text);
  CHECK(ReplayMatches(g, sched, back));
  CHECK(AuditCertificate(g, back).empty());

  HittingCertificate bad = back;
  bad.T.erase(bad.T.first());
  CHECK_FALSE(AuditCertificate(g, bad).empty());
  CHECK_FALSE(ReplayMatches(g, sched, bad));
  CHECK_THROWS_AS(ParseCertificate("hitlab-certificate: 1\nmode: nonsense\n"), Error);
}
