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

#include "hitlab/experiment.hpp"

#include <chrono>
#include <cmath>
#include <charconv>
#include <cstdio>
#include <sstream>

#include "hitlab/certificate.hpp"
#include "hitlab/generators.hpp"
#include "hitlab/mis.hpp"
#include "hitlab/random.hpp"
#include "json.hpp"

namespace hitlab {

namespace {

using json = nlohmann::json;

std::string ShortReal(double x) {
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  return ec == std::errc() ? std::string(buf, ptr) : FormatReal(x);
}

double MillisSince(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

std::vector<std::size_t> RandomClusterSizes(std::size_t n, std::size_t lo, std::size_t hi,
                                            std::uint64_t seed) {
  Rng rng(seed);
  std::vector<std::size_t> sizes;
  std::size_t remaining = n;
  while (remaining > 0) {
    std::size_t size = remaining;
    if (remaining > hi) {
      const std::size_t upper = std::min(hi, remaining - lo);
      if (upper >= lo) size = lo + rng.below(upper - lo + 1);
    }
    sizes.push_back(size);
    remaining -= size;
  }
  return sizes;
}

}  // namespace

std::string FamilySpec::Label() const {
  if (name == "gnp") return "gnp:p=" + ShortReal(p);
  if (name == "cluster") {
    std::string out = "cluster:";
    for (std::size_t i = 0; i < sizes.size(); ++i) {
      if (i) out += '+';
      out += std::to_string(sizes[i]);
    }
    return out;
  }
  if (name == "cluster_random") {
    return "cluster_random:" + std::to_string(size_min) + ".." + std::to_string(size_max);
  }
  if (name == "c4free") return "c4free:m=" + (m ? std::to_string(*m) : std::string("sat"));
  if (name == "chordal") return "chordal:density=" + ShortReal(density);
  return name;
}

Graph FamilySpec::Generate(std::size_t n, std::uint64_t seed) const {
  if (name == "gnp") return GenGnp(n, p, seed);
  if (name == "cluster") return GenCluster(sizes);
  if (name == "cluster_random") {
    if (size_min < 1 || size_min > size_max) {
      throw Error(ErrorKind::kPrecondition, "cluster_random needs 1 <= min <= max");
    }
    return GenCluster(RandomClusterSizes(n, size_min, size_max, seed));
  }
  if (name == "c4free") {
    const std::size_t pairs = n * (n - (n > 0)) / 2;
    return GenC4FreeProcess(n, m ? std::min(*m, pairs) : pairs, seed);
  }
  if (name == "chordal") return GenChordal(n, density, seed);
  if (name == "path") return GenPath(n);
  if (name == "cycle") return GenCycle(n);
  throw Error(ErrorKind::kPrecondition, "unknown graph family '" + name + "'");
}

ParamSchedule ScheduleSpec::Build(std::size_t n) const {
  switch (kind) {
    case Kind::kPaper:
      return PaperSchedule(n, s, t, delta);
    case Kind::kExponent:
      return ExponentSchedule(n, s, t, delta, exponent_base);
    case Kind::kUser:
      break;
  }
  if (bins.empty() && geometric_bins > 0) {
    return UserSchedule(s, t, delta, k,
                        GeometricBins(1.0, static_cast<double>(n) + 1.0, geometric_bins));
  }
  return UserSchedule(s, t, delta, k, bins);
}

ExperimentConfig ParseExperimentConfig(std::string_view json_text) {
  ExperimentConfig config;
  try {
    const json root = json::parse(json_text);
    if (!root.is_object()) throw Error(ErrorKind::kParse, "config must be a JSON object");
    for (const auto& f : root.value("families", json::array())) {
      FamilySpec spec;
      if (f.is_string()) {
        spec.name = f.get<std::string>();
      } else {
        spec.name = f.at("name").get<std::string>();
        spec.p = f.value("p", spec.p);
        spec.sizes = f.value("sizes", spec.sizes);
        spec.size_min = f.value("size_min", f.value("min", spec.size_min));
        spec.size_max = f.value("size_max", f.value("max", spec.size_max));
        if (f.contains("m")) spec.m = f.at("m").get<std::size_t>();
        spec.density = f.value("density", spec.density);
      }
      config.families.push_back(std::move(spec));
    }
    config.n_values = root.value("n_values", config.n_values);
    config.seeds = root.value("seeds", config.seeds);

    ScheduleSpec& sched = config.schedule;
    sched.s = root.value("s", sched.s);
    sched.t = root.value("t", sched.t);
    sched.delta = root.value("delta", sched.delta);
    if (root.contains("schedule")) {
      const json& node = root.at("schedule");
      if (node.is_string()) {
        const auto mode = node.get<std::string>();
        if (mode != "paper") {
          throw Error(ErrorKind::kParse, "schedule string must be \"paper\"");
        }
        sched.kind = ScheduleSpec::Kind::kPaper;
      } else {
        const auto mode = node.value("mode", std::string("user"));
        if (mode == "paper") {
          sched.kind = ScheduleSpec::Kind::kPaper;
        } else if (mode == "exponent") {
          sched.kind = ScheduleSpec::Kind::kExponent;
        } else if (mode != "user") {
          throw Error(ErrorKind::kParse, "unknown schedule mode '" + mode + "'");
        }
        sched.s = node.value("s", sched.s);
        sched.t = node.value("t", sched.t);
        sched.delta = node.value("delta", sched.delta);
        sched.k = node.value("k", sched.k);
        sched.exponent_base = node.value("base", sched.exponent_base);
        if (node.contains("bins")) {
          const json& bins = node.at("bins");
          if (bins.is_string()) {
            if (bins.get<std::string>() != "geometric") {
              throw Error(ErrorKind::kParse, "bins string must be \"geometric\"");
            }
            sched.geometric_bins =
                node.value("bin_count", static_cast<std::size_t>(std::ceil(2.0 / sched.delta)));
          } else {
            for (const auto& pair : bins) {
              sched.bins.push_back({pair.at(0).get<double>(), pair.at(1).get<double>()});
            }
          }
        }
      }
    }
    if (root.contains("caps")) {
      const json& caps = root.at("caps");
      config.caps.enumerate_n = caps.value("enumerate_n", config.caps.enumerate_n);
      config.caps.minhit_n = caps.value("minhit_n", config.caps.minhit_n);
      config.caps.minhit_sets = caps.value("minhit_sets", config.caps.minhit_sets);
      config.caps.pattern = caps.value("pattern", config.caps.pattern);
    }
    if (root.contains("options")) {
      const json& opt = root.at("options");
      config.options.low_degree_shortcut =
          opt.value("low_degree_shortcut", config.options.low_degree_shortcut);
      config.options.kernel_route = opt.value("kernel_route", config.options.kernel_route);
      config.options.trivial_fallback =
          opt.value("trivial_fallback", config.options.trivial_fallback);
    }
    config.record_timing = root.value("timing", false);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::kParse, std::string("experiment config: ") + e.what());
  }
  return config;
}

namespace {

struct Cell {
  const FamilySpec* family;
  std::size_t n;
  std::uint64_t seed;
};

ExperimentRecord RunCell(const ExperimentConfig& config, const Cell& cell) {
  using Clock = std::chrono::steady_clock;
  ExperimentRecord rec;
  rec.family = cell.family->Label();
  rec.seed = cell.seed;

  auto start = Clock::now();
  Graph g;
  try {
    g = cell.family->Generate(cell.n, cell.seed);
  } catch (const Error& e) {
    rec.n = cell.n;
    rec.error = std::string(ErrorKindName(e.kind())) + ": " + e.what();
    return rec;
  }
  rec.runtime_ms.generate = MillisSince(start);
  rec.n = g.n();
  if (g.n() == 0) {
    rec.error = "precondition: empty graph";
    return rec;
  }
  rec.t_trivial = MinDegreeVertex(g).degree + 1;
  rec.alpha = AlphaWithWitness(g).size;

  try {
    start = Clock::now();
    if (g.n() <= config.caps.minhit_n && g.n() <= config.caps.enumerate_n) {
      const MisFamily family = EnumerateMis(g, config.caps.enumerate_n);
      if (family.sets.size() <= config.caps.minhit_sets) {
        rec.h_exact = MinHittingSet(family).size;
      }
    }
    rec.runtime_ms.exact = MillisSince(start);

    const ScheduleSpec& spec = config.schedule;
    start = Clock::now();
    if (auto witness = FindInducedKst(g, spec.s, spec.t, config.caps.pattern)) {
      rec.error = "freeness-violation: induced K_{s,t} " + witness->ToString();
      return rec;
    }
    rec.runtime_ms.freeness = MillisSince(start);

    start = Clock::now();
    const ParamSchedule sched = spec.Build(g.n());
    const HittingCertificate cert = ConstructBetHittingSet(g, sched, cell.seed, config.options);
    rec.runtime_ms.construct = MillisSince(start);

    start = Clock::now();
    const bool hits = g.n() <= config.caps.enumerate_n
                          ? VerifyHittingSet(g, cert.T, config.caps.enumerate_n)
                          : HitsAllMaximum(g, cert.T);
    rec.runtime_ms.verify = MillisSince(start);
    if (!hits) {
      throw VerificationFailure("certificate for " + rec.family + " n=" +
                                    std::to_string(g.n()) + " seed=" +
                                    std::to_string(cell.seed) + " does not hit every MIS",
                                FormatCertificate(cert));
    }
    rec.mode = cert.mode;
    rec.t_bet = cert.T.size();
    if (cert.mode == CertificateMode::kBetConstruction) {
      rec.e_observed = cert.e_observed;
      rec.size_audit = SizeBoundCheck(cert, sched, cert.e_observed);
    }
  } catch (const VerificationFailure&) {
    throw;
  } catch (const Error& e) {
    rec.error = std::string(ErrorKindName(e.kind())) + ": " + e.what();
  }
  return rec;
}

}  // namespace

std::vector<ExperimentRecord> RunExperiment(const ExperimentConfig& config,
                                            std::size_t workers) {
  std::vector<Cell> cells;
  for (const auto& family : config.families) {
    if (family.FixedSize()) {
      std::size_t n = 0;
      for (std::size_t s : family.sizes) n += s;
      for (std::uint64_t seed : config.seeds) cells.push_back({&family, n, seed});
      continue;
    }
    for (std::size_t n : config.n_values) {
      for (std::uint64_t seed : config.seeds) cells.push_back({&family, n, seed});
    }
  }
  std::vector<ExperimentRecord> records(cells.size());
  ParallelFor(
      cells.size(), [&](std::size_t i) { records[i] = RunCell(config, cells[i]); }, workers);
  return records;
}

std::string FormatCsv(const std::vector<ExperimentRecord>& records, bool record_timing) {
  std::ostringstream out;
  out << kCsvHeader << '\n';
  const auto opt = [](const std::optional<std::size_t>& v) {
    return v ? std::to_string(*v) : std::string();
  };
  for (const auto& r : records) {
    out << kCsvSchemaVersion << ',' << r.family << ',' << r.n << ',' << r.seed << ','
        << r.alpha << ',' << opt(r.h_exact) << ',' << opt(r.t_bet) << ',' << r.t_trivial
        << ',' << opt(r.e_observed) << ',';
    if (record_timing) {
      char buf[32];
      std::snprintf(buf, sizeof(buf), "%.3f", r.runtime_ms.Total());
      out << buf;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace hitlab
