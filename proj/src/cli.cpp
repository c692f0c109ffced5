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

#include "hitlab/cli.hpp"

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "hitlab/certificate.hpp"
#include "hitlab/drc.hpp"
#include "hitlab/experiment.hpp"
#include "hitlab/generators.hpp"
#include "hitlab/graph_io.hpp"
#include "hitlab/hitting.hpp"
#include "hitlab/mis.hpp"
#include "hitlab/schedule.hpp"

namespace hitlab {

namespace {

int ExitFor(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kParse:
    case ErrorKind::kRange:
    case ErrorKind::kSelfLoop:
    case ErrorKind::kIo:
      return kExitUsage;
    case ErrorKind::kPrecondition:
    case ErrorKind::kFreenessViolation:
    case ErrorKind::kCapExceeded:
      return kExitPrecondition;
    case ErrorKind::kInfeasible:
      return kExitInfeasible;
    case ErrorKind::kVerification:
      return kExitVerification;
  }
  return kExitUsage;
}

std::string ReadText(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIo, "cannot open '" + path + "' for reading");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void WriteText(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::kIo, "cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw Error(ErrorKind::kIo, "write to '" + path + "' failed");
}

VertexSet ParseIdList(const std::string& text, std::size_t n) {
  VertexSet out(n);
  std::istringstream in(text);
  std::string token;
  while (in >> token) {
    for (char& ch : token) {
      if (ch == ',') ch = ' ';
    }
    std::istringstream parts(token);
    long long v;
    while (parts >> v) {
      if (v < 0 || static_cast<std::size_t>(v) >= n) {
        throw Error(ErrorKind::kRange, "vertex " + std::to_string(v) + " out of range");
      }
      out.insert(static_cast<Vertex>(v));
    }
  }
  return out;
}

struct GraphFlags {
  std::string path;
  std::string format = "edge-list";

  void Add(CLI::App* app) {
    app->add_option("--graph", path, "Input graph file")->required();
    app->add_option("--format", format, "edge-list or dimacs")
        ->check(CLI::IsMember({"edge-list", "dimacs"}));
  }
  Graph Load() const { return ReadGraph(path, ParseGraphFormat(format)); }
};

struct ScheduleFlags {
  std::size_t s = 1;
  std::size_t t = 2;
  double delta = 0.5;
  std::uint64_t k = 0;
  std::vector<std::string> theta;
  std::string mode = "user";
  double base = 0.0;
  bool no_shortcut = false;
  bool no_kernel_route = false;
  bool trivial_fallback = false;

  void Add(CLI::App* app) {
    app->add_option("--s", s, "Side A size of the forbidden K_{s,t}")->check(CLI::PositiveNumber);
    app->add_option("--t", t, "Side B size of the forbidden K_{s,t}")->check(CLI::PositiveNumber);
    app->add_option("--delta", delta, "Target fraction delta in (0,1)");
    app->add_option("--k", k, "Sample size |I_j| for user schedules");
    app->add_option("--theta", theta, "Degree window lo:hi (repeatable, highest first)");
    app->add_option("--schedule", mode, "user, paper or exponent")
        ->check(CLI::IsMember({"user", "paper", "exponent"}));
    app->add_option("--base", base, "Exponent base for --schedule exponent");
    app->add_flag("--no-shortcut", no_shortcut, "Disable the low-degree shortcut");
    app->add_flag("--no-kernel-route", no_kernel_route, "Disable the alpha > n/2 kernel route");
    app->add_flag("--trivial-fallback", trivial_fallback,
                  "Return T = V instead of failing when H cannot fit in I");
  }

  ParamSchedule Build(std::size_t n) const {
    if (mode == "paper") return PaperSchedule(n, s, t, delta);
    if (mode == "exponent") return ExponentSchedule(n, s, t, delta, base);
    if (theta.empty()) {
      throw Error(ErrorKind::kParse, "user schedules need at least one --theta lo:hi");
    }
    std::vector<ThresholdPair> bins;
    for (const auto& spec : theta) {
      const auto colon = spec.find(':');
      if (colon == std::string::npos) {
        throw Error(ErrorKind::kParse, "--theta expects lo:hi, got '" + spec + "'");
      }
      bins.push_back({ParseReal(spec.substr(0, colon)), ParseReal(spec.substr(colon + 1))});
    }
    return UserSchedule(s, t, delta, k, bins);
  }

  ConstructionOptions Options() const {
    ConstructionOptions options;
    options.low_degree_shortcut = !no_shortcut;
    options.kernel_route = !no_kernel_route;
    options.trivial_fallback = trivial_fallback;
    return options;
  }
};

std::string ScheduleReport(const ParamSchedule& sched, std::size_t n) {
  std::ostringstream out;
  out << "n: " << n << '\n'
      << "s: " << sched.s << '\n'
      << "t: " << sched.t << '\n'
      << "delta: " << FormatReal(sched.delta) << '\n'
      << "mode: " << (sched.paper_mode ? "paper" : sched.exponent_base > 0 ? "exponent" : "user")
      << '\n';
  if (sched.exponent_base > 0) out << "base: " << FormatReal(sched.exponent_base) << '\n';
  out << "bins: " << sched.bins.size() << '\n'
      << "feasible: " << (sched.feasible ? "true" : "false") << '\n';
  for (std::size_t j = 0; j < sched.bins.size(); ++j) {
    const DegreeBin& b = sched.bins[j];
    out << "bin " << j + 1 << ": log_theta_lo=" << FormatReal(b.log_theta_lo)
        << " log_theta_hi=" << FormatReal(b.log_theta_hi) << " log_k=" << FormatReal(b.log_k)
        << " k=" << b.k << '\n';
  }
  return out.str();
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"hitlab: hitting sets for maximum independent sets"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a graph");
  std::string family;
  std::size_t gen_n = 0;
  double gen_p = 0.5;
  std::vector<std::size_t> gen_sizes;
  std::optional<std::size_t> gen_m;
  double gen_density = 0.5;
  std::uint64_t seed = 0;
  std::string out_path;
  std::string gen_format = "edge-list";
  gen->add_option("--family", family,
                  "gnp, cluster, c4free, chordal, path, cycle, complete, empty, star, petersen")
      ->required();
  gen->add_option("--n", gen_n, "Vertex count");
  gen->add_option("--p", gen_p, "Edge probability (gnp)");
  gen->add_option("--sizes", gen_sizes, "Clique sizes (cluster)")->delimiter(',');
  gen->add_option("--m", gen_m, "Edge target (c4free)");
  gen->add_option("--density", gen_density, "Attachment density (chordal)");
  gen->add_option("--seed", seed, "Random seed");
  gen->add_option("--out", out_path, "Output path (default stdout)");
  gen->add_option("--format", gen_format, "edge-list or dimacs")
      ->check(CLI::IsMember({"edge-list", "dimacs"}));

  // check-free
  auto* check = app.add_subcommand("check-free", "Search for an induced K_{s,t}");
  GraphFlags check_graph;
  check_graph.Add(check);
  std::size_t check_s = 1, check_t = 1, pattern_cap = kDefaultPatternCap;
  check->add_option("--s", check_s)->required();
  check->add_option("--t", check_t)->required();
  check->add_option("--cap", pattern_cap, "Maximum s + t");

  // mis
  auto* mis = app.add_subcommand("mis", "Independence number, all maximum sets, or kernel");
  GraphFlags mis_graph;
  mis_graph.Add(mis);
  std::string mis_mode = "alpha";
  std::size_t cap = kDefaultEnumerationCap;
  mis->add_option("--mode", mis_mode, "alpha, enumerate or kernel")
      ->check(CLI::IsMember({"alpha", "enumerate", "kernel"}));
  mis->add_option("--cap", cap, "Enumeration cap on n");

  // hit
  auto* hit = app.add_subcommand("hit", "Construct a hitting set and print its certificate");
  GraphFlags hit_graph;
  hit_graph.Add(hit);
  ScheduleFlags hit_sched;
  hit_sched.Add(hit);
  bool hit_audit = false;
  hit->add_option("--seed", seed, "Sampling seed");
  hit->add_option("--out", out_path, "Also write the certificate here");
  hit->add_flag("--audit", hit_audit, "Audit the certificate before printing");

  // verify
  auto* verify = app.add_subcommand("verify", "Check that a set or certificate hits every MIS");
  GraphFlags verify_graph;
  verify_graph.Add(verify);
  ScheduleFlags verify_sched;
  verify_sched.Add(verify);
  std::string set_text, cert_path;
  bool replay = false;
  auto* set_opt = verify->add_option("--set", set_text, "Vertex ids, space or comma separated");
  verify->add_option("--cert", cert_path, "Certificate file")->excludes(set_opt);
  verify->add_flag("--replay", replay, "Rebuild the certificate from the schedule flags");
  verify->add_option("--cap", cap, "Enumeration cap on n");

  // minhit
  auto* minhit = app.add_subcommand("minhit", "Exact minimum hitting set size h(G)");
  GraphFlags minhit_graph;
  minhit_graph.Add(minhit);
  bool show_witness = false;
  minhit->add_option("--cap", cap, "Enumeration cap on n");
  minhit->add_flag("--witness", show_witness, "Also print the lexicographically least witness");

  // sample-hit
  auto* sample = app.add_subcommand("sample-hit", "Random p-subsets as hitting sets");
  GraphFlags sample_graph;
  sample_graph.Add(sample);
  std::size_t sample_p = 0, trials = 1000;
  sample->add_option("--p", sample_p, "Sample size")->required();
  sample->add_option("--seed", seed, "Master seed");
  sample->add_option("--trials", trials, "Number of draws");
  sample->add_option("--cap", cap, "Enumeration cap on n");

  // drc
  auto* drc = app.add_subcommand("drc", "Large clique in a dense induced-C4-free graph");
  GraphFlags drc_graph;
  drc_graph.Add(drc);
  std::optional<double> drc_alpha;
  std::string beta_rule = "quadratic";
  drc->add_option("--alpha", drc_alpha, "Edge density floor (default: actual density)");
  drc->add_option("--beta-rule", beta_rule, "quadratic or holmsen")
      ->check(CLI::IsMember({"quadratic", "holmsen"}));

  // schedule
  auto* schedule = app.add_subcommand("schedule", "Report the asymptotic parameter schedule");
  std::size_t sched_n = 0, sched_s = 1, sched_t = 2;
  double sched_delta = 0.5, sched_base = 0.0;
  schedule->add_option("--n", sched_n)->required();
  schedule->add_option("--s", sched_s);
  schedule->add_option("--t", sched_t);
  schedule->add_option("--delta", sched_delta);
  schedule->add_option("--base", sched_base, "Exponent base (default 10s)");

  // experiment
  auto* experiment = app.add_subcommand("experiment", "Run a JSON-configured sweep, emit CSV");
  std::string config_path;
  experiment->add_option("--config", config_path, "Config JSON")->required();
  experiment->add_option("--out", out_path, "CSV path (default stdout)");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error:usage: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (gen->parsed()) {
      Graph g;
      if (family == "gnp") g = GenGnp(gen_n, gen_p, seed);
      else if (family == "cluster") g = GenCluster(gen_sizes);
      else if (family == "c4free") g = GenC4FreeProcess(gen_n, gen_m.value_or(gen_n * (gen_n - (gen_n > 0)) / 2), seed);
      else if (family == "chordal") g = GenChordal(gen_n, gen_density, seed);
      else if (family == "path") g = GenPath(gen_n);
      else if (family == "cycle") g = GenCycle(gen_n);
      else if (family == "complete") g = GenComplete(gen_n);
      else if (family == "empty") g = GenEmpty(gen_n);
      else if (family == "star") g = GenStar(gen_n == 0 ? 0 : gen_n - 1);
      else if (family == "petersen") g = GenPetersen();
      else throw Error(ErrorKind::kParse, "unknown family '" + family + "'");
      const std::string text = FormatGraph(g, ParseGraphFormat(gen_format));
      if (out_path.empty()) out << text;
      else WriteText(out_path, text);
      return kExitOk;
    }

    if (check->parsed()) {
      const Graph g = check_graph.Load();
      if (auto w = FindInducedKst(g, check_s, check_t, pattern_cap)) {
        out << "witness: " << w->ToString() << '\n';
        err << "error:freeness-violation: graph contains an induced K_{" << check_s << ','
            << check_t << "}\n";
        return kExitPrecondition;
      }
      out << "free\n";
      return kExitOk;
    }

    if (mis->parsed()) {
      const Graph g = mis_graph.Load();
      if (mis_mode == "alpha") {
        const MisResult r = AlphaWithWitness(g);
        out << "alpha: " << r.size << "\nwitness: " << r.witness.ToString() << '\n';
      } else if (mis_mode == "enumerate") {
        const MisFamily fam = EnumerateMis(g, cap);
        out << "alpha: " << fam.alpha << "\ncount: " << fam.sets.size() << '\n';
        for (const auto& s : fam.sets) out << s.ToString() << '\n';
      } else {
        out << "kernel: " << Kernel(g, cap).ToString() << '\n';
      }
      return kExitOk;
    }

    if (hit->parsed()) {
      const Graph g = hit_graph.Load();
      const ParamSchedule sched = hit_sched.Build(g.n());
      if (!sched.feasible) {
        out << ScheduleReport(sched, g.n());
        err << "error:infeasible-parameters: schedule is infeasible at n = " << g.n() << '\n';
        return kExitInfeasible;
      }
      const HittingCertificate cert = ConstructBetHittingSet(g, sched, seed, hit_sched.Options());
      const std::string text = FormatCertificate(cert);
      if (hit_audit) {
        const auto problems = AuditCertificate(g, cert);
        if (!problems.empty()) {
          out << text;
          for (const auto& p : problems) err << "error:verification: " << p << '\n';
          return kExitVerification;
        }
      }
      out << text;
      if (!out_path.empty()) WriteText(out_path, text);
      return kExitOk;
    }

    if (verify->parsed()) {
      const Graph g = verify_graph.Load();
      if (!cert_path.empty()) {
        const HittingCertificate cert = ParseCertificate(ReadText(cert_path));
        auto problems = AuditCertificate(g, cert, cap);
        if (replay && !ReplayMatches(g, verify_sched.Build(g.n()), cert, verify_sched.Options())) {
          problems.push_back("replay with the given schedule and seed differs");
        }
        if (!problems.empty()) {
          out << "false\n";
          for (const auto& p : problems) err << "error:verification: " << p << '\n';
          return kExitVerification;
        }
        out << "true\n";
        return kExitOk;
      }
      const VertexSet T = ParseIdList(set_text, g.n());
      if (VerifyHittingSet(g, T, cap)) {
        out << "true\n";
        return kExitOk;
      }
      out << "false\n";
      err << "error:verification: set misses some maximum independent set\n";
      return kExitVerification;
    }

    if (minhit->parsed()) {
      const MinHittingResult r = MinHittingSet(minhit_graph.Load(), cap);
      out << r.size << '\n';
      if (show_witness) out << "witness: " << r.witness.ToString() << '\n';
      return kExitOk;
    }

    if (sample->parsed()) {
      const SamplingResult r = SampleHittingSet(sample_graph.Load(), sample_p, seed, trials, cap);
      out << "trials: " << r.trials << '\n'
          << "failures: " << r.failures << '\n'
          << "fail_rate: " << FormatReal(r.fail_rate) << '\n'
          << "union_bound: " << FormatReal(r.union_bound) << '\n'
          << "family_size: " << r.family_size << '\n'
          << "alpha: " << r.alpha << '\n';
      if (r.first_success) {
        out << "first_success_trial: " << r.first_success_trial << '\n'
            << "first_success: " << r.first_success->ToString() << '\n';
      } else {
        out << "first_success: none\n";
      }
      return kExitOk;
    }

    if (drc->parsed()) {
      const Graph g = drc_graph.Load();
      const double pairs = static_cast<double>(g.n()) * static_cast<double>(g.n() - (g.n() > 0)) / 2.0;
      const double density = drc_alpha.value_or(pairs > 0 ? static_cast<double>(g.m()) / pairs : 1.0);
      const DrcTrace trace = DrcClique(
          g, density, beta_rule == "holmsen" ? BetaRule::kHolmsen : BetaRule::kQuadratic);
      out << FormatDrcTrace(trace);
      return kExitOk;
    }

    if (schedule->parsed()) {
      const double base = sched_base > 0.0 ? sched_base : 10.0 * static_cast<double>(sched_s);
      ParamSchedule sched = ExponentSchedule(sched_n, sched_s, sched_t, sched_delta, base);
      sched.paper_mode = sched_base <= 0.0;
      out << ScheduleReport(sched, sched_n);
      return kExitOk;
    }

    if (experiment->parsed()) {
      const ExperimentConfig config = ParseExperimentConfig(ReadText(config_path));
      std::vector<ExperimentRecord> records;
      try {
        records = RunExperiment(config);
      } catch (const VerificationFailure& e) {
        err << "error:verification: " << e.what() << '\n' << e.certificate();
        return kExitVerification;
      }
      for (std::size_t i = 0; i < records.size(); ++i) {
        if (!records[i].error.empty()) {
          err << "warning:cell:" << i << ": " << records[i].error << '\n';
        }
      }
      const std::string csv = FormatCsv(records, config.record_timing);
      if (out_path.empty()) out << csv;
      else WriteText(out_path, csv);
      return kExitOk;
    }
  } catch (const FreenessViolation& e) {
    out << "witness: " << e.witness().ToString() << '\n';
    err << "error:" << ErrorKindName(e.kind()) << ": " << e.what() << '\n';
    return ExitFor(e.kind());
  } catch (const Error& e) {
    err << "error:" << ErrorKindName(e.kind()) << ": " << e.what() << '\n';
    return ExitFor(e.kind());
  }
  return kExitUsage;
}

}  // namespace hitlab
