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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hitlab/certificate.hpp"
#include "hitlab/drc.hpp"
#include "hitlab/experiment.hpp"
#include "hitlab/generators.hpp"
#include "hitlab/graph.hpp"
#include "hitlab/hitting.hpp"
#include "hitlab/mis.hpp"
#include "hitlab/probability.hpp"
#include "hitlab/schedule.hpp"

namespace py = pybind11;
using namespace hitlab;

namespace {

using Ids = std::vector<Vertex>;

VertexSet ToSet(const Graph& g, const Ids& ids) { return VertexSet(g.n(), std::span<const Vertex>(ids)); }

ParamSchedule MakeSchedule(std::size_t s, std::size_t t, double delta, std::uint64_t k,
                           const std::vector<std::pair<double, double>>& bins) {
  std::vector<ThresholdPair> pairs;
  for (const auto& [lo, hi] : bins) pairs.push_back({lo, hi});
  return UserSchedule(s, t, delta, k, pairs);
}

py::dict CertificateDict(const HittingCertificate& c) {
  py::dict d;
  d["mode"] = CertificateModeName(c.mode);
  d["seed"] = c.seed;
  d["k"] = c.k;
  d["bin_index"] = c.bin_index;
  d["T"] = c.T.members();
  d["I"] = c.I.members();
  d["S_j"] = c.S_j.members();
  d["I_j"] = c.I_j.members();
  d["K"] = c.K.members();
  d["H"] = c.H.members();
  d["NH"] = c.NH.members();
  d["e_observed"] = c.e_observed;
  d["text"] = FormatCertificate(c);
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Hitting sets for maximum independent sets";

  py::register_exception<Error>(m, "HitlabError", PyExc_RuntimeError);

  py::class_<Graph>(m, "Graph")
      .def(py::init([](std::size_t n, const std::vector<Edge>& edges) {
             return Graph(n, edges);
           }),
           py::arg("n"), py::arg("edges"))
      .def_property_readonly("n", &Graph::n)
      .def_property_readonly("m", &Graph::m)
      .def("edges", &Graph::edges)
      .def("neighbors", [](const Graph& g, Vertex v) { return g.neighbors(v).members(); })
      .def("adjacent", &Graph::adjacent)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "<hitlab.Graph n=" + std::to_string(g.n()) + " m=" + std::to_string(g.m()) + ">";
      });

  m.def("complement", &Complement);
  m.def("gnp", &GenGnp, py::arg("n"), py::arg("p"), py::arg("seed"));
  m.def("cluster", [](const std::vector<std::size_t>& sizes) { return GenCluster(sizes); });
  m.def("c4_free_process", &GenC4FreeProcess, py::arg("n"), py::arg("target_m"), py::arg("seed"));
  m.def("path", &GenPath);
  m.def("cycle", &GenCycle);
  m.def("complete", &GenComplete);
  m.def("petersen", &GenPetersen);

  m.def("find_induced_kst",
        [](const Graph& g, std::size_t s, std::size_t t) -> std::optional<std::pair<Ids, Ids>> {
          auto w = FindInducedKst(g, s, t);
          if (!w) return std::nullopt;
          return std::make_pair(w->side_a, w->side_b);
        },
        py::arg("g"), py::arg("s"), py::arg("t"));

  m.def("alpha", [](const Graph& g) {
    const MisResult r = AlphaWithWitness(g);
    return std::make_pair(r.size, r.witness.members());
  });
  m.def("enumerate_mis", [](const Graph& g) {
    std::vector<Ids> out;
    for (const auto& s : EnumerateMis(g).sets) out.push_back(s.members());
    return out;
  });
  m.def("kernel", [](const Graph& g) { return Kernel(g).members(); });

  m.def("construct_hitting_set",
        [](const Graph& g, std::size_t s, std::size_t t, double delta, std::uint64_t k,
           const std::vector<std::pair<double, double>>& bins, std::uint64_t seed,
           bool shortcut) {
          ConstructionOptions o;
          o.low_degree_shortcut = shortcut;
          return CertificateDict(ConstructBetHittingSet(g, MakeSchedule(s, t, delta, k, bins), seed, o));
        },
        py::arg("g"), py::arg("s"), py::arg("t"), py::arg("delta"), py::arg("k"),
        py::arg("bins"), py::arg("seed") = 0, py::arg("shortcut") = true);
  m.def("audit_certificate", [](const Graph& g, const std::string& text) {
    return AuditCertificate(g, ParseCertificate(text));
  });
  m.def("verify_hitting_set",
        [](const Graph& g, const Ids& T) { return VerifyHittingSet(g, ToSet(g, T)); });
  m.def("min_hitting_set", [](const Graph& g) {
    const MinHittingResult r = MinHittingSet(g);
    return std::make_pair(r.size, r.witness.members());
  });
  m.def("sample_hitting_set",
        [](const Graph& g, std::size_t p, std::uint64_t seed, std::size_t trials) {
          const SamplingResult r = SampleHittingSet(g, p, seed, trials);
          py::dict d;
          d["fail_rate"] = r.fail_rate;
          d["union_bound"] = r.union_bound;
          d["family_size"] = r.family_size;
          d["alpha"] = r.alpha;
          d["first_success"] =
              r.first_success ? py::cast(r.first_success->members()) : py::none();
          return d;
        },
        py::arg("g"), py::arg("p"), py::arg("seed"), py::arg("trials"));

  m.def("budget", &Budget, py::arg("n"), py::arg("c"), py::arg("delta"), py::arg("k"),
        py::arg("s"), py::arg("t"));
  m.def("paper_schedule_feasible",
        [](std::size_t n, std::size_t s, std::size_t t, double delta) {
          return PaperSchedule(n, s, t, delta).feasible;
        });
  m.def("prob_low_intersection",
        [](std::size_t i_size, std::size_t d, std::uint64_t k, std::size_t s) {
          const LowIntersection r = ProbLowIntersection(i_size, d, k, s);
          return std::make_pair(r.exact, r.paper_form);
        });

  m.def("drc_clique", [](const Graph& g, double alpha_density) {
    const DrcTrace tr = DrcClique(g, alpha_density);
    py::dict d;
    d["branch"] = tr.branch == DrcBranch::kCodegree ? "codegree" : "neighborhood";
    d["clique"] = tr.clique.members();
    d["U"] = tr.U.members();
    d["matching"] = tr.matching;
    d["text"] = FormatDrcTrace(tr);
    return d;
  });

  m.def("run_experiment", [](const std::string& config_json) {
    const ExperimentConfig config = ParseExperimentConfig(config_json);
    return FormatCsv(RunExperiment(config), config.record_timing);
  });
}
