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
#include <string_view>
#include <vector>

#include "hitlab/graph.hpp"
#include "hitlab/hitting.hpp"
#include "hitlab/parallel.hpp"
#include "hitlab/schedule.hpp"

namespace hitlab {

inline constexpr std::string_view kCsvSchemaVersion = "1";
inline constexpr std::string_view kCsvHeader =
    "schema,family,n,seed,alpha,h_exact,t_bet,t_trivial,e_observed,runtime_ms";

// One generator family of the sweep. Families with explicit clique sizes
// fix n themselves and ignore n_values.
struct FamilySpec {
  std::string name;  // gnp, cluster, cluster_random, c4free, chordal, path, cycle
  double p = 0.5;
  std::vector<std::size_t> sizes;
  std::size_t size_min = 2;
  std::size_t size_max = 6;
  // Edge target for c4free; nullopt means run to saturation.
  std::optional<std::size_t> m;
  double density = 0.5;

  std::string Label() const;
  bool FixedSize() const { return name == "cluster"; }
  Graph Generate(std::size_t n, std::uint64_t seed) const;
};

struct ScheduleSpec {
  enum class Kind { kUser, kPaper, kExponent } kind = Kind::kUser;
  std::size_t s = 1;
  std::size_t t = 2;
  double delta = 0.5;
  std::uint64_t k = 1;
  // Explicit windows; empty with geometric_bins > 0 means
  // GeometricBins(1, n + 1, geometric_bins).
  std::vector<ThresholdPair> bins;
  std::size_t geometric_bins = 0;
  double exponent_base = 0.0;

  ParamSchedule Build(std::size_t n) const;
};

struct ExperimentCaps {
  std::size_t enumerate_n = kDefaultEnumerationCap;
  // Exact h(G) only when n and the family size stay below these.
  std::size_t minhit_n = 30;
  std::size_t minhit_sets = 20000;
  std::size_t pattern = kDefaultPatternCap;
};

struct ExperimentConfig {
  std::vector<FamilySpec> families;
  std::vector<std::size_t> n_values;
  std::vector<std::uint64_t> seeds;
  ScheduleSpec schedule;
  ExperimentCaps caps;
  ConstructionOptions options;
  // Wall-clock columns break byte-identical output, so they are opt-in.
  bool record_timing = false;
};

// Throws kParse on malformed JSON or unknown fields' types.
ExperimentConfig ParseExperimentConfig(std::string_view json_text);

struct StageTimes {
  double generate = 0.0;
  double freeness = 0.0;
  double construct = 0.0;
  double verify = 0.0;
  double exact = 0.0;

  double Total() const { return generate + freeness + construct + verify + exact; }
};

struct ExperimentRecord {
  std::string family;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::size_t alpha = 0;
  std::optional<std::size_t> h_exact;
  std::optional<std::size_t> t_bet;
  std::size_t t_trivial = 0;
  std::optional<std::size_t> e_observed;
  StageTimes runtime_ms;
  std::optional<CertificateMode> mode;
  std::optional<bool> size_audit;
  // "<kind>: message" for cells that could not be constructed.
  std::string error;
};

// Raised when a produced certificate fails verification; carries the
// serialized certificate.
class VerificationFailure : public Error {
 public:
  VerificationFailure(const std::string& what, std::string certificate)
      : Error(ErrorKind::kVerification, what), certificate_(std::move(certificate)) {}
  const std::string& certificate() const { return certificate_; }

 private:
  std::string certificate_;
};

// Runs every (family, n, seed) cell. Cells are independent and may run on
// `workers` threads; records come back in cell order.
std::vector<ExperimentRecord> RunExperiment(const ExperimentConfig& config,
                                            std::size_t workers = WorkerCount());

std::string FormatCsv(const std::vector<ExperimentRecord>& records, bool record_timing);

}  // namespace hitlab
