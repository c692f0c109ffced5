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

#include <string>
#include <string_view>
#include <vector>

#include "hitlab/graph.hpp"
#include "hitlab/hitting.hpp"
#include "hitlab/schedule.hpp"

namespace hitlab {

// Line-oriented "key: value" record. Vertex sets are sorted id lists and
// reals use 17 significant digits, so formatting is byte-stable and parsing
// restores the exact values.
std::string FormatCertificate(const HittingCertificate& cert);
HittingCertificate ParseCertificate(std::string_view text);

// Re-derives every structural claim of `cert` from g alone and returns one
// message per broken claim (empty when the certificate is sound). Hitting
// of T is checked against the enumerated family when n <= cap and through
// the alpha route otherwise.
std::vector<std::string> AuditCertificate(const Graph& g, const HittingCertificate& cert,
                                          std::size_t cap = kDefaultEnumerationCap);

// Reruns the construction with (g, sched, cert.seed) and compares the
// formatted records byte for byte.
bool ReplayMatches(const Graph& g, const ParamSchedule& sched,
                   const HittingCertificate& cert,
                   const ConstructionOptions& options = {});

// Shared %.17g formatting for reals in text records.
std::string FormatReal(double x);
double ParseReal(std::string_view token);

}  // namespace hitlab
