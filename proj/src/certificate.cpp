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

#include "hitlab/certificate.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <sstream>
#include <string>

namespace hitlab {

std::string FormatReal(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

double ParseReal(std::string_view token) {
  const std::string copy(token);
  char* end = nullptr;
  const double value = std::strtod(copy.c_str(), &end);
  if (copy.empty() || end != copy.c_str() + copy.size()) {
    throw Error(ErrorKind::kParse, "expected a real number, got '" + copy + "'");
  }
  return value;
}

namespace {

constexpr std::string_view kMagic = "hitlab-certificate";

std::uint64_t ParseUnsigned(std::string_view token, std::string_view key) {
  std::uint64_t value = 0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end || token.empty()) {
    throw Error(ErrorKind::kParse, "field '" + std::string(key) +
                                       "' expects an unsigned integer, got '" +
                                       std::string(token) + "'");
  }
  return value;
}

std::vector<std::string_view> Split(std::string_view value) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < value.size()) {
    while (i < value.size() && value[i] == ' ') ++i;
    std::size_t j = i;
    while (j < value.size() && value[j] != ' ') ++j;
    if (j > i) out.push_back(value.substr(i, j - i));
    i = j;
  }
  return out;
}

VertexSet ParseSet(std::string_view value, std::size_t n, std::string_view key) {
  VertexSet out(n);
  for (auto token : Split(value)) {
    const auto v = ParseUnsigned(token, key);
    if (v >= n) {
      throw Error(ErrorKind::kRange, "field '" + std::string(key) + "' lists vertex " +
                                         std::to_string(v) + " >= n");
    }
    out.insert(static_cast<Vertex>(v));
  }
  return out;
}

void Line(std::ostringstream& out, std::string_view key, const std::string& value) {
  out << key << ':';
  if (!value.empty()) out << ' ' << value;
  out << '\n';
}

}  // namespace

std::string FormatCertificate(const HittingCertificate& cert) {
  std::ostringstream out;
  Line(out, kMagic, "1");
  Line(out, "mode", CertificateModeName(cert.mode));
  Line(out, "n", std::to_string(cert.n));
  Line(out, "seed", std::to_string(cert.seed));
  Line(out, "s", std::to_string(cert.s));
  Line(out, "t", std::to_string(cert.t));
  Line(out, "delta", FormatReal(cert.delta));
  Line(out, "k", std::to_string(cert.k));
  Line(out, "anchor", cert.anchor ? std::to_string(*cert.anchor) : "");
  Line(out, "bin_index", std::to_string(cert.bin_index));
  if (cert.bin) {
    const DegreeBin& b = *cert.bin;
    Line(out, "bin_theta", FormatReal(b.theta_lo) + " " + FormatReal(b.theta_hi));
    Line(out, "bin_log_theta", FormatReal(b.log_theta_lo) + " " + FormatReal(b.log_theta_hi));
    Line(out, "bin_log_k", FormatReal(b.log_k));
    if (b.log_exponent_lo && b.log_exponent_hi) {
      Line(out, "bin_log_exponent",
           FormatReal(*b.log_exponent_lo) + " " + FormatReal(*b.log_exponent_hi));
    }
  }
  Line(out, "T", cert.T.ToString());
  Line(out, "I", cert.I.ToString());
  Line(out, "S_j", cert.S_j.ToString());
  Line(out, "I_j", cert.I_j.ToString());
  Line(out, "K", cert.K.ToString());
  Line(out, "H", cert.H.ToString());
  Line(out, "NH", cert.NH.ToString());
  const auto& acc = cert.size_accounting;
  Line(out, "size_accounting", std::to_string(acc.h) + " " + std::to_string(acc.nh) + " " +
                                   std::to_string(acc.s_j));
  Line(out, "e_observed", std::to_string(cert.e_observed));
  return out.str();
}

HittingCertificate ParseCertificate(std::string_view text) {
  std::map<std::string, std::string, std::less<>> fields;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (raw.empty()) continue;
    const auto colon = raw.find(':');
    if (colon == std::string::npos) {
      throw Error(ErrorKind::kParse, "line " + std::to_string(line_no) + ": missing ':'");
    }
    std::string value = raw.substr(colon + 1);
    if (!value.empty() && value.front() == ' ') value.erase(0, 1);
    fields[raw.substr(0, colon)] = value;
  }
  const auto get = [&](std::string_view key) -> const std::string& {
    auto it = fields.find(key);
    if (it == fields.end()) {
      throw Error(ErrorKind::kParse, "certificate lacks field '" + std::string(key) + "'");
    }
    return it->second;
  };
  if (get(kMagic) != "1") {
    throw Error(ErrorKind::kParse, "unsupported certificate version '" + get(kMagic) + "'");
  }

  HittingCertificate cert;
  cert.mode = ParseCertificateMode(get("mode"));
  cert.n = ParseUnsigned(get("n"), "n");
  cert.seed = ParseUnsigned(get("seed"), "seed");
  cert.s = ParseUnsigned(get("s"), "s");
  cert.t = ParseUnsigned(get("t"), "t");
  cert.delta = ParseReal(get("delta"));
  cert.k = ParseUnsigned(get("k"), "k");
  if (const auto& a = get("anchor"); !a.empty()) {
    cert.anchor = static_cast<Vertex>(ParseUnsigned(a, "anchor"));
  }
  cert.bin_index = ParseUnsigned(get("bin_index"), "bin_index");
  if (fields.count("bin_theta")) {
    DegreeBin b;
    const auto pair = [&](std::string_view key) {
      const auto parts = Split(get(key));
      if (parts.size() != 2) {
        throw Error(ErrorKind::kParse, "field '" + std::string(key) + "' expects two reals");
      }
      return std::pair{ParseReal(parts[0]), ParseReal(parts[1])};
    };
    std::tie(b.theta_lo, b.theta_hi) = pair("bin_theta");
    std::tie(b.log_theta_lo, b.log_theta_hi) = pair("bin_log_theta");
    b.log_k = ParseReal(get("bin_log_k"));
    b.k = cert.k;
    if (fields.count("bin_log_exponent")) {
      const auto [lo, hi] = pair("bin_log_exponent");
      b.log_exponent_lo = lo;
      b.log_exponent_hi = hi;
    }
    cert.bin = b;
  }
  cert.T = ParseSet(get("T"), cert.n, "T");
  cert.I = ParseSet(get("I"), cert.n, "I");
  cert.S_j = ParseSet(get("S_j"), cert.n, "S_j");
  cert.I_j = ParseSet(get("I_j"), cert.n, "I_j");
  cert.K = ParseSet(get("K"), cert.n, "K");
  cert.H = ParseSet(get("H"), cert.n, "H");
  cert.NH = ParseSet(get("NH"), cert.n, "NH");
  const auto acc = Split(get("size_accounting"));
  if (acc.size() != 3) {
    throw Error(ErrorKind::kParse, "field 'size_accounting' expects three counts");
  }
  cert.size_accounting = {ParseUnsigned(acc[0], "size_accounting"),
                          ParseUnsigned(acc[1], "size_accounting"),
                          ParseUnsigned(acc[2], "size_accounting")};
  cert.e_observed = ParseUnsigned(get("e_observed"), "e_observed");
  return cert;
}

std::vector<std::string> AuditCertificate(const Graph& g, const HittingCertificate& cert,
                                          std::size_t cap) {
  std::vector<std::string> problems;
  const auto expect = [&](bool ok, const std::string& msg) {
    if (!ok) problems.push_back(msg);
  };
  if (cert.n != g.n() || cert.T.universe() != g.n()) {
    problems.push_back("certificate is for n = " + std::to_string(cert.n) +
                       ", graph has n = " + std::to_string(g.n()));
    return problems;
  }

  const bool hits = g.n() <= cap ? VerifyHittingSet(g, cert.T, cap) : HitsAllMaximum(g, cert.T);
  expect(hits, "T misses some maximum independent set");

  switch (cert.mode) {
    case CertificateMode::kLowDegree:
      expect(cert.anchor && *cert.anchor < g.n() && cert.T == ClosedNeighborhood(g, *cert.anchor),
             "T is not the closed neighbourhood of the anchor");
      return problems;
    case CertificateMode::kKernel:
      expect(cert.anchor && cert.T.size() == 1 && cert.T.contains(*cert.anchor),
             "T is not the kernel anchor singleton");
      return problems;
    case CertificateMode::kTrivial:
      expect(cert.T.size() == g.n(), "trivial certificate must use T = V");
      return problems;
    case CertificateMode::kSampling:
      expect(cert.T.size() == cert.k, "sampled T has the wrong size");
      return problems;
    case CertificateMode::kBetConstruction:
      break;
  }

  expect(g.is_independent(cert.I), "I is not independent");
  expect(cert.I.size() == AlphaWithWitness(g).size, "I is not maximum");
  if (!cert.bin) {
    problems.push_back("bet certificate lacks its degree bin");
    return problems;
  }
  VertexSet expected_sj = g.empty_set();
  cert.I.complement().for_each([&](Vertex v) {
    if (cert.bin->Contains(g.neighbors(v).intersection_size(cert.I))) expected_sj.insert(v);
  });
  expect(cert.S_j == expected_sj, "S_j differs from the bin's degree window");
  expect(cert.I_j.is_subset_of(cert.I) && cert.I_j.size() == cert.k,
         "I_j is not a k-subset of I");

  try {
    expect(cert.K == BuildK(g, cert.I_j, cert.s, cert.t),
           "K differs from the union of s-wise common neighbourhoods");
  } catch (const Error& e) {
    problems.push_back(std::string("K cannot be rebuilt: ") + e.what());
    return problems;
  }

  const VertexSet R = (cert.I | cert.K | cert.S_j).complement();
  const std::size_t e = g.edges_between(cert.I, R);
  expect(cert.e_observed == e, "e_observed differs from |E(I, R)|");

  const auto h = HSize(cert.k, cert.s, cert.t);
  expect(h && cert.H.size() == *h && cert.H.is_subset_of(cert.I),
         "H is not a subset of I of size (t-1)C(k,s)+1");
  std::size_t h_residual = 0;
  std::size_t h_max = 0;
  cert.H.for_each([&](Vertex v) {
    const std::size_t d = g.neighbors(v).intersection_size(R);
    h_residual += d;
    h_max = std::max(h_max, d);
  });
  expect(h_residual * cert.I.size() <= cert.H.size() * e,
         "H exceeds the average residual degree bound");
  bool ranked = true;
  (cert.I - cert.H).for_each([&](Vertex v) {
    ranked = ranked && g.neighbors(v).intersection_size(R) >= h_max;
  });
  expect(ranked, "H is not made of least-residual-degree members of I");
  expect(cert.NH == ResidualNeighbors(g, cert.H, R), "NH differs from N_R(H)");
  expect(cert.T == (cert.H | cert.NH | cert.S_j), "T differs from H u NH u S_j");
  expect(cert.size_accounting ==
             SizeAccounting{cert.H.size(), cert.NH.size(), cert.S_j.size()},
         "size accounting does not match the sets");
  return problems;
}

bool ReplayMatches(const Graph& g, const ParamSchedule& sched,
                   const HittingCertificate& cert, const ConstructionOptions& options) {
  const HittingCertificate fresh = ConstructBetHittingSet(g, sched, cert.seed, options);
  return FormatCertificate(fresh) == FormatCertificate(cert);
}

}  // namespace hitlab
