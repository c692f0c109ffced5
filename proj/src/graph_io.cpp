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

#include "hitlab/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace hitlab {

namespace {

std::vector<std::string_view> Tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

[[noreturn]] void ParseFail(std::size_t line_no, const std::string& msg) {
  throw Error(ErrorKind::kParse, "line " + std::to_string(line_no) + ": " + msg);
}

std::uint64_t ParseCount(std::string_view token, std::size_t line_no) {
  std::uint64_t value = 0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    ParseFail(line_no, "expected a non-negative integer, got '" +
                           std::string(token) + "'");
  }
  return value;
}

struct PendingEdge {
  std::uint64_t u, v;
  std::size_t line_no;
};

Graph Assemble(std::uint64_t n, const std::vector<PendingEdge>& pending) {
  std::vector<Edge> edges;
  edges.reserve(pending.size());
  for (const auto& e : pending) {
    if (e.u >= n || e.v >= n) {
      throw Error(ErrorKind::kRange, "line " + std::to_string(e.line_no) +
                                         ": vertex id out of range for n = " +
                                         std::to_string(n));
    }
    if (e.u == e.v) {
      throw Error(ErrorKind::kSelfLoop, "line " + std::to_string(e.line_no) +
                                            ": self-loop at vertex " +
                                            std::to_string(e.u));
    }
    edges.emplace_back(static_cast<Vertex>(e.u), static_cast<Vertex>(e.v));
  }
  return Graph(n, edges);
}

Graph ParseEdgeList(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  bool have_header = false;
  std::uint64_t n = 0, m = 0;
  std::vector<PendingEdge> pending;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line(raw);
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    const auto tokens = Tokens(line);
    if (tokens.empty()) continue;
    if (tokens.size() != 2) ParseFail(line_no, "expected two integers");
    const std::uint64_t a = ParseCount(tokens[0], line_no);
    const std::uint64_t b = ParseCount(tokens[1], line_no);
    if (!have_header) {
      n = a;
      m = b;
      have_header = true;
      continue;
    }
    if (pending.size() == m) ParseFail(line_no, "more edge lines than the header declares");
    pending.push_back({a, b, line_no});
  }
  if (!have_header) ParseFail(line_no + 1, "missing 'n m' header");
  if (pending.size() != m) {
    ParseFail(line_no + 1, "header declares " + std::to_string(m) +
                               " edges but " + std::to_string(pending.size()) +
                               " were given");
  }
  return Assemble(n, pending);
}

Graph ParseDimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  bool have_header = false;
  std::uint64_t n = 0, m = 0;
  std::vector<PendingEdge> pending;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto tokens = Tokens(raw);
    if (tokens.empty() || tokens[0] == "c") continue;
    if (tokens[0] == "p") {
      if (have_header) ParseFail(line_no, "duplicate problem line");
      if (tokens.size() != 4 || (tokens[1] != "edge" && tokens[1] != "col")) {
        ParseFail(line_no, "expected 'p edge n m'");
      }
      n = ParseCount(tokens[2], line_no);
      m = ParseCount(tokens[3], line_no);
      have_header = true;
    } else if (tokens[0] == "e") {
      if (!have_header) ParseFail(line_no, "edge before problem line");
      if (tokens.size() != 3) ParseFail(line_no, "expected 'e u v'");
      const std::uint64_t u = ParseCount(tokens[1], line_no);
      const std::uint64_t v = ParseCount(tokens[2], line_no);
      if (u == 0 || v == 0) {
        throw Error(ErrorKind::kRange, "line " + std::to_string(line_no) +
                                           ": DIMACS ids are 1-indexed");
      }
      if (pending.size() == m) ParseFail(line_no, "more edge lines than the header declares");
      pending.push_back({u - 1, v - 1, line_no});
    } else {
      ParseFail(line_no, "unknown line type '" + std::string(tokens[0]) + "'");
    }
  }
  if (!have_header) ParseFail(line_no + 1, "missing 'p edge n m' line");
  if (pending.size() != m) {
    ParseFail(line_no + 1, "header declares " + std::to_string(m) +
                               " edges but " + std::to_string(pending.size()) +
                               " were given");
  }
  return Assemble(n, pending);
}

}  // namespace

GraphFormat ParseGraphFormat(std::string_view name) {
  if (name == "edge-list") return GraphFormat::kEdgeList;
  if (name == "dimacs") return GraphFormat::kDimacs;
  throw Error(ErrorKind::kParse, "unknown graph format '" + std::string(name) + "'");
}

const char* GraphFormatName(GraphFormat format) {
  return format == GraphFormat::kEdgeList ? "edge-list" : "dimacs";
}

Graph ParseGraph(std::string_view text, GraphFormat format) {
  return format == GraphFormat::kEdgeList ? ParseEdgeList(text) : ParseDimacs(text);
}

std::string FormatGraph(const Graph& g, GraphFormat format) {
  std::ostringstream out;
  const auto edges = g.edges();
  if (format == GraphFormat::kEdgeList) {
    out << g.n() << ' ' << edges.size() << '\n';
    for (const auto& [u, v] : edges) out << u << ' ' << v << '\n';
  } else {
    out << "p edge " << g.n() << ' ' << edges.size() << '\n';
    for (const auto& [u, v] : edges) out << "e " << u + 1 << ' ' << v + 1 << '\n';
  }
  return out.str();
}

Graph ReadGraph(const std::string& path, GraphFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIo, "cannot open '" + path + "' for reading");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return ParseGraph(buffer.str(), format);
  } catch (const Error& e) {
    throw Error(e.kind(), path + ": " + e.what());
  }
}

void WriteGraph(const Graph& g, const std::string& path, GraphFormat format) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::kIo, "cannot open '" + path + "' for writing");
  out << FormatGraph(g, format);
  if (!out) throw Error(ErrorKind::kIo, "write to '" + path + "' failed");
}

}  // namespace hitlab
