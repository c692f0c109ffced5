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

#include "hitlab/graph.hpp"

namespace hitlab {

// Edge list: header "n m", then m lines "u v" with 0-indexed ids; '#' starts
// a comment. DIMACS: "p edge n m", then m lines "e u v" with 1-indexed ids;
// lines starting with 'c' are comments.
enum class GraphFormat { kEdgeList, kDimacs };

GraphFormat ParseGraphFormat(std::string_view name);
const char* GraphFormatName(GraphFormat format);

// Parse errors carry the 1-based line number in their message.
Graph ParseGraph(std::string_view text, GraphFormat format);
std::string FormatGraph(const Graph& g, GraphFormat format);

Graph ReadGraph(const std::string& path, GraphFormat format);
void WriteGraph(const Graph& g, const std::string& path, GraphFormat format);

}  // namespace hitlab
