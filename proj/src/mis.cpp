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

#include "hitlab/mis.hpp"

#include <algorithm>
#include <string>

namespace hitlab {

std::size_t CliqueCoverBound(const Graph& g, const VertexSet& candidates) {
  // Each entry holds the common neighbourhood of one greedy clique; v can
  // join the clique iff v lies in it.
  std::vector<VertexSet> open;
  candidates.for_each([&](Vertex v) {
    for (auto& common : open) {
      if (common.contains(v)) {
        common &= g.neighbors(v);
        return;
      }
    }
    open.push_back(g.neighbors(v) & candidates);
  });
  return open.size();
}

namespace {

struct Branch {
  Vertex vertex;
  std::size_t degree;
};

Branch PickBranchVertex(const Graph& g, const VertexSet& candidates) {
  Branch best{candidates.first(), 0};
  bool first = true;
  candidates.for_each([&](Vertex v) {
    const std::size_t d = g.neighbors(v).intersection_size(candidates);
    if (first || d > best.degree) {
      best = {v, d};
      first = false;
    }
  });
  return best;
}

class AlphaSearch {
 public:
  explicit AlphaSearch(const Graph& g) : g_(g), chosen_(g.n()), best_(g.n()) {}

  MisResult Run(const VertexSet& candidates) {
    Expand(candidates);
    return {best_.size(), best_};
  }

 private:
  void Expand(const VertexSet& candidates) {
    if (candidates.empty()) {
      if (chosen_.size() > best_.size()) best_ = chosen_;
      return;
    }
    if (chosen_.size() + CliqueCoverBound(g_, candidates) <= best_.size()) return;
    const Branch b = PickBranchVertex(g_, candidates);
    if (b.degree == 0) {
      // Only isolated candidates remain; take them all.
      if (chosen_.size() + candidates.size() > best_.size()) {
        best_ = chosen_ | candidates;
      }
      return;
    }
    chosen_.insert(b.vertex);
    Expand(candidates - ClosedNeighborhood(g_, b.vertex));
    chosen_.erase(b.vertex);
    VertexSet rest = candidates;
    rest.erase(b.vertex);
    Expand(rest);
  }

  const Graph& g_;
  VertexSet chosen_;
  VertexSet best_;
};

class MisEnumerator {
 public:
  MisEnumerator(const Graph& g, std::size_t alpha, std::vector<VertexSet>& out)
      : g_(g), alpha_(alpha), chosen_(g.n()), out_(out) {}

  void Expand(const VertexSet& candidates) {
    const std::size_t need = alpha_ - chosen_.size();
    if (need == 0) {
      out_.push_back(chosen_);
      return;
    }
    if (candidates.size() < need) return;
    if (CliqueCoverBound(g_, candidates) < need) return;
    const Branch b = PickBranchVertex(g_, candidates);
    if (b.degree == 0) {
      // The bound forces |candidates| == need here.
      out_.push_back(chosen_ | candidates);
      return;
    }
    chosen_.insert(b.vertex);
    Expand(candidates - ClosedNeighborhood(g_, b.vertex));
    chosen_.erase(b.vertex);
    VertexSet rest = candidates;
    rest.erase(b.vertex);
    Expand(rest);
  }

 private:
  const Graph& g_;
  std::size_t alpha_;
  VertexSet chosen_;
  std::vector<VertexSet>& out_;
};

}  // namespace

MisResult AlphaWithWitness(const Graph& g) { return AlphaWithin(g, g.all()); }

MisResult AlphaWithin(const Graph& g, const VertexSet& candidates) {
  return AlphaSearch(g).Run(candidates);
}

MisFamily EnumerateMis(const Graph& g, std::size_t cap) {
  if (g.n() > cap) {
    throw Error(ErrorKind::kCapExceeded,
                "enumeration of maximum independent sets refused: n = " +
                    std::to_string(g.n()) + " exceeds cap " + std::to_string(cap));
  }
  MisFamily family;
  family.host_n = g.n();
  family.alpha = AlphaWithWitness(g).size;
  MisEnumerator(g, family.alpha, family.sets).Expand(g.all());
  std::sort(family.sets.begin(), family.sets.end(),
            [](const VertexSet& a, const VertexSet& b) { return LexLess(a, b); });
  return family;
}

VertexSet Kernel(const Graph& g, std::size_t cap) {
  const MisFamily family = EnumerateMis(g, cap);
  VertexSet out = g.all();
  for (const auto& s : family.sets) out &= s;
  return out;
}

}  // namespace hitlab
