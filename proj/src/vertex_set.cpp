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

#include "hitlab/vertex_set.hpp"

#include <algorithm>
#include <cassert>
#include <string>

#include "hitlab/error.hpp"

namespace hitlab {

VertexSet::VertexSet(std::size_t universe, std::initializer_list<Vertex> members)
    : VertexSet(universe, std::span<const Vertex>(members.begin(), members.size())) {}

VertexSet::VertexSet(std::size_t universe, std::span<const Vertex> members)
    : VertexSet(universe) {
  for (Vertex v : members) insert(v);
}

VertexSet VertexSet::Full(std::size_t universe) {
  VertexSet s(universe);
  std::fill(s.words_.begin(), s.words_.end(), ~Word{0});
  s.MaskTail();
  s.size_ = universe;
  return s;
}

void VertexSet::insert(Vertex v) {
  if (v >= universe_) {
    throw Error(ErrorKind::kRange, "vertex " + std::to_string(v) +
                                       " outside universe of size " +
                                       std::to_string(universe_));
  }
  Word& w = words_[v / kWordBits];
  const Word bit = Word{1} << (v % kWordBits);
  if (!(w & bit)) {
    w |= bit;
    ++size_;
  }
}

void VertexSet::erase(Vertex v) {
  if (v >= universe_) return;
  Word& w = words_[v / kWordBits];
  const Word bit = Word{1} << (v % kWordBits);
  if (w & bit) {
    w &= ~bit;
    --size_;
  }
}

void VertexSet::erase_through(Vertex v) {
  if (universe_ == 0) return;
  const std::size_t last = std::min<std::size_t>(v, universe_ - 1);
  const std::size_t full_words = last / kWordBits;
  for (std::size_t w = 0; w < full_words; ++w) words_[w] = 0;
  const std::size_t bit = last % kWordBits;
  if (bit == kWordBits - 1) {
    words_[full_words] = 0;
  } else {
    words_[full_words] &= ~Word{0} << (bit + 1);
  }
  Recount();
}

Vertex VertexSet::first() const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) {
      return static_cast<Vertex>(w * kWordBits + std::countr_zero(words_[w]));
    }
  }
  return static_cast<Vertex>(universe_);
}

Vertex VertexSet::next(Vertex v) const {
  std::size_t pos = static_cast<std::size_t>(v) + 1;
  if (pos >= universe_) return static_cast<Vertex>(universe_);
  std::size_t w = pos / kWordBits;
  Word bits = words_[w] & (~Word{0} << (pos % kWordBits));
  while (true) {
    if (bits != 0) {
      return static_cast<Vertex>(w * kWordBits + std::countr_zero(bits));
    }
    if (++w == words_.size()) return static_cast<Vertex>(universe_);
    bits = words_[w];
  }
}

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  out.reserve(size_);
  for_each([&](Vertex v) { out.push_back(v); });
  return out;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  assert(universe_ == other.universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  Recount();
  return *this;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  assert(universe_ == other.universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  Recount();
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  assert(universe_ == other.universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  Recount();
  return *this;
}

VertexSet VertexSet::complement() const {
  VertexSet out(*this);
  for (Word& w : out.words_) w = ~w;
  out.MaskTail();
  out.Recount();
  return out;
}

std::size_t VertexSet::intersection_size(const VertexSet& other) const {
  assert(universe_ == other.universe_);
  std::size_t count = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    count += std::popcount(words_[i] & other.words_[i]);
  }
  return count;
}

bool VertexSet::intersects(const VertexSet& other) const {
  assert(universe_ == other.universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & other.words_[i]) return true;
  }
  return false;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  assert(universe_ == other.universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & ~other.words_[i]) return false;
  }
  return true;
}

bool LexLess(const VertexSet& a, const VertexSet& b) {
  Vertex x = a.first();
  Vertex y = b.first();
  const auto a_end = static_cast<Vertex>(a.universe());
  const auto b_end = static_cast<Vertex>(b.universe());
  while (x != a_end && y != b_end) {
    if (x != y) return x < y;
    x = a.next(x);
    y = b.next(y);
  }
  return x == a_end && y != b_end;
}

std::string VertexSet::ToString() const {
  std::string out;
  for_each([&](Vertex v) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v);
  });
  return out;
}

void VertexSet::Recount() {
  size_ = 0;
  for (Word w : words_) size_ += std::popcount(w);
}

void VertexSet::MaskTail() {
  const std::size_t tail = universe_ % kWordBits;
  if (tail != 0 && !words_.empty()) {
    words_.back() &= (Word{1} << tail) - 1;
  }
}

}  // namespace hitlab
