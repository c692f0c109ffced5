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

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace hitlab {

using Vertex = std::uint32_t;

// A subset of {0, ..., universe-1} stored as a packed bit row. The
// cardinality is cached and kept in sync by every mutator.
class VertexSet {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  VertexSet() = default;
  explicit VertexSet(std::size_t universe)
      : universe_(universe), words_(WordCount(universe), 0) {}
  VertexSet(std::size_t universe, std::initializer_list<Vertex> members);
  VertexSet(std::size_t universe, std::span<const Vertex> members);

  static VertexSet Full(std::size_t universe);

  std::size_t universe() const { return universe_; }
  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }

  bool contains(Vertex v) const {
    return v < universe_ && ((words_[v / kWordBits] >> (v % kWordBits)) & 1u);
  }

  void insert(Vertex v);
  void erase(Vertex v);
  // Removes every member <= v.
  void erase_through(Vertex v);

  // Smallest member, or universe() when empty.
  Vertex first() const;
  // Smallest member strictly greater than v, or universe() when none.
  Vertex next(Vertex v) const;

  std::vector<Vertex> members() const;

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      Word bits = words_[w];
      while (bits != 0) {
        const int b = std::countr_zero(bits);
        fn(static_cast<Vertex>(w * kWordBits + b));
        bits &= bits - 1;
      }
    }
  }

  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator|=(const VertexSet& other);
  // Set difference.
  VertexSet& operator-=(const VertexSet& other);

  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  VertexSet complement() const;

  std::size_t intersection_size(const VertexSet& other) const;
  bool intersects(const VertexSet& other) const;
  bool is_subset_of(const VertexSet& other) const;

  std::span<const Word> words() const { return words_; }

  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }

  friend bool LexLess(const VertexSet& a, const VertexSet& b);

  // Space-separated sorted ids, e.g. "0 2 4".
  std::string ToString() const;

 private:
  static std::size_t WordCount(std::size_t universe) {
    return (universe + kWordBits - 1) / kWordBits;
  }
  void Recount();
  void MaskTail();

  std::size_t universe_ = 0;
  std::size_t size_ = 0;
  std::vector<Word> words_;
};

// Lexicographic comparison of the sorted member lists.
bool LexLess(const VertexSet& a, const VertexSet& b);

}  // namespace hitlab
