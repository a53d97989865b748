// Copyright 2026 The linarr Authors
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

#ifndef LINARR_ARRANGEMENT_HPP_
#define LINARR_ARRANGEMENT_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "linarr/tree.hpp"

namespace linarr {

using Position = std::uint32_t;

// A linear arrangement: a bijection between vertices [0, n) and positions
// [0, n). Both directions are stored. Positions are 0-based in memory and
// 1-based in every text format.
class Arrangement {
 public:
  Arrangement() = default;

  // position[v] is the position of vertex v. Throws std::invalid_argument if
  // this is not a permutation of [0, n).
  static Arrangement FromPositions(std::vector<Position> position);
  // order[p] is the vertex at position p.
  static Arrangement FromOrder(std::vector<Vertex> order);
  static Arrangement Identity(std::size_t n);

  std::size_t size() const { return position_.size(); }
  Position position(Vertex v) const { return position_[v]; }
  Vertex vertex_at(Position p) const { return order_[p]; }
  std::span<const Position> positions() const { return position_; }
  std::span<const Vertex> order() const { return order_; }

  friend bool operator==(const Arrangement&, const Arrangement&) = default;

 private:
  std::vector<Position> position_;
  std::vector<Vertex> order_;
};

// Sum over edges of |pos(u) - pos(v)|.
Cost cost(const FreeTree& tree, const Arrangement& arr);

// No two edges cross: with each edge normalized to (lo, hi), edges e, f cross
// iff lo_e < lo_f < hi_e < hi_f. Edges sharing an endpoint never cross.
// Runs in O(n) with a single left-to-right sweep.
bool is_planar(const FreeTree& tree, const Arrangement& arr);

// Reference O(m^2) crossing test, for validation only.
bool is_planar_pairwise(const FreeTree& tree, const Arrangement& arr);

// Planar, and no edge covers the root.
bool is_projective(const RootedTree& rt, const Arrangement& arr);

// pos'(v) = n - 1 - pos(v).
Arrangement reverse(const Arrangement& arr);

// Text form: "p(1) p(2) ... p(n)", 1-based positions in vertex order.
std::string format_arrangement(const Arrangement& arr);
// JSON form: {"n": n, "position": [p(1), ..., p(n)]}, 1-based positions.
std::string arrangement_to_json(const Arrangement& arr);
// Accepts either form; JSON is detected by a leading '{'. Throws
// std::invalid_argument on malformed input.
Arrangement parse_arrangement(std::string_view text);

}  // namespace linarr

#endif  // LINARR_ARRANGEMENT_HPP_
