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

#ifndef LINARR_PLANAR_HPP_
#define LINARR_PLANAR_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "linarr/arrangement.hpp"
#include "linarr/projective.hpp"
#include "linarr/tree.hpp"

namespace linarr {

// One record per directed edge (u, v), kept in u's list. Ranks are 0-based:
// the largest neighbor subtree of u has rank 0.
struct EdgeRecord {
  Vertex neighbor = 0;       // v
  std::uint32_t size = 0;    // s_u(v)
  std::uint32_t rank = 0;    // position of v in u's sorted list
  std::uint32_t reverse_rank = 0;  // position of u in v's sorted list
  std::uint64_t prefix = 0;  // sum of the sizes at ranks 0..rank of u's list

  friend bool operator==(const EdgeRecord&, const EdgeRecord&) = default;
};

// For every vertex u, its degree(u) edge records sorted non-increasingly by
// size, ties by ascending neighbor id. Built in O(n) with two global counting
// sorts; the second one recovers reverse ranks without any per-vertex search.
class EdgeRecordTable {
 public:
  EdgeRecordTable(const FreeTree& tree, const SubtreeSizeTable& sizes);

  std::span<const EdgeRecord> records(Vertex u) const {
    return {records_.data() + offsets_[u], offsets_[u + 1] - offsets_[u]};
  }
  // Record of (u, v), located through the tree's slot index. Throws
  // std::invalid_argument when uv is not an edge.
  const EdgeRecord& record(Vertex u, Vertex v) const;
  std::size_t num_vertices() const { return offsets_.size() - 1; }
  std::size_t num_records() const { return records_.size(); }

 private:
  const FreeTree* tree_;
  std::vector<std::size_t> offsets_;
  std::vector<EdgeRecord> records_;
  std::vector<std::uint32_t> rank_of_slot_;
};

EdgeRecordTable build_edge_records(const FreeTree& tree, const SubtreeSizeTable& sizes);

// D(T^v) - D(T^u) for adjacent u, v, where D(T^x) is the maximum projective
// cost with x as root. O(1) given the record of (u, v).
std::int64_t projective_delta(Vertex u, const EdgeRecord& uv, const EdgeRecordTable& records);
// Same, locating the record first. Throws std::invalid_argument if uv is not
// an edge.
std::int64_t projective_delta(Vertex u, Vertex v, const EdgeRecordTable& records);

struct RootChoice {
  Vertex root = 0;
  Cost cost = 0;
};

// A root maximizing the maximum projective cost, and that cost. Breadth-first
// from the smallest internal vertex, updating the cost across each edge with
// projective_delta. Leaves are never expanded: a leaf's value always equals
// its neighbor's. Ties go to the smallest id among internal vertices; for
// n <= 2 the answer is vertex 0.
RootChoice find_optimal_root(const FreeTree& tree);

struct PlanarSolution {
  Arrangement arrangement;
  Cost cost = 0;
  Vertex root = 0;  // the vertex the arrangement was rooted at
};

// Maximum planar arrangement in O(n).
PlanarSolution max_planar(const FreeTree& tree);

// Max over all roots of max_projective_cost. O(n^2); for differential testing.
Cost max_planar_reference(const FreeTree& tree);

// Internal vertices with at least one leaf neighbor, ascending. Some member of
// this set or one of its leaves is an optimal root. For n = 2 (no internal
// vertex) returns {0}. Throws std::invalid_argument for n < 2.
std::vector<Vertex> optimal_root_candidates(const FreeTree& tree);

// Removing all leaves leaves a path (possibly empty).
bool is_caterpillar(const FreeTree& tree);

// Graceful arrangement of a caterpillar: walk the backbone from one end,
// placing each backbone vertex on alternating ends of the free interval and
// its leaves at the opposite end. Edge lengths are exactly 1..n-1. Throws
// std::invalid_argument on a non-caterpillar.
Solution max_planar_caterpillar(const FreeTree& tree);

// Minimum planar arrangement: the minimum projective arrangement rooted at
// the (smaller-id) centroid.
PlanarSolution min_planar(const FreeTree& tree);

}  // namespace linarr

#endif  // LINARR_PLANAR_HPP_
