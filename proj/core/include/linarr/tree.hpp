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

#ifndef LINARR_TREE_HPP_
#define LINARR_TREE_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace linarr {

// Vertices are 0-based internally. Every text format (tree files,
// arrangements, CLI output) uses 1-based ids; conversion happens at the I/O
// boundary only.
using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

// Sum of edge lengths. C(n,2) for n = 10^6 is ~5e11, well within 64 bits.
using Cost = std::uint64_t;

// Thrown when an edge list does not describe a tree, or when a tree file is
// malformed. `line()` is the 1-based line of the offending input, or 0 when
// the problem is not attributable to a single line (e.g. disconnection).
class TreeError : public std::runtime_error {
 public:
  enum class Kind {
    kMalformedLine,
    kVertexOutOfRange,
    kSelfLoop,
    kDuplicateEdge,
    kEdgeCount,
    kDisconnected,
    kEmpty,
  };

  TreeError(Kind kind, std::size_t line, const std::string& what);

  Kind kind() const { return kind_; }
  std::size_t line() const { return line_; }

 private:
  Kind kind_;
  std::size_t line_;
};

// An undirected tree on vertices [0, n). Adjacency is stored in CSR form with
// every neighbor list sorted by ascending vertex id. Immutable once built.
class FreeTree {
 public:
  // Validates that `edges` forms a tree on n vertices: exactly n-1 edges, no
  // self-loops, no duplicates, connected. Throws TreeError otherwise.
  static FreeTree FromEdges(std::size_t n, std::span<const Edge> edges);

  std::size_t num_vertices() const { return offsets_.size() - 1; }
  std::size_t num_edges() const { return edges_.size(); }

  std::span<const Vertex> neighbors(Vertex u) const {
    return {adjacency_.data() + offsets_[u], offsets_[u + 1] - offsets_[u]};
  }
  std::size_t degree(Vertex u) const { return offsets_[u + 1] - offsets_[u]; }
  bool is_leaf(Vertex u) const { return degree(u) == 1; }

  // Edges in input order, each normalized so that first < second.
  std::span<const Edge> edges() const { return edges_; }

  // Directed-edge slots: slot s in [slot_begin(u), slot_end(u)) is the
  // directed edge (u, adjacency[s]). There are 2(n-1) slots.
  std::size_t slot_begin(Vertex u) const { return offsets_[u]; }
  std::size_t slot_end(Vertex u) const { return offsets_[u + 1]; }
  std::size_t num_slots() const { return adjacency_.size(); }
  Vertex slot_target(std::size_t slot) const { return adjacency_[slot]; }
  // Slot of the directed edge (v, u) given the slot of (u, v).
  std::size_t reverse_slot(std::size_t slot) const { return reverse_[slot]; }
  // Slot of (u, v), or num_slots() when uv is not an edge. O(log degree(u)).
  std::size_t find_slot(Vertex u, Vertex v) const;
  bool has_edge(Vertex u, Vertex v) const { return find_slot(u, v) != num_slots(); }

 private:
  FreeTree() = default;

  std::vector<std::size_t> offsets_;
  std::vector<Vertex> adjacency_;
  std::vector<std::size_t> reverse_;
  std::vector<Edge> edges_;
};

// A free tree with a designated root. Non-owning: the referenced FreeTree must
// outlive the view.
class RootedTree {
 public:
  RootedTree(const FreeTree& tree, Vertex root);

  const FreeTree& tree() const { return *tree_; }
  Vertex root() const { return root_; }
  std::size_t num_vertices() const { return tree_->num_vertices(); }

 private:
  const FreeTree* tree_;
  Vertex root_;
};

// s_u(v) for every directed edge (u, v): the number of vertices in the
// subtree rooted at v when the tree is rooted at u. Indexed by the tree's
// directed-edge slots.
class SubtreeSizeTable {
 public:
  explicit SubtreeSizeTable(const FreeTree& tree);

  std::uint32_t at_slot(std::size_t slot) const { return sizes_[slot]; }
  // s_u(v). Throws std::invalid_argument if uv is not an edge.
  std::uint32_t size(Vertex u, Vertex v) const;
  std::size_t num_vertices() const { return n_; }

 private:
  const FreeTree* tree_;
  std::size_t n_;
  std::vector<std::uint32_t> sizes_;
};

SubtreeSizeTable subtree_sizes(const FreeTree& tree);

struct ChildEntry {
  Vertex child;
  std::uint32_t size;

  friend bool operator==(const ChildEntry&, const ChildEntry&) = default;
};

// For every vertex u of a rooted tree, its children ordered non-increasingly
// by subtree size, ties by ascending id. Built with one global counting sort.
class SortedChildLists {
 public:
  SortedChildLists(const RootedTree& rt, const SubtreeSizeTable& sizes);

  Vertex root() const { return root_; }
  std::span<const ChildEntry> children(Vertex u) const {
    return {entries_.data() + offsets_[u], offsets_[u + 1] - offsets_[u]};
  }
  std::size_t num_vertices() const { return offsets_.size() - 1; }

 private:
  Vertex root_;
  std::vector<std::size_t> offsets_;
  std::vector<ChildEntry> entries_;
};

SortedChildLists sorted_child_lists(const RootedTree& rt,
                                    const SubtreeSizeTable& sizes);

// A vertex minimizing the largest component of T - c. When the tree has two
// centroidal vertices the smaller id is returned.
Vertex centroid(const FreeTree& tree, const SubtreeSizeTable& sizes);
Vertex centroid(const FreeTree& tree);

// Tree file format: the first non-comment line holds n, followed by exactly
// n-1 lines "u v" with 1 <= u, v <= n. Lines starting with '#' and blank lines
// are ignored.
FreeTree parse_tree(std::string_view text);
std::string format_tree(const FreeTree& tree);

}  // namespace linarr

#endif  // LINARR_TREE_HPP_
