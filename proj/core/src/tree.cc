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

#include "linarr/tree.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <sstream>

namespace linarr {

TreeError::TreeError(Kind kind, std::size_t line, const std::string& what)
    : std::runtime_error(line == 0 ? what
                                   : "line " + std::to_string(line) + ": " + what),
      kind_(kind),
      line_(line) {}

FreeTree FreeTree::FromEdges(std::size_t n, std::span<const Edge> edges) {
  if (n == 0) {
    throw TreeError(TreeError::Kind::kEmpty, 0, "a tree needs at least one vertex");
  }
  if (n > std::numeric_limits<Vertex>::max()) {
    throw TreeError(TreeError::Kind::kVertexOutOfRange, 0, "too many vertices");
  }
  if (edges.size() != n - 1) {
    throw TreeError(TreeError::Kind::kEdgeCount, 0,
                    "expected " + std::to_string(n - 1) + " edges, got " +
                        std::to_string(edges.size()));
  }

  FreeTree tree;
  tree.edges_.reserve(edges.size());
  std::vector<std::size_t> degree(n, 0);
  for (const auto& [a, b] : edges) {
    if (a >= n || b >= n) {
      throw TreeError(TreeError::Kind::kVertexOutOfRange, 0,
                      "vertex out of range in edge " + std::to_string(a + 1) + " " +
                          std::to_string(b + 1));
    }
    if (a == b) {
      throw TreeError(TreeError::Kind::kSelfLoop, 0,
                      "self-loop at vertex " + std::to_string(a + 1));
    }
    tree.edges_.emplace_back(std::min(a, b), std::max(a, b));
    ++degree[a];
    ++degree[b];
  }

  tree.offsets_.assign(n + 1, 0);
  for (std::size_t u = 0; u < n; ++u) tree.offsets_[u + 1] = tree.offsets_[u] + degree[u];

  // Two-pass bucket distribution: first by target, then by source. The
  // second pass is stable, so every neighbor list ends up sorted by id.
  const std::size_t m2 = 2 * edges.size();
  std::vector<Edge> directed;
  directed.reserve(m2);
  {
    std::vector<std::size_t> fill(tree.offsets_.begin(), tree.offsets_.end() - 1);
    std::vector<Edge> by_target(m2);
    for (const auto& [a, b] : tree.edges_) {
      by_target[fill[b]++] = {a, b};
      by_target[fill[a]++] = {b, a};
    }
    directed = std::move(by_target);
  }
  tree.adjacency_.assign(m2, 0);
  {
    std::vector<std::size_t> fill(tree.offsets_.begin(), tree.offsets_.end() - 1);
    for (const auto& [src, dst] : directed) tree.adjacency_[fill[src]++] = dst;
  }

  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t s = tree.offsets_[u] + 1; s < tree.offsets_[u + 1]; ++s) {
      if (tree.adjacency_[s] == tree.adjacency_[s - 1]) {
        throw TreeError(TreeError::Kind::kDuplicateEdge, 0,
                        "duplicate edge " + std::to_string(u + 1) + " " +
                            std::to_string(tree.adjacency_[s] + 1));
      }
    }
  }

  // Reverse slots: walking sources in increasing order visits the slots of
  // (v, u) for fixed v in increasing u, which is exactly v's list order.
  tree.reverse_.assign(m2, 0);
  {
    std::vector<std::size_t> fill(tree.offsets_.begin(), tree.offsets_.end() - 1);
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t s = tree.offsets_[u]; s < tree.offsets_[u + 1]; ++s) {
        const Vertex v = tree.adjacency_[s];
        const std::size_t back = fill[v]++;
        tree.reverse_[s] = back;
        tree.reverse_[back] = s;
      }
    }
  }

  // n-1 distinct edges without cycles <=> connected.
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const Vertex u = stack.back();
    stack.pop_back();
    for (Vertex v : tree.neighbors(u)) {
      if (!seen[v]) {
        seen[v] = 1;
        ++reached;
        stack.push_back(v);
      }
    }
  }
  if (reached != n) {
    throw TreeError(TreeError::Kind::kDisconnected, 0,
                    "edges do not connect all " + std::to_string(n) + " vertices");
  }
  return tree;
}

std::size_t FreeTree::find_slot(Vertex u, Vertex v) const {
  if (u >= num_vertices()) return num_slots();
  const auto first = adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[u]);
  const auto last = adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[u + 1]);
  const auto it = std::lower_bound(first, last, v);
  if (it == last || *it != v) return num_slots();
  return static_cast<std::size_t>(it - adjacency_.begin());
}

RootedTree::RootedTree(const FreeTree& tree, Vertex root) : tree_(&tree), root_(root) {
  if (root >= tree.num_vertices()) {
    throw std::invalid_argument("root " + std::to_string(root + 1) +
                                " is not a vertex of the tree");
  }
}

SubtreeSizeTable::SubtreeSizeTable(const FreeTree& tree)
    : tree_(&tree), n_(tree.num_vertices()), sizes_(tree.num_slots(), 0) {
  const std::size_t n = n_;
  // Root at 0; a DFS preorder processed backwards yields sizes bottom-up.
  std::vector<Vertex> parent(n, 0);
  std::vector<Vertex> order;
  order.reserve(n);
  std::vector<Vertex> stack{0};
  std::vector<char> seen(n, 0);
  seen[0] = 1;
  while (!stack.empty()) {
    const Vertex u = stack.back();
    stack.pop_back();
    order.push_back(u);
    for (Vertex v : tree.neighbors(u)) {
      if (!seen[v]) {
        seen[v] = 1;
        parent[v] = u;
        stack.push_back(v);
      }
    }
  }
  std::vector<std::uint32_t> below(n, 1);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (*it != 0) below[parent[*it]] += below[*it];
  }
  for (Vertex u = 0; u < n; ++u) {
    for (std::size_t s = tree.slot_begin(u); s < tree.slot_end(u); ++s) {
      const Vertex v = tree.slot_target(s);
      sizes_[s] = (v != 0 && parent[v] == u)
                      ? below[v]
                      : static_cast<std::uint32_t>(n - below[u]);
    }
  }
}

std::uint32_t SubtreeSizeTable::size(Vertex u, Vertex v) const {
  const std::size_t slot = tree_->find_slot(u, v);
  if (slot == tree_->num_slots()) {
    throw std::invalid_argument("not an edge: " + std::to_string(u + 1) + " " +
                                std::to_string(v + 1));
  }
  return sizes_[slot];
}

SubtreeSizeTable subtree_sizes(const FreeTree& tree) { return SubtreeSizeTable(tree); }

SortedChildLists::SortedChildLists(const RootedTree& rt, const SubtreeSizeTable& sizes)
    : root_(rt.root()) {
  const FreeTree& tree = rt.tree();
  const std::size_t n = tree.num_vertices();

  // Parent of each vertex in T^root.
  std::vector<Vertex> parent(n, 0);
  std::vector<char> is_root_or_seen(n, 0);
  {
    std::vector<Vertex> stack{root_};
    is_root_or_seen[root_] = 1;
    parent[root_] = root_;
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      for (Vertex v : tree.neighbors(u)) {
        if (!is_root_or_seen[v]) {
          is_root_or_seen[v] = 1;
          parent[v] = u;
          stack.push_back(v);
        }
      }
    }
  }

  offsets_.assign(n + 1, 0);
  for (Vertex u = 0; u < n; ++u) {
    const std::size_t out = tree.degree(u) - (u == root_ ? 0 : 1);
    offsets_[u + 1] = offsets_[u] + out;
  }
  entries_.resize(n == 0 ? 0 : n - 1);
  if (n <= 1) return;

  // Counting sort of all (parent, child) pairs by size, largest first. The
  // input is visited in (parent asc, child asc) order and the sort is stable,
  // so ties keep ascending child id.
  struct Item {
    Vertex parent;
    Vertex child;
    std::uint32_t size;
  };
  std::vector<std::size_t> count(n + 1, 0);
  for (Vertex u = 0; u < n; ++u) {
    for (std::size_t s = tree.slot_begin(u); s < tree.slot_end(u); ++s) {
      const Vertex v = tree.slot_target(s);
      if (v != root_ && parent[v] == u) ++count[n - sizes.at_slot(s)];
    }
  }
  std::size_t running = 0;
  for (auto& c : count) {
    const std::size_t here = c;
    c = running;
    running += here;
  }
  std::vector<Item> sorted(n - 1);
  for (Vertex u = 0; u < n; ++u) {
    for (std::size_t s = tree.slot_begin(u); s < tree.slot_end(u); ++s) {
      const Vertex v = tree.slot_target(s);
      if (v != root_ && parent[v] == u) {
        const std::uint32_t sz = sizes.at_slot(s);
        sorted[count[n - sz]++] = {u, v, sz};
      }
    }
  }
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (const Item& item : sorted) entries_[fill[item.parent]++] = {item.child, item.size};
}

SortedChildLists sorted_child_lists(const RootedTree& rt, const SubtreeSizeTable& sizes) {
  return SortedChildLists(rt, sizes);
}

Vertex centroid(const FreeTree& tree, const SubtreeSizeTable& sizes) {
  const std::size_t n = tree.num_vertices();
  Vertex best = 0;
  std::size_t best_max = std::numeric_limits<std::size_t>::max();
  for (Vertex c = 0; c < n; ++c) {
    std::size_t largest = 0;
    for (std::size_t s = tree.slot_begin(c); s < tree.slot_end(c); ++s) {
      largest = std::max<std::size_t>(largest, sizes.at_slot(s));
    }
    if (largest < best_max) {
      best_max = largest;
      best = c;
    }
  }
  return best;
}

Vertex centroid(const FreeTree& tree) { return centroid(tree, SubtreeSizeTable(tree)); }

namespace {

std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f';
  };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

// Splits a line into whitespace-separated unsigned integers. Returns false on
// any non-numeric token.
bool parse_numbers(std::string_view line, std::vector<std::uint64_t>& out) {
  out.clear();
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    if (i == line.size()) break;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + j, value);
    if (ec != std::errc() || ptr != line.data() + j) return false;
    out.push_back(value);
    i = j;
  }
  return true;
}

}  // namespace

FreeTree parse_tree(std::string_view text) {
  std::size_t line_no = 0;
  std::size_t n = 0;
  bool have_n = false;
  std::vector<Edge> edges;
  std::vector<std::size_t> edge_lines;
  std::vector<std::uint64_t> numbers;

  while (!text.empty()) {
    const std::size_t nl = text.find('\n');
    const std::string_view raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;

    if (!parse_numbers(line, numbers)) {
      throw TreeError(TreeError::Kind::kMalformedLine, line_no,
                      "expected integers, got '" + std::string(line) + "'");
    }
    if (!have_n) {
      if (numbers.size() != 1) {
        throw TreeError(TreeError::Kind::kMalformedLine, line_no,
                        "first line must hold the vertex count");
      }
      if (numbers[0] == 0) {
        throw TreeError(TreeError::Kind::kEmpty, line_no, "vertex count must be positive");
      }
      if (numbers[0] > std::numeric_limits<Vertex>::max()) {
        throw TreeError(TreeError::Kind::kVertexOutOfRange, line_no, "vertex count too large");
      }
      n = static_cast<std::size_t>(numbers[0]);
      have_n = true;
      edges.reserve(n - 1);
      continue;
    }
    if (numbers.size() != 2) {
      throw TreeError(TreeError::Kind::kMalformedLine, line_no,
                      "expected an edge 'u v', got '" + std::string(line) + "'");
    }
    const std::uint64_t a = numbers[0];
    const std::uint64_t b = numbers[1];
    if (a < 1 || a > n || b < 1 || b > n) {
      throw TreeError(TreeError::Kind::kVertexOutOfRange, line_no,
                      "vertex out of range [1," + std::to_string(n) + "]");
    }
    if (a == b) {
      throw TreeError(TreeError::Kind::kSelfLoop, line_no,
                      "self-loop at vertex " + std::to_string(a));
    }
    if (edges.size() == n - 1) {
      throw TreeError(TreeError::Kind::kEdgeCount, line_no,
                      "more than n-1 = " + std::to_string(n - 1) + " edges");
    }
    edges.emplace_back(static_cast<Vertex>(a - 1), static_cast<Vertex>(b - 1));
    edge_lines.push_back(line_no);
  }

  if (!have_n) throw TreeError(TreeError::Kind::kEmpty, 0, "no vertex count found");
  if (edges.size() != n - 1) {
    throw TreeError(TreeError::Kind::kEdgeCount, line_no,
                    "expected " + std::to_string(n - 1) + " edges, got " +
                        std::to_string(edges.size()));
  }

  // Report duplicates with the line of the second occurrence.
  {
    std::vector<std::pair<Edge, std::size_t>> keyed;
    keyed.reserve(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const auto [a, b] = edges[i];
      keyed.push_back({{std::min(a, b), std::max(a, b)}, edge_lines[i]});
    }
    std::sort(keyed.begin(), keyed.end());
    for (std::size_t i = 1; i < keyed.size(); ++i) {
      if (keyed[i].first == keyed[i - 1].first) {
        throw TreeError(TreeError::Kind::kDuplicateEdge, keyed[i].second,
                        "duplicate edge " + std::to_string(keyed[i].first.first + 1) +
                            " " + std::to_string(keyed[i].first.second + 1));
      }
    }
  }
  return FreeTree::FromEdges(n, edges);
}

std::string format_tree(const FreeTree& tree) {
  std::ostringstream out;
  out << tree.num_vertices() << '\n';
  for (const auto& [a, b] : tree.edges()) out << a + 1 << ' ' << b + 1 << '\n';
  return out.str();
}

}  // namespace linarr
