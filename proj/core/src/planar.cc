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

#include "linarr/planar.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace linarr {

EdgeRecordTable::EdgeRecordTable(const FreeTree& tree, const SubtreeSizeTable& sizes)
    : tree_(&tree) {
  const std::size_t n = tree.num_vertices();
  const std::size_t m2 = tree.num_slots();
  offsets_.assign(n + 1, 0);
  for (Vertex u = 0; u < n; ++u) offsets_[u + 1] = offsets_[u] + tree.degree(u);
  records_.resize(m2);
  rank_of_slot_.assign(m2, 0);
  if (m2 == 0) return;

  // Stable counting sort by key in [0, n), emitting items in key order.
  auto counting_sort = [n](auto& items, auto key) {
    std::vector<std::size_t> count(n + 1, 0);
    for (const auto& it : items) ++count[key(it) + 1];
    for (std::size_t i = 1; i <= n; ++i) count[i] += count[i - 1];
    std::remove_reference_t<decltype(items)> out(items.size());
    for (const auto& it : items) out[count[key(it)]++] = it;
    items = std::move(out);
  };

  // All directed edges, largest subtree first. Slots are enumerated by
  // (u asc, v asc), so ties keep ascending neighbor id.
  struct Directed {
    Vertex u;
    Vertex v;
    std::uint32_t size;
    std::size_t slot;
  };
  std::vector<Directed> all;
  all.reserve(m2);
  for (Vertex u = 0; u < n; ++u) {
    for (std::size_t s = tree.slot_begin(u); s < tree.slot_end(u); ++s) {
      all.push_back({u, tree.slot_target(s), sizes.at_slot(s), s});
    }
  }
  counting_sort(all, [n](const Directed& d) { return n - d.size; });

  // First pass: neighbor, size, rank and prefix are final. Reverse ranks are
  // filled in later from `pending`, which holds, for the record (v, u), the
  // rank of v in u's list.
  struct Pending {
    Vertex owner;  // v
    std::uint32_t size;  // s_v(u) = n - s_u(v)
    std::uint32_t rank;  // rank of v in u's list
  };
  std::vector<Pending> pending;
  pending.reserve(m2);
  std::vector<std::size_t> filled(n, 0);
  for (const Directed& d : all) {
    const std::size_t k = filled[d.u]++;
    EdgeRecord& rec = records_[offsets_[d.u] + k];
    rec.neighbor = d.v;
    rec.size = d.size;
    rec.rank = static_cast<std::uint32_t>(k);
    rec.prefix = d.size + (k == 0 ? 0 : records_[offsets_[d.u] + k - 1].prefix);
    rank_of_slot_[d.slot] = rec.rank;
    pending.push_back({d.v, static_cast<std::uint32_t>(n - d.size), rec.rank});
  }

  // Second pass. After sorting `pending` the same way, the entries owned by v
  // come in the order of v's records. Entries tied on size all carry rank 0
  // (two equal subtrees hanging off v leave the rest of the tree strictly
  // larger than either), so their relative order is irrelevant.
  counting_sort(pending, [n](const Pending& p) { return n - p.size; });
  std::fill(filled.begin(), filled.end(), 0);
  for (const Pending& p : pending) {
    records_[offsets_[p.owner] + filled[p.owner]++].reverse_rank = p.rank;
  }
}

const EdgeRecord& EdgeRecordTable::record(Vertex u, Vertex v) const {
  const std::size_t slot = tree_->find_slot(u, v);
  if (slot == tree_->num_slots()) {
    throw std::invalid_argument("not an edge: " + std::to_string(u + 1) + " " +
                                std::to_string(v + 1));
  }
  return records_[offsets_[u] + rank_of_slot_[slot]];
}

EdgeRecordTable build_edge_records(const FreeTree& tree, const SubtreeSizeTable& sizes) {
  return EdgeRecordTable(tree, sizes);
}

namespace {

// Contribution of the edge (u, v) to D(T^u) beyond D(T^u \ T_v) + D(T_v):
// (deg(u) - j) * s_u(v) + sum of the j largest sizes, with j = rank + 1.
std::int64_t edge_gain(std::size_t degree, const EdgeRecord& rec) {
  return static_cast<std::int64_t>(degree - rec.rank - 1) * rec.size +
         static_cast<std::int64_t>(rec.prefix);
}

}  // namespace

std::int64_t projective_delta(Vertex u, const EdgeRecord& uv, const EdgeRecordTable& records) {
  const Vertex v = uv.neighbor;
  const auto u_list = records.records(u);
  const auto v_list = records.records(v);
  const EdgeRecord& vu = v_list[uv.reverse_rank];
  return edge_gain(v_list.size(), vu) - edge_gain(u_list.size(), uv);
}

std::int64_t projective_delta(Vertex u, Vertex v, const EdgeRecordTable& records) {
  return projective_delta(u, records.record(u, v), records);
}

namespace {

RootChoice optimal_root(const FreeTree& tree, const SubtreeSizeTable& sizes) {
  const std::size_t n = tree.num_vertices();
  if (n <= 2) return {0, static_cast<Cost>(n - 1)};

  const EdgeRecordTable records(tree, sizes);

  Vertex start = 0;
  while (tree.is_leaf(start)) ++start;

  std::vector<Cost> value(n, 0);
  std::vector<char> visited(n, 0);
  {
    const RootedTree rt(tree, start);
    value[start] = max_projective_cost(rt, SortedChildLists(rt, sizes));
  }
  visited[start] = 1;

  std::vector<Vertex> queue{start};
  queue.reserve(n);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    for (const EdgeRecord& rec : records.records(u)) {
      const Vertex v = rec.neighbor;
      if (visited[v] || tree.is_leaf(v)) continue;
      value[v] = static_cast<Cost>(static_cast<std::int64_t>(value[u]) +
                                   projective_delta(u, rec, records));
      visited[v] = 1;
      queue.push_back(v);
    }
  }

  RootChoice best{start, value[start]};
  for (Vertex u = 0; u < n; ++u) {
    if (visited[u] && value[u] > best.cost) best = {u, value[u]};
  }
  // `start` is the smallest internal id, so ties already resolve to the
  // smallest visited vertex.
  return best;
}

}  // namespace

RootChoice find_optimal_root(const FreeTree& tree) {
  return optimal_root(tree, SubtreeSizeTable(tree));
}

PlanarSolution max_planar(const FreeTree& tree) {
  const SubtreeSizeTable sizes(tree);
  const RootChoice choice = optimal_root(tree, sizes);
  const RootedTree rt(tree, choice.root);
  Solution sol = max_projective(rt, SortedChildLists(rt, sizes));
  return {std::move(sol.arrangement), sol.cost, choice.root};
}

Cost max_planar_reference(const FreeTree& tree) {
  const SubtreeSizeTable sizes(tree);
  Cost best = 0;
  for (Vertex u = 0; u < tree.num_vertices(); ++u) {
    const RootedTree rt(tree, u);
    best = std::max(best, max_projective_cost(rt, SortedChildLists(rt, sizes)));
  }
  return best;
}

std::vector<Vertex> optimal_root_candidates(const FreeTree& tree) {
  const std::size_t n = tree.num_vertices();
  if (n < 2) throw std::invalid_argument("root candidates need at least two vertices");
  if (n == 2) return {0};
  std::vector<Vertex> out;
  for (Vertex u = 0; u < n; ++u) {
    if (tree.is_leaf(u)) continue;
    const auto nb = tree.neighbors(u);
    if (std::any_of(nb.begin(), nb.end(), [&](Vertex v) { return tree.is_leaf(v); })) {
      out.push_back(u);
    }
  }
  return out;
}

namespace {

// Number of non-leaf neighbors of an internal vertex.
std::size_t backbone_degree(const FreeTree& tree, Vertex u) {
  std::size_t k = 0;
  for (Vertex v : tree.neighbors(u)) k += tree.is_leaf(v) ? 0 : 1;
  return k;
}

}  // namespace

bool is_caterpillar(const FreeTree& tree) {
  if (tree.num_vertices() <= 2) return true;
  // What remains after deleting leaves is a subtree; it is a path iff no
  // vertex in it has more than two neighbors in it.
  for (Vertex u = 0; u < tree.num_vertices(); ++u) {
    if (!tree.is_leaf(u) && backbone_degree(tree, u) > 2) return false;
  }
  return true;
}

Solution max_planar_caterpillar(const FreeTree& tree) {
  if (!is_caterpillar(tree)) throw std::invalid_argument("tree is not a caterpillar");
  const std::size_t n = tree.num_vertices();
  if (n <= 2) {
    Solution out{Arrangement::Identity(n), 0};
    out.cost = cost(tree, out.arrangement);
    return out;
  }

  Vertex end = 0;
  while (tree.is_leaf(end) || backbone_degree(tree, end) > 1) ++end;

  std::vector<Position> position(n, 0);
  Position lo = 0;
  Position hi = static_cast<Position>(n - 1);
  bool at_left = true;
  Vertex prev = end;
  Vertex cur = end;
  while (true) {
    Vertex next = cur;
    if (at_left) {
      position[cur] = lo++;
    } else {
      position[cur] = hi--;
    }
    for (Vertex v : tree.neighbors(cur)) {
      if (tree.is_leaf(v)) {
        position[v] = at_left ? hi-- : lo++;
      } else if (v != prev) {
        next = v;
      }
    }
    if (next == cur) break;
    prev = cur;
    cur = next;
    at_left = !at_left;
  }

  Solution out{Arrangement::FromPositions(std::move(position)), 0};
  out.cost = cost(tree, out.arrangement);
  return out;
}

PlanarSolution min_planar(const FreeTree& tree) {
  const SubtreeSizeTable sizes(tree);
  const Vertex c = centroid(tree, sizes);
  const RootedTree rt(tree, c);
  Solution sol = min_projective(rt, SortedChildLists(rt, sizes));
  return {std::move(sol.arrangement), sol.cost, c};
}

}  // namespace linarr
