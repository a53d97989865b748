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

#include "linarr/projective.hpp"

#include <vector>

namespace linarr {

namespace {

// Which side of its parent a subtree was placed on.
enum class Side { kLeft, kRight };

constexpr Side flip(Side s) { return s == Side::kLeft ? Side::kRight : Side::kLeft; }

// Pending subtree: arrange T_u inside the closed interval [first, last].
struct Task {
  Vertex u;
  Side side;
  Position first;
  Position last;
};

}  // namespace

Solution max_projective(const RootedTree& rt, const SortedChildLists& lists) {
  const std::size_t n = rt.num_vertices();
  std::vector<Position> position(n, 0);

  // Explicit worklist: path-shaped trees with 10^6 vertices must not recurse.
  std::vector<Task> work{{rt.root(), Side::kRight, 0, static_cast<Position>(n - 1)}};
  while (!work.empty()) {
    const Task t = work.back();
    work.pop_back();
    const Side child_side = flip(t.side);
    Position used = 0;
    for (const ChildEntry& c : lists.children(t.u)) {
      if (t.side == Side::kLeft) {
        const Position first = t.first + used + 1;
        work.push_back({c.child, child_side, first, first + c.size - 1});
      } else {
        const Position last = t.last - used - 1;
        work.push_back({c.child, child_side, last - c.size + 1, last});
      }
      used += c.size;
    }
    position[t.u] = t.side == Side::kLeft ? t.first : t.last;
  }

  Solution out;
  out.arrangement = Arrangement::FromPositions(std::move(position));
  out.cost = cost(rt.tree(), out.arrangement);
  return out;
}

Solution max_projective(const RootedTree& rt) {
  const SubtreeSizeTable sizes(rt.tree());
  return max_projective(rt, SortedChildLists(rt, sizes));
}

Cost max_projective_cost(const RootedTree& rt, const SortedChildLists& lists) {
  Cost total = 0;
  for (Vertex u = 0; u < rt.num_vertices(); ++u) {
    const auto children = lists.children(u);
    Cost prefix = 0;
    for (const ChildEntry& c : children) {
      prefix += c.size;
      total += prefix;
    }
  }
  return total;
}

Cost max_projective_cost(const RootedTree& rt) {
  const SubtreeSizeTable sizes(rt.tree());
  return max_projective_cost(rt, SortedChildLists(rt, sizes));
}

Solution min_projective(const RootedTree& rt, const SortedChildLists& lists) {
  const std::size_t n = rt.num_vertices();
  std::vector<Position> position(n, 0);

  std::vector<Task> work{{rt.root(), Side::kRight, 0, static_cast<Position>(n - 1)}};
  while (!work.empty()) {
    const Task t = work.back();
    work.pop_back();
    const auto children = lists.children(t.u);

    // Children at even indices (largest, third largest, ...) go to the far
    // side, odd indices to the near side. Both sides fill from the outer end
    // of the interval inwards.
    const bool far_is_left = t.side == Side::kLeft;
    Position left_used = 0;
    Position right_used = 0;
    for (std::size_t i = 0; i < children.size(); ++i) {
      const ChildEntry& c = children[i];
      const bool to_far = i % 2 == 0;
      if (to_far == far_is_left) {
        const Position first = t.first + left_used;
        work.push_back({c.child, Side::kLeft, first, first + c.size - 1});
        left_used += c.size;
      } else {
        const Position last = t.last - right_used;
        work.push_back({c.child, Side::kRight, last - c.size + 1, last});
        right_used += c.size;
      }
    }
    position[t.u] = t.first + left_used;
  }

  Solution out;
  out.arrangement = Arrangement::FromPositions(std::move(position));
  out.cost = cost(rt.tree(), out.arrangement);
  return out;
}

Solution min_projective(const RootedTree& rt) {
  const SubtreeSizeTable sizes(rt.tree());
  return min_projective(rt, SortedChildLists(rt, sizes));
}

}  // namespace linarr
