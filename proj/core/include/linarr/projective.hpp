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

#ifndef LINARR_PROJECTIVE_HPP_
#define LINARR_PROJECTIVE_HPP_

#include "linarr/arrangement.hpp"
#include "linarr/tree.hpp"

namespace linarr {

struct Solution {
  Arrangement arrangement;
  Cost cost = 0;
};

// Maximum projective arrangement in O(n).
//
// Every subtree occupies a contiguous interval with its root at one end and
// its children's subtrees laid out next to it, largest first. Children
// branch towards the opposite side from their parent. The root of the whole
// tree is placed at the last position.
Solution max_projective(const RootedTree& rt);
Solution max_projective(const RootedTree& rt, const SortedChildLists& lists);

// Cost of a maximum projective arrangement, without building it: every
// vertex contributes sum_i (k - i + 1) * size_i over its k children sorted
// non-increasingly by size (1-based i).
Cost max_projective_cost(const RootedTree& rt, const SortedChildLists& lists);
Cost max_projective_cost(const RootedTree& rt);

// Minimum projective arrangement in O(n). Children subtrees alternate sides of
// their parent from the outside in: the largest at the far end, the second
// largest at the near end, and so on, so the smallest ends up adjacent to the
// parent. "Far" is the side away from the grandparent.
Solution min_projective(const RootedTree& rt);
Solution min_projective(const RootedTree& rt, const SortedChildLists& lists);

}  // namespace linarr

#endif  // LINARR_PROJECTIVE_HPP_
