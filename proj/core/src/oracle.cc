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

#include "linarr/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace linarr {

namespace {

bool root_covered(const FreeTree& tree, Vertex root, const Arrangement& arr) {
  const Position r = arr.position(root);
  for (const auto& [u, v] : tree.edges()) {
    const Position a = std::min(arr.position(u), arr.position(v));
    const Position b = std::max(arr.position(u), arr.position(v));
    if (a < r && r < b) return true;
  }
  return false;
}

}  // namespace

OracleResult exhaustive(const FreeTree& tree, const Constraint& constraint,
                        Objective objective) {
  const std::size_t n = tree.num_vertices();
  if (n > kOracleMaxVertices) {
    throw std::invalid_argument("exhaustive search is limited to " +
                                std::to_string(kOracleMaxVertices) + " vertices, got " +
                                std::to_string(n));
  }
  if (constraint.kind == ConstraintKind::kProjective) {
    if (!constraint.root) throw std::invalid_argument("projective constraint needs a root");
    static_cast<void>(RootedTree(tree, *constraint.root));  // validates the root
  }

  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  OracleResult best;
  bool found = false;
  do {
    Arrangement arr = Arrangement::FromOrder(order);
    bool admissible = true;
    switch (constraint.kind) {
      case ConstraintKind::kUnconstrained:
        break;
      case ConstraintKind::kPlanar:
        admissible = is_planar_pairwise(tree, arr);
        break;
      case ConstraintKind::kProjective:
        admissible = is_planar_pairwise(tree, arr) && !root_covered(tree, *constraint.root, arr);
        break;
    }
    if (!admissible) continue;
    const Cost c = cost(tree, arr);
    const bool better = objective == Objective::kMax ? c > best.cost : c < best.cost;
    if (!found || better) {
      found = true;
      best.cost = c;
      best.witness = std::move(arr);
      best.num_optima = 1;
    } else if (c == best.cost) {
      ++best.num_optima;
    }
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

namespace {

// AHU encoding of the subtree hanging from `u` away from `parent`.
std::string encode(const FreeTree& tree, Vertex u, Vertex parent) {
  std::vector<std::string> parts;
  for (Vertex v : tree.neighbors(u)) {
    if (v != parent) parts.push_back(encode(tree, v, u));
  }
  std::sort(parts.begin(), parts.end());
  std::string out = "(";
  for (const auto& p : parts) out += p;
  out += ")";
  return out;
}

}  // namespace

std::string canonical_form(const FreeTree& tree) {
  const std::size_t n = tree.num_vertices();
  const SubtreeSizeTable sizes(tree);
  std::vector<Vertex> centers;
  std::size_t best = n;
  for (Vertex c = 0; c < n; ++c) {
    std::size_t largest = 0;
    for (std::size_t s = tree.slot_begin(c); s < tree.slot_end(c); ++s) {
      largest = std::max<std::size_t>(largest, sizes.at_slot(s));
    }
    if (largest < best) {
      best = largest;
      centers = {c};
    } else if (largest == best) {
      centers.push_back(c);
    }
  }
  // The root is its own parent sentinel: a vertex is never its own neighbor.
  std::string form = encode(tree, centers[0], centers[0]);
  if (centers.size() == 2) form = std::min(form, encode(tree, centers[1], centers[1]));
  return form;
}

std::vector<FreeTree> all_free_trees(std::size_t n) {
  if (n == 0 || n > kOracleMaxVertices) {
    throw std::invalid_argument("free tree enumeration supports 1 <= n <= " +
                                std::to_string(kOracleMaxVertices));
  }
  std::vector<FreeTree> shapes{FreeTree::FromEdges(1, {})};
  for (std::size_t k = 2; k <= n; ++k) {
    std::vector<FreeTree> next;
    std::set<std::string> seen;
    for (const FreeTree& t : shapes) {
      for (Vertex attach = 0; attach < t.num_vertices(); ++attach) {
        std::vector<Edge> edges(t.edges().begin(), t.edges().end());
        edges.emplace_back(attach, static_cast<Vertex>(k - 1));
        FreeTree grown = FreeTree::FromEdges(k, edges);
        if (seen.insert(canonical_form(grown)).second) next.push_back(std::move(grown));
      }
    }
    shapes = std::move(next);
  }
  return shapes;
}

}  // namespace linarr
