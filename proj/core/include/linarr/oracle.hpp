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

#ifndef LINARR_ORACLE_HPP_
#define LINARR_ORACLE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "linarr/arrangement.hpp"
#include "linarr/tree.hpp"

namespace linarr {

// Brute-force ground truth over all n! arrangements.
inline constexpr std::size_t kOracleMaxVertices = 10;

enum class ConstraintKind { kUnconstrained, kPlanar, kProjective };
enum class Objective { kMax, kMin };

struct Constraint {
  ConstraintKind kind = ConstraintKind::kUnconstrained;
  std::optional<Vertex> root;  // required for kProjective

  static Constraint Unconstrained() { return {ConstraintKind::kUnconstrained, std::nullopt}; }
  static Constraint Planar() { return {ConstraintKind::kPlanar, std::nullopt}; }
  static Constraint Projective(Vertex root) { return {ConstraintKind::kProjective, root}; }
};

struct OracleResult {
  Cost cost = 0;
  Arrangement witness;          // lexicographically first optimal vertex order
  std::uint64_t num_optima = 0;  // arrangements attaining `cost`
};

// Throws std::invalid_argument when n > kOracleMaxVertices, or for a
// projective constraint without a valid root.
OracleResult exhaustive(const FreeTree& tree, const Constraint& constraint,
                        Objective objective);

// Canonical string of a free tree: AHU parenthesization rooted at a centroid.
// For bicentral trees the smaller of the two encodings is used. Equal strings
// <=> isomorphic trees.
std::string canonical_form(const FreeTree& tree);

// One representative per isomorphism class of n-vertex free trees. Classes
// are grown from the (n-1)-vertex ones by attaching a leaf everywhere and
// deduplicating by canonical_form. Throws std::invalid_argument when n is 0
// or exceeds kOracleMaxVertices.
std::vector<FreeTree> all_free_trees(std::size_t n);

}  // namespace linarr

#endif  // LINARR_ORACLE_HPP_
