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

#include <gtest/gtest.h>

#include <set>

#include "linarr/generators.hpp"
#include "test_util.hpp"

namespace linarr {
namespace {

using testing::Tree1;
using testing::V;

struct Expected {
  const char* name;
  FreeTree tree;
  Constraint constraint;
  Cost max;
  std::uint64_t max_count;
  Cost min;
  std::uint64_t min_count;
};

// Values from a separate brute force over all n! orders.
std::vector<Expected> ExpectedTable() {
  const std::size_t legs[] = {2, 2, 2};
  const FreeTree spider = make_family(Family::kSpider, 7, legs);
  const FreeTree s5 = make_family(Family::kStar, 5);
  const FreeTree s4 = make_family(Family::kStar, 4);
  const FreeTree l3 = make_family(Family::kPath, 3);
  const FreeTree binary = Tree1(7, {{1, 2}, {1, 3}, {2, 4}, {2, 5}, {3, 6}, {3, 7}});
  return {
      {"spider_projective", spider, Constraint::Projective(0), 15, 12, 8, 12},
      {"spider_planar", spider, Constraint::Planar(), 19, 12, 8, 12},
      {"s5_projective", s5, Constraint::Projective(0), 10, 48, 6, 24},
      {"s5_planar", s5, Constraint::Planar(), 10, 48, 6, 24},
      {"s4_planar", s4, Constraint::Planar(), 6, 12, 4, 12},
      {"s4_unconstrained", s4, Constraint::Unconstrained(), 6, 12, 4, 12},
      {"l3_unconstrained", l3, Constraint::Unconstrained(), 3, 4, 2, 2},
      {"l3_planar", l3, Constraint::Planar(), 3, 4, 2, 2},
      {"l3_projective_end", l3, Constraint::Projective(V(1)), 3, 2, 2, 2},
      {"l3_projective_center", l3, Constraint::Projective(V(2)), 3, 4, 2, 2},
      {"binary_projective", binary, Constraint::Projective(0), 15, 16, 8, 32},
      {"binary_planar", binary, Constraint::Planar(), 21, 16, 8, 32},
  };
}

bool Admissible(const FreeTree& t, const Constraint& c, const Arrangement& arr) {
  switch (c.kind) {
    case ConstraintKind::kUnconstrained:
      return true;
    case ConstraintKind::kPlanar:
      return is_planar(t, arr);
    case ConstraintKind::kProjective:
      return is_projective(RootedTree(t, *c.root), arr);
  }
  return false;
}

TEST(ExhaustiveTest, FrozenValues) {
  for (const Expected& e : ExpectedTable()) {
    SCOPED_TRACE(e.name);
    const OracleResult hi = exhaustive(e.tree, e.constraint, Objective::kMax);
    EXPECT_EQ(hi.cost, e.max);
    EXPECT_EQ(hi.num_optima, e.max_count);
    EXPECT_EQ(cost(e.tree, hi.witness), e.max);
    EXPECT_TRUE(Admissible(e.tree, e.constraint, hi.witness));
    const OracleResult lo = exhaustive(e.tree, e.constraint, Objective::kMin);
    EXPECT_EQ(lo.cost, e.min);
    EXPECT_EQ(lo.num_optima, e.min_count);
    EXPECT_EQ(cost(e.tree, lo.witness), e.min);
    EXPECT_TRUE(Admissible(e.tree, e.constraint, lo.witness));
  }
}

TEST(ExhaustiveTest, WitnessIsLexicographicallyFirst) {
  const FreeTree l3 = make_family(Family::kPath, 3);
  const OracleResult r = exhaustive(l3, Constraint::Unconstrained(), Objective::kMax);
  EXPECT_EQ(r.witness, Arrangement::FromOrder({0, 2, 1}));
}

TEST(ExhaustiveTest, TinyTrees) {
  const FreeTree edge = make_family(Family::kPath, 2);
  for (const Constraint& c :
       {Constraint::Unconstrained(), Constraint::Planar(), Constraint::Projective(1)}) {
    const OracleResult r = exhaustive(edge, c, Objective::kMin);
    EXPECT_EQ(r.cost, 1u);
    EXPECT_EQ(r.num_optima, 2u);
  }
  const OracleResult single =
      exhaustive(FreeTree::FromEdges(1, {}), Constraint::Planar(), Objective::kMax);
  EXPECT_EQ(single.cost, 0u);
  EXPECT_EQ(single.num_optima, 1u);
}

TEST(ExhaustiveTest, Errors) {
  EXPECT_THROW(exhaustive(make_family(Family::kPath, 11), Constraint::Planar(), Objective::kMax),
               std::invalid_argument);
  const FreeTree l3 = make_family(Family::kPath, 3);
  EXPECT_THROW(exhaustive(l3, Constraint{ConstraintKind::kProjective, std::nullopt},
                          Objective::kMax),
               std::invalid_argument);
  EXPECT_THROW(exhaustive(l3, Constraint::Projective(3), Objective::kMax),
               std::invalid_argument);
}

TEST(ExhaustiveTest, ConstraintsNest) {
  for (std::size_t n = 2; n <= 7; ++n) {
    for (const FreeTree& t : all_free_trees(n)) {
      const OracleResult free_hi = exhaustive(t, Constraint::Unconstrained(), Objective::kMax);
      const OracleResult free_lo = exhaustive(t, Constraint::Unconstrained(), Objective::kMin);
      const OracleResult plan_hi = exhaustive(t, Constraint::Planar(), Objective::kMax);
      const OracleResult plan_lo = exhaustive(t, Constraint::Planar(), Objective::kMin);
      ASSERT_GE(free_hi.cost, plan_hi.cost);
      ASSERT_LE(free_lo.cost, plan_lo.cost);
      for (const OracleResult* r : {&free_hi, &free_lo, &plan_hi, &plan_lo}) {
        // Reversal maps optima to distinct optima.
        ASSERT_EQ(r->num_optima % 2, 0u);
      }
      for (Vertex root = 0; root < n; ++root) {
        const OracleResult hi = exhaustive(t, Constraint::Projective(root), Objective::kMax);
        const OracleResult lo = exhaustive(t, Constraint::Projective(root), Objective::kMin);
        ASSERT_GE(plan_hi.cost, hi.cost);
        ASSERT_LE(plan_lo.cost, lo.cost);
        ASSERT_EQ(hi.num_optima % 2, 0u);
        ASSERT_EQ(lo.num_optima % 2, 0u);
      }
    }
  }
}

TEST(AllFreeTreesTest, KnownCounts) {
  const std::size_t expected[] = {1, 1, 1, 2, 3, 6, 11, 23, 47, 106};
  for (std::size_t n = 1; n <= 10; ++n) {
    const auto shapes = all_free_trees(n);
    EXPECT_EQ(shapes.size(), expected[n - 1]) << n;
    std::set<std::string> forms;
    for (const FreeTree& t : shapes) {
      EXPECT_EQ(t.num_vertices(), n);
      forms.insert(canonical_form(t));
    }
    EXPECT_EQ(forms.size(), shapes.size());
  }
  EXPECT_THROW(all_free_trees(0), std::invalid_argument);
  EXPECT_THROW(all_free_trees(11), std::invalid_argument);
}

TEST(AllFreeTreesTest, CoversEveryLabeledTree) {
  // Every Prüfer sequence decodes to one of the enumerated shapes.
  for (std::size_t n = 3; n <= 7; ++n) {
    std::set<std::string> shapes;
    for (const FreeTree& t : all_free_trees(n)) shapes.insert(canonical_form(t));
    std::set<std::string> decoded;
    std::vector<Vertex> seq(n - 2, 0);
    while (true) {
      decoded.insert(canonical_form(prufer_decode(n, seq)));
      std::size_t i = 0;
      while (i < seq.size() && ++seq[i] == n) seq[i++] = 0;
      if (i == seq.size()) break;
    }
    EXPECT_EQ(decoded, shapes) << n;
  }
}

TEST(CanonicalFormTest, InvariantUnderRelabeling) {
  SplitMix64 rng(17);
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const std::size_t n = 1 + seed % 30;
    const FreeTree t = random_tree(n, seed);
    std::vector<Vertex> label(n);
    for (Vertex v = 0; v < n; ++v) label[v] = v;
    for (std::size_t i = n; i > 1; --i) std::swap(label[i - 1], label[rng.below(i)]);
    std::vector<Edge> edges;
    for (const auto& [a, b] : t.edges()) edges.emplace_back(label[a], label[b]);
    ASSERT_EQ(canonical_form(FreeTree::FromEdges(n, edges)), canonical_form(t));
  }
  EXPECT_NE(canonical_form(make_family(Family::kPath, 4)),
            canonical_form(make_family(Family::kStar, 4)));
}

}  // namespace
}  // namespace linarr
