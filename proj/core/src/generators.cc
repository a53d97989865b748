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

#include "linarr/generators.hpp"

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace linarr {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

template <typename T>
void shuffle(std::vector<T>& items, SplitMix64& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    std::swap(items[i - 1], items[rng.below(i)]);
  }
}

}  // namespace

std::optional<Family> parse_family(std::string_view name) {
  if (name == "star") return Family::kStar;
  if (name == "path") return Family::kPath;
  if (name == "bistar") return Family::kBistar;
  if (name == "quasistar") return Family::kQuasistar;
  if (name == "caterpillar") return Family::kCaterpillar;
  if (name == "spider") return Family::kSpider;
  return std::nullopt;
}

FreeTree make_family(Family kind, std::size_t n, std::span<const std::size_t> params) {
  require(n >= 1, "n must be positive");
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  switch (kind) {
    case Family::kStar:
      require(params.empty(), "star takes no parameters");
      for (Vertex v = 1; v < n; ++v) edges.emplace_back(0, v);
      break;

    case Family::kPath:
      require(params.empty(), "path takes no parameters");
      for (Vertex v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
      break;

    case Family::kBistar: {
      require(n >= 2, "bistar needs n >= 2");
      std::size_t h1 = (n - 2 + 1) / 2;
      std::size_t h2 = (n - 2) / 2;
      if (!params.empty()) {
        require(params.size() == 2, "bistar takes two leaf counts");
        h1 = params[0];
        h2 = params[1];
        require(h1 + h2 + 2 == n, "bistar leaf counts must sum to n - 2");
      }
      edges.emplace_back(0, 1);
      Vertex next = 2;
      for (std::size_t i = 0; i < h1; ++i) edges.emplace_back(0, next++);
      for (std::size_t i = 0; i < h2; ++i) edges.emplace_back(1, next++);
      break;
    }

    case Family::kQuasistar:
      require(params.empty(), "quasistar takes no parameters");
      require(n >= 3, "quasistar needs n >= 3");
      edges.emplace_back(0, 2);
      edges.emplace_back(2, 1);
      for (Vertex v = 3; v < n; ++v) edges.emplace_back(0, v);
      break;

    case Family::kCaterpillar: {
      require(!params.empty(), "caterpillar needs one leaf count per backbone vertex");
      const std::size_t k = params.size();
      const std::size_t total = std::accumulate(params.begin(), params.end(), k);
      require(total == n, "caterpillar has " + std::to_string(total) +
                              " vertices, expected " + std::to_string(n));
      for (Vertex v = 1; v < k; ++v) edges.emplace_back(v - 1, v);
      Vertex next = static_cast<Vertex>(k);
      for (Vertex b = 0; b < k; ++b) {
        for (std::size_t i = 0; i < params[b]; ++i) edges.emplace_back(b, next++);
      }
      break;
    }

    case Family::kSpider: {
      const std::size_t total = std::accumulate(params.begin(), params.end(), std::size_t{1});
      require(total == n, "spider has " + std::to_string(total) + " vertices, expected " +
                              std::to_string(n));
      Vertex next = 1;
      for (std::size_t len : params) {
        require(len >= 1, "spider legs must have positive length");
        Vertex prev = 0;
        for (std::size_t i = 0; i < len; ++i) {
          edges.emplace_back(prev, next);
          prev = next++;
        }
      }
      break;
    }
  }
  return FreeTree::FromEdges(n, edges);
}

FreeTree prufer_decode(std::size_t n, std::span<const Vertex> sequence) {
  require(n >= 1, "n must be positive");
  if (n == 1) return FreeTree::FromEdges(1, {});
  require(sequence.size() == n - 2, "Prüfer sequence must have length n - 2");
  std::vector<std::size_t> degree(n, 1);
  for (Vertex v : sequence) {
    require(v < n, "Prüfer entry out of range");
    ++degree[v];
  }

  // Linear-time decoding: `ptr` scans for the smallest leaf, and a freshly
  // created leaf smaller than `ptr` is consumed immediately.
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  Vertex ptr = 0;
  while (degree[ptr] != 1) ++ptr;
  Vertex leaf = ptr;
  for (Vertex v : sequence) {
    edges.emplace_back(leaf, v);
    if (--degree[v] == 1 && v < ptr) {
      leaf = v;
    } else {
      ++ptr;
      while (degree[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  // The two remaining vertices: `leaf` and n - 1.
  edges.emplace_back(leaf, static_cast<Vertex>(n - 1));
  return FreeTree::FromEdges(n, edges);
}

FreeTree random_tree(std::size_t n, std::uint64_t seed) {
  require(n >= 1, "n must be positive");
  if (n <= 2) return n == 1 ? FreeTree::FromEdges(1, {}) : make_family(Family::kPath, 2);
  SplitMix64 rng(seed);
  std::vector<Vertex> sequence(n - 2);
  for (auto& v : sequence) v = static_cast<Vertex>(rng.below(n));
  return prufer_decode(n, sequence);
}

FreeTree random_caterpillar(std::size_t n, std::uint64_t seed) {
  require(n >= 1, "n must be positive");
  SplitMix64 rng(seed);
  const std::size_t backbone = n <= 2 ? n : 1 + rng.below(n - 2);
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (Vertex v = 1; v < backbone; ++v) edges.emplace_back(v - 1, v);
  for (Vertex v = static_cast<Vertex>(backbone); v < n; ++v) {
    edges.emplace_back(static_cast<Vertex>(rng.below(backbone)), v);
  }
  std::vector<Vertex> label(n);
  std::iota(label.begin(), label.end(), Vertex{0});
  shuffle(label, rng);
  for (auto& [a, b] : edges) {
    a = label[a];
    b = label[b];
  }
  return FreeTree::FromEdges(n, edges);
}

Arrangement random_projective_arrangement(const RootedTree& rt, std::uint64_t seed) {
  const FreeTree& tree = rt.tree();
  const std::size_t n = tree.num_vertices();
  const SubtreeSizeTable sizes(tree);
  SplitMix64 rng(seed);

  struct Task {
    Vertex u;
    Vertex parent;  // == u at the root
    Position first;
  };
  std::vector<Position> position(n, 0);
  std::vector<Task> work{{rt.root(), rt.root(), 0}};
  std::vector<std::pair<Vertex, std::uint32_t>> children;
  while (!work.empty()) {
    const Task t = work.back();
    work.pop_back();
    children.clear();
    for (std::size_t s = tree.slot_begin(t.u); s < tree.slot_end(t.u); ++s) {
      const Vertex v = tree.slot_target(s);
      if (v != t.parent) children.emplace_back(v, sizes.at_slot(s));
    }
    shuffle(children, rng);
    const std::size_t split = rng.below(children.size() + 1);
    Position at = t.first;
    for (std::size_t i = 0; i < children.size(); ++i) {
      if (i == split) position[t.u] = at++;
      work.push_back({children[i].first, t.u, at});
      at += children[i].second;
    }
    if (split == children.size()) position[t.u] = at;
  }
  return Arrangement::FromPositions(std::move(position));
}

}  // namespace linarr
