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

#include "linarr/arrangement.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace linarr {

namespace {

void check_sizes(const FreeTree& tree, const Arrangement& arr) {
  if (tree.num_vertices() != arr.size()) {
    throw std::invalid_argument("arrangement has " + std::to_string(arr.size()) +
                                " vertices but the tree has " +
                                std::to_string(tree.num_vertices()));
  }
}

}  // namespace

Arrangement Arrangement::FromPositions(std::vector<Position> position) {
  const std::size_t n = position.size();
  std::vector<Vertex> order(n, 0);
  std::vector<char> taken(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    const Position p = position[v];
    if (p >= n || taken[p]) {
      throw std::invalid_argument("positions are not a permutation of [1," +
                                  std::to_string(n) + "]");
    }
    taken[p] = 1;
    order[p] = v;
  }
  Arrangement arr;
  arr.position_ = std::move(position);
  arr.order_ = std::move(order);
  return arr;
}

Arrangement Arrangement::FromOrder(std::vector<Vertex> order) {
  const std::size_t n = order.size();
  std::vector<Position> position(n, 0);
  std::vector<char> taken(n, 0);
  for (Position p = 0; p < n; ++p) {
    const Vertex v = order[p];
    if (v >= n || taken[v]) {
      throw std::invalid_argument("order is not a permutation of the vertices");
    }
    taken[v] = 1;
    position[v] = p;
  }
  Arrangement arr;
  arr.position_ = std::move(position);
  arr.order_ = std::move(order);
  return arr;
}

Arrangement Arrangement::Identity(std::size_t n) {
  std::vector<Position> position(n);
  std::iota(position.begin(), position.end(), Position{0});
  Arrangement arr;
  arr.order_.assign(position.begin(), position.end());
  arr.position_ = std::move(position);
  return arr;
}

Cost cost(const FreeTree& tree, const Arrangement& arr) {
  check_sizes(tree, arr);
  Cost total = 0;
  for (const auto& [u, v] : tree.edges()) {
    const Position a = arr.position(u);
    const Position b = arr.position(v);
    total += a < b ? b - a : a - b;
  }
  return total;
}

bool is_planar(const FreeTree& tree, const Arrangement& arr) {
  check_sizes(tree, arr);
  const std::size_t n = tree.num_vertices();
  if (n < 4) return true;

  // Intervals bucketed by left end, each bucket ordered by decreasing right
  // end (longest first), via two stable counting passes.
  struct Interval {
    Position lo;
    Position hi;
  };
  std::vector<Interval> intervals;
  intervals.reserve(tree.num_edges());
  for (const auto& [u, v] : tree.edges()) {
    const Position a = arr.position(u);
    const Position b = arr.position(v);
    intervals.push_back({std::min(a, b), std::max(a, b)});
  }
  std::vector<std::size_t> count(n + 1, 0);
  std::vector<Interval> by_hi(intervals.size());
  for (const auto& iv : intervals) ++count[n - 1 - iv.hi + 1];
  for (std::size_t i = 1; i <= n; ++i) count[i] += count[i - 1];
  for (const auto& iv : intervals) by_hi[count[n - 1 - iv.hi]++] = iv;
  std::fill(count.begin(), count.end(), 0);
  for (const auto& iv : by_hi) ++count[iv.lo + 1];
  for (std::size_t i = 1; i <= n; ++i) count[i] += count[i - 1];
  std::vector<Interval> sorted(intervals.size());
  for (const auto& iv : by_hi) sorted[count[iv.lo]++] = iv;

  // Sweep. The stack holds open intervals with non-increasing right ends
  // from bottom to top; an interval that would break this order crosses the
  // one on top.
  std::vector<Position> open;
  std::size_t next = 0;
  for (Position p = 0; p < n; ++p) {
    while (!open.empty() && open.back() == p) open.pop_back();
    for (; next < sorted.size() && sorted[next].lo == p; ++next) {
      if (!open.empty() && open.back() < sorted[next].hi) return false;
      open.push_back(sorted[next].hi);
    }
  }
  return true;
}

bool is_planar_pairwise(const FreeTree& tree, const Arrangement& arr) {
  check_sizes(tree, arr);
  const auto edges = tree.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    Position a = arr.position(edges[i].first);
    Position b = arr.position(edges[i].second);
    if (a > b) std::swap(a, b);
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      Position c = arr.position(edges[j].first);
      Position d = arr.position(edges[j].second);
      if (c > d) std::swap(c, d);
      if ((a < c && c < b && b < d) || (c < a && a < d && d < b)) return false;
    }
  }
  return true;
}

bool is_projective(const RootedTree& rt, const Arrangement& arr) {
  const FreeTree& tree = rt.tree();
  if (!is_planar(tree, arr)) return false;
  const Position r = arr.position(rt.root());
  for (const auto& [u, v] : tree.edges()) {
    const Position a = std::min(arr.position(u), arr.position(v));
    const Position b = std::max(arr.position(u), arr.position(v));
    if (a < r && r < b) return false;
  }
  return true;
}

Arrangement reverse(const Arrangement& arr) {
  std::vector<Vertex> order(arr.order().rbegin(), arr.order().rend());
  return Arrangement::FromOrder(std::move(order));
}

std::string format_arrangement(const Arrangement& arr) {
  std::string out;
  for (std::size_t v = 0; v < arr.size(); ++v) {
    if (v != 0) out += ' ';
    out += std::to_string(arr.position(static_cast<Vertex>(v)) + 1);
  }
  return out;
}

std::string arrangement_to_json(const Arrangement& arr) {
  nlohmann::json doc;
  doc["n"] = arr.size();
  auto& position = doc["position"] = nlohmann::json::array();
  for (std::size_t v = 0; v < arr.size(); ++v) {
    position.push_back(arr.position(static_cast<Vertex>(v)) + 1);
  }
  return doc.dump();
}

Arrangement parse_arrangement(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  std::vector<Position> position;
  if (first != std::string_view::npos && text[first] == '{') {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw std::invalid_argument(std::string("malformed arrangement JSON: ") + e.what());
    }
    if (!doc.contains("position") || !doc["position"].is_array()) {
      throw std::invalid_argument("arrangement JSON lacks a 'position' array");
    }
    for (const auto& p : doc["position"]) {
      if (!p.is_number_unsigned() || p.get<std::uint64_t>() == 0) {
        throw std::invalid_argument("positions must be integers >= 1");
      }
      position.push_back(static_cast<Position>(p.get<std::uint64_t>() - 1));
    }
    if (doc.contains("n") &&
        (!doc["n"].is_number_unsigned() || doc["n"].get<std::uint64_t>() != position.size())) {
      throw std::invalid_argument("'n' does not match the number of positions");
    }
  } else {
    std::size_t i = 0;
    while (i < text.size()) {
      while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
      if (i == text.size()) break;
      std::size_t j = i;
      while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
      std::uint64_t value = 0;
      const auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + j, value);
      if (ec != std::errc() || ptr != text.data() + j || value == 0 ||
          value > UINT32_MAX) {
        throw std::invalid_argument("bad position '" + std::string(text.substr(i, j - i)) +
                                    "'");
      }
      position.push_back(static_cast<Position>(value - 1));
      i = j;
    }
  }
  return Arrangement::FromPositions(std::move(position));
}

}  // namespace linarr
