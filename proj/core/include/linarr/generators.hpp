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

#ifndef LINARR_GENERATORS_HPP_
#define LINARR_GENERATORS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

#include "linarr/arrangement.hpp"
#include "linarr/tree.hpp"

namespace linarr {

// SplitMix64 (Steele, Lea, Flood 2014). Platform independent: the state
// advances by 0x9e3779b97f4a7c15 and each output is the standard
// xor-shift-multiply finalizer of the new state.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Integer in [0, bound), as the high 64 bits of next() * bound.
  std::uint64_t below(std::uint64_t bound) {
    __extension__ using u128 = unsigned __int128;
    return static_cast<std::uint64_t>((static_cast<u128>(next()) * bound) >> 64);
  }

 private:
  std::uint64_t state_;
};

enum class Family { kStar, kPath, kBistar, kQuasistar, kCaterpillar, kSpider };

// Parses "star", "path", "bistar", "quasistar", "caterpillar", "spider".
std::optional<Family> parse_family(std::string_view name);

// Named tree shapes, 1-based labels given below (0-based in memory).
//   star        hub 1, leaves 2..n.
//   path        1 - 2 - ... - n.
//   bistar      hubs 1 - 2; params {h1, h2} are their leaf counts
//               (h1 + h2 + 2 = n), default balanced: ceil((n-2)/2),
//               floor((n-2)/2). Hub 1's leaves come first.
//   quasistar   star at hub 1 with the edge to 2 subdivided by 3; n >= 3.
//   caterpillar params = leaf count of each backbone vertex; backbone
//               1 - ... - k, leaves numbered k+1.. in backbone order.
//   spider      params = leg lengths; center 1, legs numbered outwards one
//               after another.
// Throws std::invalid_argument if params are inconsistent with n.
FreeTree make_family(Family kind, std::size_t n, std::span<const std::size_t> params = {});

// Tree with the given Prüfer sequence (0-based labels, length n - 2).
FreeTree prufer_decode(std::size_t n, std::span<const Vertex> sequence);

// Uniformly random labeled tree: a SplitMix64-driven Prüfer sequence, each
// entry drawn with SplitMix64::below(n).
FreeTree random_tree(std::size_t n, std::uint64_t seed);

// Random caterpillar on n vertices with shuffled labels.
FreeTree random_caterpillar(std::size_t n, std::uint64_t seed);

// Random projective arrangement of rt: every vertex's children are shuffled
// and split at a random point into those left and right of it.
Arrangement random_projective_arrangement(const RootedTree& rt, std::uint64_t seed);

}  // namespace linarr

#endif  // LINARR_GENERATORS_HPP_
