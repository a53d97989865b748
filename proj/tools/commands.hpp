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

#ifndef LINARR_TOOLS_COMMANDS_HPP_
#define LINARR_TOOLS_COMMANDS_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "linarr/arrangement.hpp"
#include "linarr/tree.hpp"

namespace linarr::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;       // I/O or parse failure
inline constexpr int kExitUsage = 2;       // bad flags or arguments
inline constexpr int kExitViolation = 3;   // arrangement breaks the constraint

// Runs the command line `args` (args[0] is the program name). '-' as a file
// name reads `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

struct BenchRow {
  std::size_t size = 0;
  double mean_ns = 0;
  double std_ns = 0;
};

// Times max_planar on random_tree(size, seed + trial) for each size. Trials
// run sequentially; tree generation is excluded from the timing.
std::vector<BenchRow> run_bench(const std::vector<std::size_t>& sizes, std::size_t trials,
                                std::uint64_t seed);

// Graphviz description of an arrangement: vertices pinned on a line in
// arrangement order, edges drawn as arcs above it.
std::string arrangement_to_dot(const FreeTree& tree, const Arrangement& arr);

}  // namespace linarr::cli

#endif  // LINARR_TOOLS_COMMANDS_HPP_
