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

#include "commands.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "linarr/generators.hpp"
#include "linarr/oracle.hpp"
#include "linarr/planar.hpp"
#include "linarr/projective.hpp"

namespace linarr::cli {

namespace {

using nlohmann::json;

// Input problems (unreadable file, malformed tree or arrangement): exit 1.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Flag combinations that only turn out invalid after reading input: exit 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_source(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot open '" + path + "'");
  buf << file.rdbuf();
  return buf.str();
}

FreeTree load_tree(const std::string& path, std::istream& in) {
  const std::string text = read_source(path, in);
  try {
    return parse_tree(text);
  } catch (const TreeError& e) {
    throw InputError(path + ": " + e.what());
  }
}

Arrangement load_arrangement(const std::string& path, std::istream& in) {
  const std::string text = read_source(path, in);
  try {
    return parse_arrangement(text);
  } catch (const std::invalid_argument& e) {
    throw InputError(path + ": " + e.what());
  }
}

// --root is 1-based on the command line.
Vertex checked_root(std::size_t root, const FreeTree& tree) {
  if (root < 1 || root > tree.num_vertices()) {
    throw UsageError("--root " + std::to_string(root) + " is outside [1," +
                     std::to_string(tree.num_vertices()) + "]");
  }
  return static_cast<Vertex>(root - 1);
}

json positions_json(const Arrangement& arr) {
  json p = json::array();
  for (Vertex v = 0; v < arr.size(); ++v) p.push_back(arr.position(v) + 1);
  return p;
}

const std::map<std::string, std::string> kConstraintNames{
    {"planar", "planar"}, {"projective", "projective"}, {"none", "none"}};

}  // namespace

std::string arrangement_to_dot(const FreeTree& tree, const Arrangement& arr) {
  std::ostringstream out;
  out << "graph arrangement {\n"
      << "  layout=neato;\n"
      << "  splines=curved;\n"
      << "  node [shape=circle, fixedsize=true, width=0.4];\n";
  for (Position p = 0; p < arr.size(); ++p) {
    const Vertex v = arr.vertex_at(p);
    out << "  " << v + 1 << " [pos=\"" << p << ",0!\"];\n";
  }
  for (const auto& [u, v] : tree.edges()) {
    const Position a = arr.position(u);
    const Position b = arr.position(v);
    const Position lo = a < b ? a : b;
    const Position hi = a < b ? b : a;
    // Semicircle above the line from lo to hi, as a quadratic control point.
    out << "  " << u + 1 << " -- " << v + 1 << " [length=" << hi - lo << ", arc=\"" << lo
        << ',' << hi << "\", pos=\"" << lo << ",0 " << (lo + hi) / 2.0 << ','
        << (hi - lo) / 2.0 << ' ' << hi << ",0\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::vector<BenchRow> run_bench(const std::vector<std::size_t>& sizes, std::size_t trials,
                                std::uint64_t seed) {
  std::vector<BenchRow> rows;
  for (std::size_t size : sizes) {
    std::vector<double> samples;
    samples.reserve(trials);
    for (std::size_t t = 0; t < trials; ++t) {
      const FreeTree tree = random_tree(size, seed + t);
      const auto start = std::chrono::steady_clock::now();
      const PlanarSolution sol = max_planar(tree);
      const auto stop = std::chrono::steady_clock::now();
      if (sol.arrangement.size() != size) throw std::logic_error("bench: bad solve");
      samples.push_back(
          std::chrono::duration<double, std::nano>(stop - start).count());
    }
    BenchRow row{size, 0, 0};
    for (double s : samples) row.mean_ns += s;
    row.mean_ns /= static_cast<double>(samples.size());
    for (double s : samples) row.std_ns += (s - row.mean_ns) * (s - row.mean_ns);
    row.std_ns = samples.size() > 1
                     ? std::sqrt(row.std_ns / static_cast<double>(samples.size() - 1))
                     : 0.0;
    rows.push_back(row);
  }
  return rows;
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Maximum and minimum linear arrangements of trees under planarity and "
               "projectivity"};
  app.name(args.empty() ? "linarr" : args[0]);
  app.require_subcommand(1);

  bool json_out = false;

  // solve
  std::string solve_task = "maxla";
  std::string solve_constraint;
  std::optional<std::size_t> solve_root;
  std::string solve_input;
  std::string solve_dot;
  CLI::App* solve = app.add_subcommand("solve", "Solve maxla/minla under a constraint");
  solve->add_option("--task", solve_task, "maxla or minla")
      ->check(CLI::IsMember({"maxla", "minla"}));
  solve->add_option("--constraint", solve_constraint, "projective or planar")
      ->required()
      ->check(CLI::IsMember({"projective", "planar"}));
  solve->add_option("--root", solve_root, "root vertex (1-based), projective only");
  solve->add_option("--dot", solve_dot, "write a Graphviz file of the arrangement");
  solve->add_flag("--json", json_out, "machine-readable output");
  solve->add_option("input", solve_input, "tree file, or - for stdin")->required();

  // check
  std::string check_constraint;
  std::optional<std::size_t> check_root;
  std::string check_tree;
  std::string check_arr;
  CLI::App* check = app.add_subcommand("check", "Validate an arrangement and report its cost");
  check->add_option("--constraint", check_constraint, "planar, projective or none")
      ->required()
      ->check(CLI::IsMember(kConstraintNames));
  check->add_option("--root", check_root, "root vertex (1-based), projective only");
  check->add_flag("--json", json_out, "machine-readable output");
  check->add_option("tree", check_tree, "tree file, or -")->required();
  check->add_option("arrangement", check_arr, "arrangement file, or -")->required();

  // oracle
  std::string oracle_constraint;
  std::string oracle_objective = "max";
  std::optional<std::size_t> oracle_root;
  std::string oracle_input;
  CLI::App* oracle = app.add_subcommand("oracle", "Exhaustive optimum over all n! arrangements");
  oracle->add_option("--constraint", oracle_constraint, "planar, projective or none")
      ->required()
      ->check(CLI::IsMember(kConstraintNames));
  oracle->add_option("--objective", oracle_objective, "max or min")
      ->check(CLI::IsMember({"max", "min"}));
  oracle->add_option("--root", oracle_root, "root vertex (1-based), projective only");
  oracle->add_flag("--json", json_out, "machine-readable output");
  oracle->add_option("input", oracle_input, "tree file, or -")->required();

  // gen
  std::string gen_kind;
  std::size_t gen_n = 0;
  std::uint64_t gen_seed = 0;
  std::vector<std::size_t> gen_params;
  CLI::App* gen = app.add_subcommand("gen", "Write a generated tree to standard output");
  gen->add_option("kind", gen_kind,
                  "star, path, bistar, quasistar, caterpillar, spider, random, "
                  "random-caterpillar")
      ->required();
  gen->add_option("n", gen_n, "vertex count")->required()->check(CLI::PositiveNumber);
  gen->add_option("--seed", gen_seed, "seed for random kinds");
  gen->add_option("--params", gen_params,
                  "family parameters: leaf counts (bistar, caterpillar) or leg lengths "
                  "(spider)")
      ->delimiter(',');
  gen->add_flag("--json", json_out, "machine-readable output");

  // bench
  std::vector<std::size_t> bench_sizes{1000, 10000, 100000};
  std::size_t bench_trials = 3;
  std::uint64_t bench_seed = 1;
  CLI::App* bench = app.add_subcommand("bench", "Time max_planar on random trees");
  bench->add_option("--sizes", bench_sizes, "comma-separated vertex counts")->delimiter(',');
  bench->add_option("--trials", bench_trials, "trials per size")->check(CLI::PositiveNumber);
  bench->add_option("--seed", bench_seed, "base seed");
  bench->add_flag("--json", json_out, "machine-readable output");

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  if (args.empty()) argv.push_back("linarr");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*solve) {
      const bool projective = solve_constraint == "projective";
      if (projective && !solve_root) throw UsageError("projective needs --root");
      if (!projective && solve_root) throw UsageError("--root is only valid with projective");
      const FreeTree tree = load_tree(solve_input, in);
      const bool maximize = solve_task == "maxla";

      Arrangement arr;
      Cost d = 0;
      std::optional<Vertex> chosen_root;
      if (projective) {
        const RootedTree rt(tree, checked_root(*solve_root, tree));
        Solution sol = maximize ? max_projective(rt) : min_projective(rt);
        arr = std::move(sol.arrangement);
        d = sol.cost;
      } else {
        PlanarSolution sol = maximize ? max_planar(tree) : min_planar(tree);
        arr = std::move(sol.arrangement);
        d = sol.cost;
        chosen_root = sol.root;
      }

      if (!solve_dot.empty()) {
        std::ofstream dot(solve_dot);
        if (!dot) throw InputError("cannot write '" + solve_dot + "'");
        dot << arrangement_to_dot(tree, arr);
      }
      if (json_out) {
        json doc{{"task", solve_task},
                 {"constraint", solve_constraint},
                 {"D", d},
                 {"arrangement", {{"n", arr.size()}, {"position", positions_json(arr)}}}};
        if (chosen_root) doc["root"] = *chosen_root + 1;
        out << doc.dump() << '\n';
      } else {
        out << "D=" << d << '\n' << format_arrangement(arr) << '\n';
        if (chosen_root) out << "root=" << *chosen_root + 1 << '\n';
      }
      return kExitOk;
    }

    if (*check) {
      const bool projective = check_constraint == "projective";
      if (projective && !check_root) throw UsageError("projective needs --root");
      if (!projective && check_root) throw UsageError("--root is only valid with projective");
      if (check_tree == "-" && check_arr == "-") {
        throw UsageError("only one of tree and arrangement may come from stdin");
      }
      const FreeTree tree = load_tree(check_tree, in);
      const Arrangement arr = load_arrangement(check_arr, in);
      if (arr.size() != tree.num_vertices()) {
        throw InputError("arrangement has " + std::to_string(arr.size()) +
                         " positions, tree has " + std::to_string(tree.num_vertices()) +
                         " vertices");
      }
      bool valid = true;
      if (check_constraint == "planar") {
        valid = is_planar(tree, arr);
      } else if (projective) {
        valid = is_projective(RootedTree(tree, checked_root(*check_root, tree)), arr);
      }
      const Cost d = cost(tree, arr);
      if (json_out) {
        out << json{{"valid", valid}, {"constraint", check_constraint}, {"D", d}}.dump()
            << '\n';
      } else {
        out << (valid ? "valid" : "invalid") << '\n' << "D=" << d << '\n';
      }
      return valid ? kExitOk : kExitViolation;
    }

    if (*oracle) {
      const bool projective = oracle_constraint == "projective";
      if (projective && !oracle_root) throw UsageError("projective needs --root");
      if (!projective && oracle_root) throw UsageError("--root is only valid with projective");
      const FreeTree tree = load_tree(oracle_input, in);
      if (tree.num_vertices() > kOracleMaxVertices) {
        throw UsageError("oracle supports at most " + std::to_string(kOracleMaxVertices) +
                         " vertices");
      }
      Constraint constraint = Constraint::Unconstrained();
      if (oracle_constraint == "planar") constraint = Constraint::Planar();
      if (projective) constraint = Constraint::Projective(checked_root(*oracle_root, tree));
      const OracleResult res = exhaustive(
          tree, constraint, oracle_objective == "max" ? Objective::kMax : Objective::kMin);
      if (json_out) {
        out << json{{"constraint", oracle_constraint},
                    {"objective", oracle_objective},
                    {"D", res.cost},
                    {"count", res.num_optima},
                    {"witness",
                     {{"n", res.witness.size()}, {"position", positions_json(res.witness)}}}}
                   .dump()
            << '\n';
      } else {
        out << "D=" << res.cost << " count=" << res.num_optima << '\n'
            << format_arrangement(res.witness) << '\n';
      }
      return kExitOk;
    }

    if (*gen) {
      FreeTree tree = FreeTree::FromEdges(1, {});
      try {
        if (gen_kind == "random") {
          tree = random_tree(gen_n, gen_seed);
        } else if (gen_kind == "random-caterpillar") {
          tree = random_caterpillar(gen_n, gen_seed);
        } else if (const auto family = parse_family(gen_kind)) {
          tree = make_family(*family, gen_n, gen_params);
        } else {
          throw UsageError("unknown tree kind '" + gen_kind + "'");
        }
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      if (json_out) {
        json edges = json::array();
        for (const auto& [a, b] : tree.edges()) edges.push_back({a + 1, b + 1});
        out << json{{"n", tree.num_vertices()}, {"edges", edges}}.dump() << '\n';
      } else {
        out << format_tree(tree);
      }
      return kExitOk;
    }

    if (*bench) {
      const auto rows = run_bench(bench_sizes, bench_trials, bench_seed);
      if (json_out) {
        json doc = json::array();
        for (const auto& r : rows) {
          doc.push_back({{"size", r.size}, {"mean_ns", r.mean_ns}, {"std_ns", r.std_ns}});
        }
        out << doc.dump() << '\n';
      } else {
        out << "size mean_ns std_ns\n";
        for (const auto& r : rows) {
          out << r.size << ' ' << static_cast<std::uint64_t>(r.mean_ns) << ' '
              << static_cast<std::uint64_t>(r.std_ns) << '\n';
        }
      }
      return kExitOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitUsage;
}

}  // namespace linarr::cli
