#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "myerson/allocation.hpp"
#include "myerson/game.hpp"
#include "myerson/graph.hpp"

namespace myerson {

enum class BenchAlg { permutations, hybrid, connected };

BenchAlg bench_alg_from_string(std::string_view name);
std::string to_string(BenchAlg alg);

// A trial budget: either a fixed number of samples or a wall-time slice in
// seconds (checked between batches of 256 samples).
struct Budget {
  enum class Kind { samples, wall_time };
  Kind kind = Kind::samples;
  double amount = 0.0;

  static Budget samples(std::uint64_t count);
  static Budget wall_time(double seconds);
};

// One benchmark measurement. graph_label and game_label carry the model /
// type with their parameters; l1_error compares against the exact value.
struct TrialRecord {
  std::string alg;
  std::string graph_label;
  std::string game_label;
  int n = 0;
  std::uint64_t seed = 0;
  std::string budget_kind;
  double budget = 0.0;
  std::uint64_t samples_used = 0;
  std::int64_t elapsed_ns = 0;
  double error_l1 = 0.0;
};

// Runs one estimator against one instance until the budget is exhausted and
// scores the final estimate against the exact allocation.
TrialRecord run_trial(BenchAlg alg, int exact_levels, const Graph& g,
                      const CharacteristicFunction& v,
                      const Allocation& exact, Budget budget,
                      std::uint64_t seed);

// A full benchmark grid: every (graph, game, algorithm, budget, seed)
// combination over one fixed graph and one fixed game instance per cell.
struct BenchConfig {
  int n = 15;
  std::vector<std::pair<GraphModel, GraphParams>> graphs;
  std::vector<GameType> games;
  std::vector<std::pair<BenchAlg, int>> algs;  // algorithm + exact levels
  std::vector<Budget> budgets;
  int trials = 30;
  std::uint64_t graph_seed = 1;
  std::uint64_t game_seed = 1;
  std::uint64_t sampler_seed_base = 1;
  double max_gain = 3.0;
  double max_singleton = 1.0;
  double size_exponent = 2.0;
};

// Scale-free graphs with all three random game types at wall-time budgets.
BenchConfig scale_free_grid();
// Two supplementary blocks: cycle graphs at fixed sample budgets, sparse
// random graphs at wall-time budgets.
std::vector<BenchConfig> supplementary_grids();

std::vector<TrialRecord> run_bench(const BenchConfig& config);

// CSV round-trip. Header:
//   alg,graph_model,game_type,n,seed,budget_kind,budget,samples,elapsed_ns,error_l1
std::string bench_csv(const std::vector<TrialRecord>& records);
std::vector<TrialRecord> parse_bench_csv(std::string_view text);

// Convenience: run_bench + bench_csv.
std::string bench_suite(const BenchConfig& config);

}  // namespace myerson
