#include "myerson/bench.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "myerson/exact.hpp"
#include "myerson/samplers.hpp"

namespace myerson {

namespace {

constexpr std::uint64_t kBatch = 256;
constexpr int kCrossCheckMaxNodes = 20;

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

double parse_strict_double(const std::string& text, const char* what) {
  char* end = nullptr;
  const double value = std::strtod(text.c_str(), &end);
  if (end == text.c_str() || *end != '\0') {
    throw std::invalid_argument("bad " + std::string(what) + ": " + text);
  }
  return value;
}

std::uint64_t parse_strict_u64(const std::string& text, const char* what) {
  if (text.empty() || text[0] == '-') {
    throw std::invalid_argument("bad " + std::string(what) + ": " + text);
  }
  char* end = nullptr;
  const std::uint64_t value = std::strtoull(text.c_str(), &end, 10);
  if (end == text.c_str() || *end != '\0') {
    throw std::invalid_argument("bad " + std::string(what) + ": " + text);
  }
  return value;
}

}  // namespace

BenchAlg bench_alg_from_string(std::string_view name) {
  if (name == "permutations") return BenchAlg::permutations;
  if (name == "hybrid") return BenchAlg::hybrid;
  if (name == "connected") return BenchAlg::connected;
  throw std::invalid_argument("unknown algorithm: " + std::string(name));
}

std::string to_string(BenchAlg alg) {
  switch (alg) {
    case BenchAlg::permutations:
      return "permutations";
    case BenchAlg::hybrid:
      return "hybrid";
    case BenchAlg::connected:
      return "connected";
  }
  return "unknown";
}

Budget Budget::samples(std::uint64_t count) {
  if (count == 0) throw std::invalid_argument("sample budget must be >= 1");
  Budget b;
  b.kind = Kind::samples;
  b.amount = static_cast<double>(count);
  return b;
}

Budget Budget::wall_time(double seconds) {
  if (!(seconds > 0.0)) {
    throw std::invalid_argument("wall-time budget must be positive");
  }
  Budget b;
  b.kind = Kind::wall_time;
  b.amount = seconds;
  return b;
}

TrialRecord run_trial(BenchAlg alg, int exact_levels, const Graph& g,
                      const CharacteristicFunction& v,
                      const Allocation& exact, Budget budget,
                      std::uint64_t seed) {
  if (!(budget.amount > 0.0)) {
    throw std::invalid_argument("budget must be positive");
  }
  TrialRecord record;
  record.alg = to_string(alg);
  record.n = g.node_count();
  record.seed = seed;
  record.budget_kind =
      budget.kind == Budget::Kind::samples ? "samples" : "wall_time";
  record.budget = budget.amount;

  const auto start = std::chrono::steady_clock::now();
  const auto elapsed_seconds = [&start]() {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start)
        .count();
  };
  // Batches of kBatch samples; wall-time budgets are re-checked between
  // batches, sample budgets are sliced exactly.
  const auto drive = [&](auto& sampler) {
    if (budget.kind == Budget::Kind::samples) {
      auto total = static_cast<std::uint64_t>(budget.amount);
      while (sampler.samples() < total) {
        const std::uint64_t left = total - sampler.samples();
        sampler.sample(left < kBatch ? left : kBatch);
      }
    } else {
      do {
        sampler.sample(kBatch);
      } while (elapsed_seconds() < budget.amount);
    }
  };

  Allocation estimate;
  switch (alg) {
    case BenchAlg::permutations: {
      PermutationSampler sampler(g, v, seed);
      drive(sampler);
      estimate = sampler.estimate();
      break;
    }
    case BenchAlg::hybrid: {
      HybridSampler sampler(g, v, exact_levels, seed);
      if (!sampler.full_exact()) drive(sampler);
      estimate = sampler.estimate();
      break;
    }
    case BenchAlg::connected: {
      ConnectedCoalitionSampler sampler(g, v, seed);
      drive(sampler);
      estimate = sampler.estimate();
      break;
    }
  }
  record.elapsed_ns = std::chrono::duration_cast<std::chrono::nanoseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  record.samples_used = estimate.samples_used;
  record.error_l1 = l1_error(estimate.values, exact.values);
  return record;
}

namespace {

std::string graph_label(GraphModel model, const GraphParams& params,
                        std::uint64_t seed) {
  switch (model) {
    case GraphModel::cycle:
    case GraphModel::star:
      return to_string(model);
    case GraphModel::erdos_renyi: {
      char buf[64];
      std::snprintf(buf, sizeof(buf), "erdos_renyi(p=%g seed=%llu)",
                    params.edge_prob, static_cast<unsigned long long>(seed));
      return buf;
    }
    case GraphModel::barabasi_albert: {
      char buf[80];
      std::snprintf(buf, sizeof(buf), "barabasi_albert(m0=%d m=%d seed=%llu)",
                    params.m0, params.m,
                    static_cast<unsigned long long>(seed));
      return buf;
    }
  }
  return "unknown";
}

GameSpec cell_game_spec(const BenchConfig& config, GameType type) {
  GameSpec spec;
  spec.type = type;
  spec.n = config.n;
  spec.seed = config.game_seed;
  spec.max_gain = config.max_gain;
  spec.max_singleton = config.max_singleton;
  spec.size_exponent = config.size_exponent;
  return spec;
}

}  // namespace

std::vector<TrialRecord> run_bench(const BenchConfig& config) {
  if (config.trials < 1) {
    throw std::invalid_argument("benchmark needs at least one trial");
  }
  std::vector<TrialRecord> records;
  for (const auto& [model, raw_params] : config.graphs) {
    GraphParams params = raw_params;
    params.n = config.n;
    const Graph g = generate_graph(model, params, config.graph_seed);
    const std::string glabel = graph_label(model, params, config.graph_seed);
    for (GameType type : config.games) {
      const GameSpec spec = cell_game_spec(config, type);
      const CharacteristicFunction game = generate_game(spec);
      const std::string vlabel = serialize_game_spec(spec);
      const Allocation exact = myerson_exact_connected(g, game);
      if (config.n <= kCrossCheckMaxNodes) {
        const Allocation check = myerson_exact_subsets(g, game);
        if (l1_error(exact.values, check.values) > 1e-9) {
          throw std::runtime_error(
              "exact engines disagree on a benchmark cell");
        }
      }
      for (const auto& [alg, exact_levels] : config.algs) {
        for (const Budget& budget : config.budgets) {
          for (int trial = 0; trial < config.trials; ++trial) {
            TrialRecord record =
                run_trial(alg, exact_levels, g, game, exact, budget,
                          config.sampler_seed_base +
                              static_cast<std::uint64_t>(trial));
            record.graph_label = glabel;
            record.game_label = vlabel;
            records.push_back(std::move(record));
          }
        }
      }
    }
  }
  return records;
}

BenchConfig scale_free_grid() {
  BenchConfig config;
  config.n = 15;
  GraphParams ba;
  ba.m0 = 2;
  ba.m = 2;
  config.graphs = {{GraphModel::barabasi_albert, ba}};
  config.games = {GameType::uniform, GameType::superadditive,
                  GameType::submodular};
  config.algs = {{BenchAlg::permutations, 0},
                 {BenchAlg::hybrid, 1},
                 {BenchAlg::connected, 0}};
  config.budgets = {Budget::wall_time(0.01), Budget::wall_time(0.1),
                    Budget::wall_time(1.0)};
  config.trials = 30;
  return config;
}

std::vector<BenchConfig> supplementary_grids() {
  BenchConfig cycle = scale_free_grid();
  cycle.graphs = {{GraphModel::cycle, GraphParams{}}};
  cycle.games = {GameType::size, GameType::uniform, GameType::superadditive};
  cycle.budgets = {Budget::samples(256), Budget::samples(1024),
                   Budget::samples(4096)};

  BenchConfig sparse = scale_free_grid();
  GraphParams er;
  er.edge_prob = 0.4;
  sparse.graphs = {{GraphModel::erdos_renyi, er}};
  sparse.games = {GameType::uniform, GameType::superadditive,
                  GameType::submodular};
  sparse.budgets = {Budget::wall_time(0.01), Budget::wall_time(0.1)};

  return {cycle, sparse};
}

std::string bench_csv(const std::vector<TrialRecord>& records) {
  std::string out =
      "alg,graph_model,game_type,n,seed,budget_kind,budget,samples,"
      "elapsed_ns,error_l1\n";
  char buf[128];
  for (const TrialRecord& r : records) {
    out += r.alg;
    out += ',';
    out += r.graph_label;
    out += ',';
    out += r.game_label;
    std::snprintf(buf, sizeof(buf), ",%d,%llu,%s,", r.n,
                  static_cast<unsigned long long>(r.seed),
                  r.budget_kind.c_str());
    out += buf;
    if (r.budget_kind == "samples") {
      std::snprintf(buf, sizeof(buf), "%llu",
                    static_cast<unsigned long long>(r.budget));
      out += buf;
    } else {
      out += format_double(r.budget);
    }
    std::snprintf(buf, sizeof(buf), ",%llu,%lld,",
                  static_cast<unsigned long long>(r.samples_used),
                  static_cast<long long>(r.elapsed_ns));
    out += buf;
    out += format_double(r.error_l1);
    out += '\n';
  }
  return out;
}

std::vector<TrialRecord> parse_bench_csv(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line) ||
      line !=
          "alg,graph_model,game_type,n,seed,budget_kind,budget,samples,"
          "elapsed_ns,error_l1") {
    throw std::invalid_argument("missing or malformed CSV header");
  }
  std::vector<TrialRecord> records;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::string field;
    std::istringstream row(line);
    while (std::getline(row, field, ',')) fields.push_back(field);
    if (fields.size() != 10) {
      throw std::invalid_argument("CSV line " + std::to_string(lineno) +
                                  " has " + std::to_string(fields.size()) +
                                  " fields, want 10");
    }
    TrialRecord r;
    r.alg = fields[0];
    r.graph_label = fields[1];
    r.game_label = fields[2];
    r.n = static_cast<int>(parse_strict_u64(fields[3], "node count"));
    r.seed = parse_strict_u64(fields[4], "seed");
    if (fields[5] != "samples" && fields[5] != "wall_time") {
      throw std::invalid_argument("bad budget kind: " + fields[5]);
    }
    r.budget_kind = fields[5];
    r.budget = parse_strict_double(fields[6], "budget");
    r.samples_used = parse_strict_u64(fields[7], "sample count");
    r.elapsed_ns = static_cast<std::int64_t>(
        parse_strict_u64(fields[8], "elapsed time"));
    r.error_l1 = parse_strict_double(fields[9], "error");
    records.push_back(std::move(r));
  }
  return records;
}

std::string bench_suite(const BenchConfig& config) {
  return bench_csv(run_bench(config));
}

}  // namespace myerson
