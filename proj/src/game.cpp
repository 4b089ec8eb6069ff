#include "myerson/game.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <memory>
#include <sstream>
#include <stdexcept>

#include "myerson/rng.hpp"

namespace myerson {

namespace {

constexpr int kMaxTableNodes = 24;  // 2^n table entries

void check_table_size(int n, const char* what) {
  if (n > kMaxTableNodes) {
    throw std::invalid_argument(std::string(what) +
                                " requires n <= " +
                                std::to_string(kMaxTableNodes) + ", got " +
                                std::to_string(n));
  }
}

std::string format_double(double x, const char* fmt) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), fmt, x);
  return buf;
}

}  // namespace

CharacteristicFunction::CharacteristicFunction(
    int n, std::function<double(Coalition)> fn)
    : n_(n), fn_(std::move(fn)) {
  if (n < 1 || n > 64) {
    throw std::invalid_argument("game size must be between 1 and 64, got " +
                                std::to_string(n));
  }
  if (!fn_) throw std::invalid_argument("game needs a value function");
}

void CharacteristicFunction::check(Coalition c) const {
  if (!c.is_subset_of(Coalition::full(n_))) {
    throw std::invalid_argument(
        "coalition contains players outside the game");
  }
}

double marginal_contribution(const CharacteristicFunction& v, Coalition c,
                             int player) {
  if (c.contains(player)) {
    throw std::invalid_argument("player " + std::to_string(player) +
                                " is already a coalition member");
  }
  return v(c.with(player)) - v(c);
}

CharacteristicFunction restrict_to_graph(const Graph& g,
                                         const CharacteristicFunction& v) {
  if (g.node_count() != v.player_count()) {
    throw std::invalid_argument("graph and game sizes differ");
  }
  return CharacteristicFunction(
      v.player_count(), [g, v](Coalition c) {
        double total = 0.0;
        for_each_component(g, c, [&](Coalition comp) { total += v(comp); });
        return total;
      });
}

CharacteristicFunction make_size_game(int n, double exponent) {
  return CharacteristicFunction(n, [exponent](Coalition c) {
    return std::pow(static_cast<double>(c.size()), exponent);
  });
}

CharacteristicFunction make_uniform_game(int n, std::uint64_t seed) {
  return CharacteristicFunction(n, [seed](Coalition c) {
    return unit_open(mix64(seed, c.bits())) * static_cast<double>(c.size());
  });
}

CharacteristicFunction make_table_game(int n, std::vector<double> values) {
  check_table_size(n, "table game");
  if (values.size() != (std::size_t{1} << n)) {
    throw std::invalid_argument("table game needs exactly 2^n values");
  }
  if (values[0] != 0.0) {
    throw std::invalid_argument("empty coalition must be worth 0");
  }
  auto table = std::make_shared<std::vector<double>>(std::move(values));
  return CharacteristicFunction(
      n, [table](Coalition c) { return (*table)[c.bits()]; });
}

namespace {

// Stream labels for deriving independent draw families from one seed.
constexpr std::uint64_t kSuperadditiveTag = 0x5355504552414444ULL;
constexpr std::uint64_t kFacilityWeightTag = 0x4641434c57454954ULL;
constexpr std::uint64_t kFacilityScoreTag = 0x4641434c53434f52ULL;

}  // namespace

CharacteristicFunction make_superadditive_game(int n, std::uint64_t seed,
                                               double max_gain) {
  check_table_size(n, "superadditive game");
  if (max_gain <= 0.0) {
    throw std::invalid_argument("maxGain must be positive");
  }
  const std::uint64_t draw_seed = mix64(seed, kSuperadditiveTag);
  const std::size_t count = std::size_t{1} << n;
  std::vector<double> values(count, 0.0);
  // Masks in ascending order enumerate subsets before their supersets, so
  // every proper submask value is final when a coalition is drawn above its
  // best two-way split.
  for (std::uint64_t mask = 1; mask < count; ++mask) {
    const double u = unit_open(mix64(draw_seed, mask));
    double best_split = 0.0;
    for (std::uint64_t sub = (mask - 1) & mask; sub != 0;
         sub = (sub - 1) & mask) {
      const double split = values[sub] + values[mask ^ sub];
      if (split > best_split) best_split = split;
    }
    values[mask] = best_split + u * max_gain;
  }
  return make_table_game(n, std::move(values));
}

// Facility-location game: players score against 2n independent features and
// a coalition collects the best member score per feature,
//   v(C) = sigma * sum_j w_j * max_{i in C} a_{ij},
// which is monotone and submodular for every seed. sigma scales the grand
// coalition's ceiling to maxSingleton.
CharacteristicFunction make_submodular_game(int n, std::uint64_t seed,
                                            double max_singleton) {
  check_table_size(n, "submodular game");
  if (max_singleton <= 0.0) {
    throw std::invalid_argument("maxSingleton must be positive");
  }
  const int features = 2 * n;
  const std::uint64_t weight_seed = mix64(seed, kFacilityWeightTag);
  const std::uint64_t score_seed = mix64(seed, kFacilityScoreTag);
  std::vector<double> weights(static_cast<std::size_t>(features));
  double weight_sum = 0.0;
  for (int j = 0; j < features; ++j) {
    weights[static_cast<std::size_t>(j)] =
        unit_open(mix64(weight_seed, static_cast<std::uint64_t>(j)));
    weight_sum += weights[static_cast<std::size_t>(j)];
  }
  const double sigma = max_singleton / weight_sum;
  std::vector<double> scores(static_cast<std::size_t>(n * features));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < features; ++j) {
      scores[static_cast<std::size_t>(i * features + j)] = unit_open(
          mix64(score_seed, static_cast<std::uint64_t>(i * 256 + j)));
    }
  }
  const std::size_t count = std::size_t{1} << n;
  std::vector<double> values(count, 0.0);
  for (std::uint64_t mask = 1; mask < count; ++mask) {
    double total = 0.0;
    for (int j = 0; j < features; ++j) {
      double best = 0.0;
      for (int i : Coalition(mask)) {
        const double s = scores[static_cast<std::size_t>(i * features + j)];
        if (s > best) best = s;
      }
      total += weights[static_cast<std::size_t>(j)] * best;
    }
    values[mask] = sigma * total;
  }
  return make_table_game(n, std::move(values));
}

CharacteristicFunction generate_game(const GameSpec& spec) {
  if (spec.n < 1 || spec.n > 64) {
    throw std::invalid_argument("game size must be between 1 and 64, got " +
                                std::to_string(spec.n));
  }
  switch (spec.type) {
    case GameType::uniform:
      return make_uniform_game(spec.n, spec.seed);
    case GameType::superadditive:
      return make_superadditive_game(spec.n, spec.seed, spec.max_gain);
    case GameType::submodular:
      return make_submodular_game(spec.n, spec.seed, spec.max_singleton);
    case GameType::size:
      return make_size_game(spec.n, spec.size_exponent);
  }
  throw std::invalid_argument("unknown game type");
}

GameType game_type_from_string(std::string_view name) {
  if (name == "uniform") return GameType::uniform;
  if (name == "superadditive") return GameType::superadditive;
  if (name == "submodular") return GameType::submodular;
  if (name == "size") return GameType::size;
  throw std::invalid_argument("unknown game type: " + std::string(name));
}

std::string to_string(GameType type) {
  switch (type) {
    case GameType::uniform:
      return "uniform";
    case GameType::superadditive:
      return "superadditive";
    case GameType::submodular:
      return "submodular";
    case GameType::size:
      return "size";
  }
  return "unknown";
}

GameSpec parse_game_spec(std::string_view text) {
  GameSpec spec;
  bool saw_type = false;
  bool saw_n = false;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    const auto eq = token.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == token.size()) {
      throw std::invalid_argument("game spec tokens must be key=value, got " +
                                  token);
    }
    const std::string key = token.substr(0, eq);
    const std::string value = token.substr(eq + 1);
    if (key == "type") {
      spec.type = game_type_from_string(value);
      saw_type = true;
      continue;
    }
    if (key != "n" && key != "seed" && key != "maxGain" &&
        key != "maxSingleton" && key != "exponent") {
      throw std::invalid_argument("unknown game spec key: " + key);
    }
    bool ok = value[0] != '-' || key != "seed";
    std::size_t used = 0;
    if (ok) {
      try {
        if (key == "n") {
          spec.n = std::stoi(value, &used);
          saw_n = true;
        } else if (key == "seed") {
          spec.seed = std::stoull(value, &used);
        } else if (key == "maxGain") {
          spec.max_gain = std::stod(value, &used);
        } else if (key == "maxSingleton") {
          spec.max_singleton = std::stod(value, &used);
        } else {
          spec.size_exponent = std::stod(value, &used);
        }
      } catch (const std::exception&) {
        ok = false;
      }
    }
    if (!ok || used != value.size()) {
      throw std::invalid_argument("bad value for game spec key " + key +
                                  ": " + value);
    }
  }
  if (!saw_type || !saw_n) {
    throw std::invalid_argument("game spec needs at least type= and n=");
  }
  return spec;
}

std::string serialize_game_spec(const GameSpec& spec) {
  std::string out = "type=" + to_string(spec.type) +
                    " n=" + std::to_string(spec.n) +
                    " seed=" + std::to_string(spec.seed);
  switch (spec.type) {
    case GameType::superadditive:
      out += " maxGain=" + format_double(spec.max_gain, "%.17g");
      break;
    case GameType::submodular:
      out += " maxSingleton=" + format_double(spec.max_singleton, "%.17g");
      break;
    case GameType::size:
      out += " exponent=" + format_double(spec.size_exponent, "%.17g");
      break;
    case GameType::uniform:
      break;
  }
  return out;
}

std::string store_game_table(const CharacteristicFunction& v) {
  const int n = v.player_count();
  check_table_size(n, "game table output");
  const std::uint64_t count = std::uint64_t{1} << n;
  std::string out = "n " + std::to_string(n) + "\n";
  char buf[96];
  for (std::uint64_t mask = 1; mask < count; ++mask) {
    std::snprintf(buf, sizeof(buf), "%llx %.17g\n",
                  static_cast<unsigned long long>(mask), v(Coalition(mask)));
    out += buf;
  }
  return out;
}

CharacteristicFunction load_game_table(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  int n = -1;
  std::vector<double> values;
  std::vector<bool> seen;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream fields(line);
    if (n < 0) {
      std::string tag;
      if (!(fields >> tag >> n) || tag != "n" || n < 1) {
        throw std::invalid_argument(
            "game table header must be \"n <count>\", line " +
            std::to_string(lineno));
      }
      check_table_size(n, "game table input");
      values.assign(std::size_t{1} << n, 0.0);
      seen.assign(std::size_t{1} << n, false);
      continue;
    }
    std::string mask_text;
    std::string value_text;
    if (!(fields >> mask_text >> value_text)) {
      throw std::invalid_argument("bad game table line " +
                                  std::to_string(lineno) + ": " + line);
    }
    std::string extra;
    if (fields >> extra) {
      throw std::invalid_argument("trailing tokens on game table line " +
                                  std::to_string(lineno));
    }
    char* end = nullptr;
    const std::uint64_t mask = std::strtoull(mask_text.c_str(), &end, 16);
    if (end == mask_text.c_str() || *end != '\0' || mask == 0 ||
        mask >= values.size()) {
      throw std::invalid_argument("bad coalition mask on line " +
                                  std::to_string(lineno) + ": " + mask_text);
    }
    end = nullptr;
    const double value = std::strtod(value_text.c_str(), &end);
    if (end == value_text.c_str() || *end != '\0') {
      throw std::invalid_argument("bad value on line " +
                                  std::to_string(lineno) + ": " + value_text);
    }
    if (seen[mask]) {
      throw std::invalid_argument("duplicate coalition mask on line " +
                                  std::to_string(lineno) + ": " + mask_text);
    }
    seen[mask] = true;
    values[mask] = value;
  }
  if (n < 0) throw std::invalid_argument("empty game table file");
  for (std::uint64_t mask = 1; mask < values.size(); ++mask) {
    if (!seen[mask]) {
      char buf[32];
      std::snprintf(buf, sizeof(buf), "%llx",
                    static_cast<unsigned long long>(mask));
      throw std::invalid_argument(std::string("game table misses mask ") +
                                  buf);
    }
  }
  return make_table_game(n, std::move(values));
}

CharacteristicFunction load_game(std::string_view text) {
  // Sniff the header: tables start with "n <count>", specs with key=value.
  std::size_t pos = 0;
  while (pos < text.size() &&
         (text[pos] == ' ' || text[pos] == '\n' || text[pos] == '\t' ||
          text[pos] == '\r')) {
    ++pos;
  }
  if (text.compare(pos, 2, "n ") == 0) return load_game_table(text);
  return generate_game(parse_game_spec(text));
}

}  // namespace myerson
