#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "myerson/coalition.hpp"
#include "myerson/graph.hpp"

namespace myerson {

// A transferable-utility game: a real value for every coalition of the n
// players, with the empty coalition pinned to zero centrally so no backing
// implementation has to remember it.
class CharacteristicFunction {
 public:
  CharacteristicFunction(int n, std::function<double(Coalition)> fn);

  int player_count() const { return n_; }

  double operator()(Coalition c) const {
    if (c.empty()) return 0.0;
    check(c);
    return fn_(c);
  }

 private:
  void check(Coalition c) const;

  int n_;
  std::function<double(Coalition)> fn_;
};

// v(c + {player}) - v(c); player must not already be a member.
double marginal_contribution(const CharacteristicFunction& v, Coalition c,
                             int player);

// The graph-restricted game: each coalition is worth the sum of the original
// values of its connected components within g.
CharacteristicFunction restrict_to_graph(const Graph& g,
                                         const CharacteristicFunction& v);

// --- Generators -----------------------------------------------------------

enum class GameType { uniform, superadditive, submodular, size };

struct GameSpec {
  GameType type = GameType::uniform;
  int n = 0;
  std::uint64_t seed = 0;
  double max_gain = 3.0;        // superadditive
  double max_singleton = 1.0;   // submodular
  double size_exponent = 2.0;   // size
};

// Builds the game described by the spec:
//  * uniform: v(C) ~ U(0, |C|), evaluated lazily from (seed, C) so any n up
//    to 64 works without a table.
//  * superadditive: table-built bottom-up; v(C) is drawn above the best
//    two-way split of C, singletons from U(0, maxGain). Requires n <= 24.
//  * submodular: a facility-location game, monotone and submodular for
//    every seed by construction; values scaled to at most maxSingleton.
//    Table-built, requires n <= 24.
//  * size: v(C) = |C|^exponent, deterministic.
CharacteristicFunction generate_game(const GameSpec& spec);

CharacteristicFunction make_size_game(int n, double exponent);
CharacteristicFunction make_uniform_game(int n, std::uint64_t seed);
CharacteristicFunction make_superadditive_game(int n, std::uint64_t seed,
                                               double max_gain);
CharacteristicFunction make_submodular_game(int n, std::uint64_t seed,
                                            double max_singleton);

// Wraps an explicit value table indexed by coalition mask; values.size()
// must be 2^n and values[0] must be 0.
CharacteristicFunction make_table_game(int n, std::vector<double> values);

GameType game_type_from_string(std::string_view name);
std::string to_string(GameType type);

// --- Serialization --------------------------------------------------------

// Compact description, e.g. "type=uniform n=5 seed=42". type and n are
// mandatory; seed defaults to 0; the numeric knobs (maxGain, maxSingleton,
// exponent) are optional with the GameSpec defaults.
GameSpec parse_game_spec(std::string_view text);
std::string serialize_game_spec(const GameSpec& spec);

// Explicit table format: header "n <count>", then one "<hex-mask> <value>"
// line per nonempty coalition in ascending mask order. Values are printed
// with enough digits to round-trip bit-for-bit. Requires n <= 24.
std::string store_game_table(const CharacteristicFunction& v);
CharacteristicFunction load_game_table(std::string_view text);

// Accepts either format above, sniffing the header.
CharacteristicFunction load_game(std::string_view text);

}  // namespace myerson
