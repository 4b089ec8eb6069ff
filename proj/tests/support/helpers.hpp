// Shared helpers for the test suites: independent reference computations
// (kept deliberately naive so they cannot share bugs with the library) and
// small instance generators.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

#include "myerson/coalition.hpp"
#include "myerson/game.hpp"
#include "myerson/graph.hpp"
#include "myerson/numeric.hpp"
#include "myerson/rng.hpp"
#include "myerson/samplers.hpp"
#include "myerson/weights.hpp"

namespace testutil {

// Expectation of the permutation estimator body over its full sample space:
// size k uniform on [lo, hi], then a uniform size-k subset of V minus the
// anchor node 0. Linearity lets us sum weighted per-draw accumulations, so
// the result is the estimator's exact expectation.
inline std::vector<double> permutation_expectation(
    const myerson::CharacteristicFunction& restricted, int n, int lo,
    int hi) {
  std::vector<double> expect(static_cast<std::size_t>(n), 0.0);
  const double size_mass = 1.0 / static_cast<double>(hi - lo + 1);
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << (n - 1)); ++x) {
    const myerson::Coalition s(x << 1);  // subsets of {1..n-1}
    const int k = s.size();
    if (k < lo || k > hi) continue;
    const double weight =
        size_mass / static_cast<double>(myerson::binomial(n - 1, k));
    std::vector<myerson::KahanAccumulator> acc(static_cast<std::size_t>(n));
    myerson::detail::accumulate_permutation_sample(restricted, s, 0, acc);
    for (int i = 0; i < n; ++i) {
      expect[static_cast<std::size_t>(i)] +=
          weight * acc[static_cast<std::size_t>(i)].value();
    }
  }
  return expect;
}

// Shapley value straight from the permutation definition: average marginal
// contribution over all n! orderings. O(n! * n) -- fine for n <= 8.
inline std::vector<double> shapley_bruteforce(
    const myerson::CharacteristicFunction& v) {
  const int n = v.player_count();
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::vector<double> total(static_cast<std::size_t>(n), 0.0);
  std::uint64_t perms = 0;
  do {
    myerson::Coalition prefix;
    double before = 0.0;
    for (int node : order) {
      const double after = v(prefix.with(node));
      total[static_cast<std::size_t>(node)] += after - before;
      before = after;
      prefix = prefix.with(node);
    }
    ++perms;
  } while (std::next_permutation(order.begin(), order.end()));
  for (double& t : total) t /= static_cast<double>(perms);
  return total;
}

// Graph-restricted game built from first principles: sum of v over the
// connected components of each coalition, components found by repeated
// bitmask flood fill.
inline myerson::CharacteristicFunction restrict_bruteforce(
    const myerson::Graph& g, const myerson::CharacteristicFunction& v) {
  const int n = g.node_count();
  auto copy = v;
  return myerson::CharacteristicFunction(
      n, [g, copy](myerson::Coalition c) {
        double total = 0.0;
        std::uint64_t rest = c.bits();
        while (rest != 0) {
          std::uint64_t comp = rest & (~rest + 1);  // lowest set bit
          for (;;) {
            std::uint64_t grown = comp;
            for (int u : myerson::Coalition(comp)) {
              grown |= g.neighbors_of(u).bits() & rest;
            }
            if (grown == comp) break;
            comp = grown;
          }
          total += copy(myerson::Coalition(comp));
          rest &= ~comp;
        }
        return total;
      });
}

// Myerson value via the permutation definition applied to the naive
// restriction; the slowest, most direct oracle available.
inline std::vector<double> myerson_bruteforce(
    const myerson::Graph& g, const myerson::CharacteristicFunction& v) {
  return shapley_bruteforce(restrict_bruteforce(g, v));
}

inline double max_abs_diff(const std::vector<double>& a,
                           const std::vector<double>& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    worst = std::max(worst, std::abs(a[i] - b[i]));
  }
  return worst;
}

inline double l1_diff(const std::vector<double>& a,
                      const std::vector<double>& b) {
  double total = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    total += std::abs(a[i] - b[i]);
  }
  return total;
}

// Deterministic random test instance: a graph from one of the five shapes
// and a game from one of the four generators, both derived from `index`.
struct RandomInstance {
  myerson::Graph graph;
  myerson::CharacteristicFunction game;
  int n;
};

inline RandomInstance random_instance(std::uint64_t index, int min_n,
                                      int max_n) {
  myerson::RngStream rng(myerson::mix64(0x7e57a11ceULL, index));
  const int n =
      min_n + static_cast<int>(rng.uniform_int(
                  0, static_cast<std::uint64_t>(max_n - min_n)));
  myerson::Graph g(1);
  switch (rng.uniform_int(0, 4)) {
    case 0:
      g = myerson::make_cycle(std::max(n, 3));
      break;
    case 1:
      g = myerson::make_star(std::max(n, 2));
      break;
    case 2:
      g = myerson::make_erdos_renyi(n, 0.2 + 0.6 * rng.next_double(),
                                    rng.next_u64());
      break;
    case 3:
      g = myerson::make_erdos_renyi(n, 0.4, rng.next_u64());
      break;
    default: {
      const int m0 = 2;
      const int m = n > 2 ? 2 : 1;
      g = myerson::make_barabasi_albert(std::max(n, 3), m0, m, rng.next_u64());
      break;
    }
  }
  myerson::GameSpec spec;
  spec.n = g.node_count();
  spec.seed = rng.next_u64();
  switch (rng.uniform_int(0, 3)) {
    case 0:
      spec.type = myerson::GameType::uniform;
      break;
    case 1:
      spec.type = myerson::GameType::superadditive;
      break;
    case 2:
      spec.type = myerson::GameType::submodular;
      break;
    default:
      spec.type = myerson::GameType::size;
      spec.size_exponent = 1.0 + rng.next_double();
      break;
  }
  const int count = g.node_count();
  return RandomInstance{std::move(g), myerson::generate_game(spec), count};
}

}  // namespace testutil
