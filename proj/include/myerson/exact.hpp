#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "myerson/allocation.hpp"
#include "myerson/coalition.hpp"
#include "myerson/game.hpp"
#include "myerson/graph.hpp"
#include "myerson/weights.hpp"

namespace myerson {

// Shapley value by exhaustive subset enumeration,
//   SV_i = sum_{C not containing i} |C|!(n-|C|-1)!/n! * (v(C+i) - v(C)).
// Requires n <= 24 (the 2^n value table is materialized once).
Allocation shapley_subsets(const CharacteristicFunction& v);

// Myerson value as the Shapley value of the graph-restricted game, by the
// same exhaustive enumeration. Requires n <= 24.
Allocation myerson_exact_subsets(const Graph& g,
                                 const CharacteristicFunction& v);

// Visits every connected coalition of g exactly once, in a deterministic
// order, calling visit(coalition, neighbors). Enumeration is by rooted
// expansion: each coalition is produced from its smallest member with
// forbidden sets pruning duplicates, so no storage of visited sets is
// needed.
template <class F>
void enumerate_connected(const Graph& g, F&& visit) {
  const int n = g.node_count();
  const std::uint64_t all = g.full_coalition().bits();
  // Explicit stack of (coalition, true neighborhood, expandable frontier).
  struct Frame {
    std::uint64_t members;
    std::uint64_t open;       // true neighborhood of members
    std::uint64_t frontier;   // open minus forbidden, not yet branched on
  };
  std::vector<Frame> stack;
  stack.reserve(static_cast<std::size_t>(n) + 1);
  for (int root = 0; root < n; ++root) {
    const std::uint64_t below_root = Coalition::full(root).bits();
    const std::uint64_t members = std::uint64_t{1} << root;
    const std::uint64_t open = g.neighbors_of(root).bits() & ~members;
    visit(Coalition(members), Coalition(open));
    stack.push_back({members, open, open & ~below_root & all});
    while (!stack.empty()) {
      Frame& top = stack.back();
      if (top.frontier == 0) {
        stack.pop_back();
        continue;
      }
      const std::uint64_t pick = top.frontier & (0 - top.frontier);
      top.frontier &= ~pick;
      const int v = Coalition(pick).lowest();
      const std::uint64_t grown = top.members | pick;
      const std::uint64_t grown_open =
          (top.open | g.neighbors_of(v).bits()) & ~grown;
      visit(Coalition(grown), Coalition(grown_open));
      // The child may expand through new neighbors or through frontier
      // nodes this frame has not branched on yet; nodes the frame already
      // branched on stay forbidden to keep the enumeration duplicate-free.
      const std::uint64_t child_frontier =
          grown_open & ~below_root & (top.frontier | ~top.open);
      stack.push_back({grown, grown_open, child_frontier});
    }
  }
}

// Number of connected coalitions of g.
std::uint64_t count_connected_coalitions(const Graph& g);

// Myerson value from the direct sum over connected coalitions: each
// connected C adds weight * v(C) to its members and subtracts the
// complementary weight from its neighbors. Works for any n as long as the
// connected coalitions can be enumerated in reasonable time.
Allocation myerson_exact_connected(const Graph& g,
                                   const CharacteristicFunction& v);

namespace detail {

// Positive and negative parts of the connected-coalition sum, before the
// final subtraction; exposed for decomposition tests.
void myerson_plus_minus(const Graph& g, const CharacteristicFunction& v,
                        std::vector<double>& plus, std::vector<double>& minus);

}  // namespace detail

}  // namespace myerson
