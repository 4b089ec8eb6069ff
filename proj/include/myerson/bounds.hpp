#pragma once

#include <cstdint>

#include "myerson/game.hpp"
#include "myerson/graph.hpp"

namespace myerson {

enum class BoundAlg { permutations, hybrid, connected };

// Two published sample-size rules with the same inputs:
//   standard:  m >= -ln(delta/2) * r^2 / (2 eps^2)   (two-sided Hoeffding)
//   cube_root: m >= cbrt of the same expression
enum class BoundFormula { standard, cube_root };

struct BoundParams {
  double epsilon = 0.0;   // absolute error target, > 0
  double delta = 0.0;     // failure probability, in (0, 1)
  double range = 0.0;     // summand range r, >= 0
  int n = 0;              // players
  int exact_levels = 0;   // hybrid only
  BoundFormula formula = BoundFormula::cube_root;
};

// The bound before the final ceiling, exact in the reals: the effective
// range is r * (n-2Ex-2)/n for hybrid and r * (2^n - 1) for connected
// sampling. A hybrid configuration with no sampled band returns 0.
double samples_required_real(const BoundParams& params, BoundAlg alg);

// ceil() of the above; the ceiling is applied last, after every multiplier.
// A return of 0 means no samples are needed (degenerate hybrid band or
// zero range).
std::uint64_t samples_required(const BoundParams& params, BoundAlg alg);

// Fraction of permutations in which a fixed player sits exactly at the
// middle: floor(n/2)! * floor((n-1)/2)! / n!.
double alpha_connected(int n);

// How the summand range r is estimated from a game:
//   sign_definite: max |v(C)| over nonempty coalitions
//   general:       n * that maximum (mixed-sign marginals)
//   hybrid:        the maximum restricted to the sampled size band
//   connected:     max |v(C)| + alpha/n * min |v(C)|
enum class RangeMode { sign_definite, general, hybrid, connected };

// Exhaustive range scan; requires n <= 24 (for larger games compute the
// extrema analytically and use range_from_extrema).
double range_estimate(const CharacteristicFunction& v, const Graph& g,
                      RangeMode mode, int exact_levels = 0);

// Same formulas with caller-supplied extrema of |v| over the relevant
// coalition family.
double range_from_extrema(double max_abs, double min_abs, int n,
                          RangeMode mode);

}  // namespace myerson
