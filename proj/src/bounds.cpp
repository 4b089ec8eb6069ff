#include "myerson/bounds.hpp"

#include <cmath>
#include <stdexcept>

#include "myerson/weights.hpp"

namespace myerson {

namespace {

void validate(const BoundParams& params) {
  if (!(params.epsilon > 0.0)) {
    throw std::invalid_argument("epsilon must be positive");
  }
  if (!(params.delta > 0.0 && params.delta < 1.0)) {
    throw std::invalid_argument("delta must lie in (0, 1)");
  }
  if (!(params.range >= 0.0)) {
    throw std::invalid_argument("range must be nonnegative");
  }
  if (params.n < 1 || params.n > 64) {
    throw std::invalid_argument("player count must be between 1 and 64");
  }
  if (params.exact_levels < 0) {
    throw std::invalid_argument("exact levels must be nonnegative");
  }
}

}  // namespace

double samples_required_real(const BoundParams& params, BoundAlg alg) {
  validate(params);
  double effective_range = params.range;
  switch (alg) {
    case BoundAlg::permutations:
      break;
    case BoundAlg::hybrid: {
      const int band = params.n - 2 * params.exact_levels - 2;
      if (band <= 0) return 0.0;  // exact part covers everything
      effective_range *=
          static_cast<double>(band) / static_cast<double>(params.n);
      break;
    }
    case BoundAlg::connected:
      effective_range *= std::ldexp(1.0, params.n) - 1.0;
      break;
  }
  const double base = -std::log(params.delta / 2.0) * effective_range *
                      effective_range /
                      (2.0 * params.epsilon * params.epsilon);
  return params.formula == BoundFormula::cube_root ? std::cbrt(base) : base;
}

std::uint64_t samples_required(const BoundParams& params, BoundAlg alg) {
  return static_cast<std::uint64_t>(
      std::ceil(samples_required_real(params, alg)));
}

double alpha_connected(int n) {
  if (n < 1 || n > 64) {
    throw std::invalid_argument("player count must be between 1 and 64");
  }
  // floor(n/2)! * floor((n-1)/2)! / n! = 1 / (n * C(n-1, floor(n/2)))
  return 1.0 / (static_cast<double>(n) *
                static_cast<double>(binomial(n - 1, n / 2)));
}

double range_from_extrema(double max_abs, double min_abs, int n,
                          RangeMode mode) {
  if (max_abs < 0.0 || min_abs < 0.0) {
    throw std::invalid_argument("extrema must be nonnegative magnitudes");
  }
  switch (mode) {
    case RangeMode::sign_definite:
    case RangeMode::hybrid:
      return max_abs;
    case RangeMode::general:
      return static_cast<double>(n) * max_abs;
    case RangeMode::connected:
      return max_abs + alpha_connected(n) / static_cast<double>(n) * min_abs;
  }
  throw std::invalid_argument("unknown range mode");
}

double range_estimate(const CharacteristicFunction& v, const Graph& g,
                      RangeMode mode, int exact_levels) {
  const int n = v.player_count();
  if (g.node_count() != n) {
    throw std::invalid_argument("graph and game sizes differ");
  }
  if (n > 24) {
    throw std::invalid_argument(
        "exhaustive range scan requires n <= 24; supply extrema instead");
  }
  if (exact_levels < 0) {
    throw std::invalid_argument("exact levels must be nonnegative");
  }
  int lo = 1;
  int hi = n;
  if (mode == RangeMode::hybrid) {
    lo = exact_levels + 1;
    hi = n - exact_levels - 2;
    if (lo > hi) return 0.0;  // no sampled band
  }
  double max_abs = 0.0;
  double min_abs = HUGE_VAL;
  const std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t mask = 1; mask < count; ++mask) {
    const Coalition c(mask);
    const int size = c.size();
    if (size < lo || size > hi) continue;
    const double a = std::fabs(v(c));
    if (a > max_abs) max_abs = a;
    if (a < min_abs) min_abs = a;
  }
  if (min_abs == HUGE_VAL) min_abs = 0.0;
  return range_from_extrema(max_abs, min_abs, n, mode);
}

}  // namespace myerson
