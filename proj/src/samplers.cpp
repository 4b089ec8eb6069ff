#include "myerson/samplers.hpp"

#include <cmath>
#include <stdexcept>

#include "myerson/exact.hpp"
#include "myerson/weights.hpp"

namespace myerson {

namespace {

int universe_size(int n, int excluded) {
  return excluded >= 0 && excluded < n ? n - 1 : n;
}

// Maps a rank within the universe {0..n-1} minus {excluded} to a node id.
int unmap(int rank, int excluded) {
  return excluded >= 0 && rank >= excluded ? rank + 1 : rank;
}

// Gosper's hack: next mask with the same popcount, or wraps past the range
// (detected by the caller via overflow / exceeding the full mask).
std::uint64_t next_same_size(std::uint64_t mask) {
  const std::uint64_t low = mask & (0 - mask);
  const std::uint64_t ripple = mask + low;
  return (((ripple ^ mask) >> 2) / low) | ripple;
}

}  // namespace

Coalition random_coalition_of_size(int n, int k, int excluded,
                                   RngStream& rng) {
  const int u = universe_size(n, excluded);
  if (k < 0 || k > u) {
    throw std::invalid_argument("coalition size " + std::to_string(k) +
                                " out of range for universe of " +
                                std::to_string(u));
  }
  // Floyd's sampling: k draws, uniform over all k-subsets.
  Coalition chosen;
  for (int j = u - k; j < u; ++j) {
    const int t = unmap(static_cast<int>(rng.uniform_int(0, j)), excluded);
    if (chosen.contains(t)) {
      chosen = chosen.with(unmap(j, excluded));
    } else {
      chosen = chosen.with(t);
    }
  }
  return chosen;
}

Coalition random_nonempty_coalition(int n, RngStream& rng) {
  const std::uint64_t full = Coalition::full(n).bits();
  std::uint64_t bits = 0;
  do {
    bits = rng.next_u64() & full;
  } while (bits == 0);
  return Coalition(bits);
}

namespace detail {

void accumulate_permutation_sample(const CharacteristicFunction& restricted,
                                   Coalition s, int anchor,
                                   std::vector<KahanAccumulator>& acc) {
  const int n = restricted.player_count();
  const double base = restricted(s);
  for (int v = 0; v < n; ++v) {
    if (!s.contains(v)) {
      acc[static_cast<std::size_t>(v)].add(restricted(s.with(v)) - base);
    } else {
      // Swap trick: exchanging v with the anchor turns s into a uniform
      // draw among same-size subsets avoiding v.
      const Coalition swapped = s.without(v).with(anchor);
      acc[static_cast<std::size_t>(v)].add(restricted(swapped.with(v)) -
                                           restricted(swapped));
    }
  }
}

bool accumulate_connected_sample(const Graph& g,
                                 const CharacteristicFunction& v, Coalition c,
                                 std::vector<KahanAccumulator>& plus,
                                 std::vector<KahanAccumulator>& minus) {
  if (!is_connected(g, c)) return false;
  const Coalition nbrs = neighbors(g, c);
  const double value = v(c);
  const int csize = c.size();
  const int nsize = nbrs.size();
  const double member_part = connected_member_weight(csize, nsize) * value;
  for (int i : c) plus[static_cast<std::size_t>(i)].add(member_part);
  if (nsize > 0) {
    const double neighbor_part =
        connected_neighbor_weight(csize, nsize) * value;
    for (int i : nbrs) minus[static_cast<std::size_t>(i)].add(neighbor_part);
  }
  return true;
}

std::vector<double> hybrid_exact_part(
    const CharacteristicFunction& restricted, int exact_levels) {
  const int n = restricted.player_count();
  if (exact_levels < 0 || n - 2 * exact_levels - 2 <= 0) {
    throw std::invalid_argument("exact part wants 0 <= Ex <= (n-3)/2");
  }
  const Coalition full = Coalition::full(n);
  std::vector<double> out(static_cast<std::size_t>(n), 0.0);
  const auto process = [&](Coalition c) {
    const int k = c.size();
    // Small coalitions joined from below...
    const double below = permutation_subset_weight(n, k);
    const double base = restricted(c);
    for (int i : full - c) {
      out[static_cast<std::size_t>(i)] +=
          below * (restricted(c.with(i)) - base);
    }
    // ...and their complements completed from above. The complement has
    // size n-k >= k+2, so the two families never overlap.
    const Coalition d = full - c;
    const double above = permutation_subset_weight(n, n - k - 1);
    const double top = restricted(d);
    for (int i : d) {
      out[static_cast<std::size_t>(i)] +=
          above * (top - restricted(d.without(i)));
    }
  };
  process(Coalition());  // the empty coalition and the grand coalition
  for (int k = 1; k <= exact_levels; ++k) {
    std::uint64_t mask = (std::uint64_t{1} << k) - 1;
    while (mask <= full.bits()) {
      process(Coalition(mask));
      const std::uint64_t next = next_same_size(mask);
      if (next <= mask) break;  // wrapped past the top of the range
      mask = next;
    }
  }
  return out;
}

}  // namespace detail

PermutationSampler::PermutationSampler(const Graph& g,
                                       const CharacteristicFunction& v,
                                       std::uint64_t seed, SizeLaw size_law)
    : n_(g.node_count()),
      restricted_(restrict_to_graph(g, v)),
      rng_(seed),
      size_law_(std::move(size_law)),
      acc_(static_cast<std::size_t>(n_)) {}

void PermutationSampler::sample(std::uint64_t count) {
  for (std::uint64_t i = 0; i < count; ++i) {
    const int k = size_law_
                      ? size_law_(0, n_ - 1, rng_)
                      : static_cast<int>(rng_.uniform_int(0, n_ - 1));
    const Coalition s = random_coalition_of_size(n_, k, /*excluded=*/0, rng_);
    detail::accumulate_permutation_sample(restricted_, s, /*anchor=*/0, acc_);
  }
  samples_ += count;
}

Allocation PermutationSampler::estimate() const {
  if (samples_ == 0) {
    throw std::logic_error("estimate requested before any samples");
  }
  Allocation out;
  out.method = "permutations";
  out.samples_used = samples_;
  out.values.assign(static_cast<std::size_t>(n_), 0.0);
  const double inv = 1.0 / static_cast<double>(samples_);
  for (int i = 0; i < n_; ++i) {
    out.values[static_cast<std::size_t>(i)] =
        acc_[static_cast<std::size_t>(i)].value() * inv;
  }
  return out;
}

HybridSampler::HybridSampler(const Graph& g, const CharacteristicFunction& v,
                             int exact_levels, std::uint64_t seed,
                             SizeLaw size_law)
    : n_(g.node_count()),
      exact_levels_(exact_levels),
      full_exact_(n_ - 2 * exact_levels - 2 <= 0),
      restricted_(restrict_to_graph(g, v)),
      rng_(seed),
      size_law_(std::move(size_law)),
      acc_(static_cast<std::size_t>(n_)) {
  if (exact_levels < 0) {
    throw std::invalid_argument("exact levels must be nonnegative");
  }
  if (full_exact_) {
    exact_part_ = myerson_exact_subsets(g, v).values;
  } else {
    exact_part_ = detail::hybrid_exact_part(restricted_, exact_levels_);
  }
}

void HybridSampler::sample(std::uint64_t count) {
  if (full_exact_) return;  // nothing left to estimate
  const int lo = exact_levels_ + 1;
  const int hi = n_ - exact_levels_ - 2;
  for (std::uint64_t i = 0; i < count; ++i) {
    const int k = size_law_ ? size_law_(lo, hi, rng_)
                            : static_cast<int>(rng_.uniform_int(lo, hi));
    const Coalition s = random_coalition_of_size(n_, k, /*excluded=*/0, rng_);
    detail::accumulate_permutation_sample(restricted_, s, /*anchor=*/0, acc_);
  }
  samples_ += count;
}

Allocation HybridSampler::estimate() const {
  Allocation out;
  out.method = "hybrid";
  out.values = exact_part_;
  if (full_exact_) return out;
  if (samples_ == 0) {
    throw std::logic_error("estimate requested before any samples");
  }
  out.samples_used = samples_;
  const double scale = static_cast<double>(n_ - 2 * exact_levels_ - 2) /
                       static_cast<double>(n_) /
                       static_cast<double>(samples_);
  for (int i = 0; i < n_; ++i) {
    out.values[static_cast<std::size_t>(i)] +=
        scale * acc_[static_cast<std::size_t>(i)].value();
  }
  return out;
}

ConnectedCoalitionSampler::ConnectedCoalitionSampler(
    const Graph& g, const CharacteristicFunction& v, std::uint64_t seed)
    : n_(g.node_count()),
      graph_(g),
      game_(v),
      rng_(seed),
      plus_(static_cast<std::size_t>(n_)),
      minus_(static_cast<std::size_t>(n_)) {
  if (g.node_count() != v.player_count()) {
    throw std::invalid_argument("graph and game sizes differ");
  }
}

void ConnectedCoalitionSampler::sample(std::uint64_t count) {
  for (std::uint64_t i = 0; i < count; ++i) {
    const Coalition c = random_nonempty_coalition(n_, rng_);
    if (detail::accumulate_connected_sample(graph_, game_, c, plus_, minus_)) {
      ++hits_;
    }
  }
  samples_ += count;
}

Allocation ConnectedCoalitionSampler::estimate() const {
  if (samples_ == 0) {
    throw std::logic_error("estimate requested before any samples");
  }
  Allocation out;
  out.method = "connected";
  out.samples_used = samples_;
  out.values.assign(static_cast<std::size_t>(n_), 0.0);
  const double scale =
      (std::ldexp(1.0, n_) - 1.0) / static_cast<double>(samples_);
  for (int i = 0; i < n_; ++i) {
    out.values[static_cast<std::size_t>(i)] =
        scale * (plus_[static_cast<std::size_t>(i)].value() -
                 minus_[static_cast<std::size_t>(i)].value());
  }
  return out;
}

namespace {

void require_samples(const SamplerConfig& config) {
  if (config.samples == 0) {
    throw std::invalid_argument("sample budget must be at least 1");
  }
}

}  // namespace

Allocation approx_permutations(const Graph& g,
                               const CharacteristicFunction& v,
                               const SamplerConfig& config) {
  require_samples(config);
  PermutationSampler sampler(g, v, config.seed, config.size_law);
  sampler.sample(config.samples);
  return sampler.estimate();
}

Allocation approx_hybrid(const Graph& g, const CharacteristicFunction& v,
                         const SamplerConfig& config) {
  HybridSampler sampler(g, v, config.exact_levels, config.seed,
                        config.size_law);
  if (!sampler.full_exact()) {
    require_samples(config);
    sampler.sample(config.samples);
  }
  return sampler.estimate();
}

Allocation approx_connected(const Graph& g, const CharacteristicFunction& v,
                            const SamplerConfig& config) {
  require_samples(config);
  ConnectedCoalitionSampler sampler(g, v, config.seed);
  sampler.sample(config.samples);
  return sampler.estimate();
}

}  // namespace myerson
