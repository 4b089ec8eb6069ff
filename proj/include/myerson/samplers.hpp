#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "myerson/allocation.hpp"
#include "myerson/coalition.hpp"
#include "myerson/game.hpp"
#include "myerson/graph.hpp"
#include "myerson/numeric.hpp"
#include "myerson/rng.hpp"

namespace myerson {

// Optional override of the coalition-size law used by the permutation-style
// samplers: called with the inclusive size interval, returns the size to
// draw. Unset means the uniform law (the only one shipped; the hook exists
// so weighted semivalue-style laws can be injected).
using SizeLaw = std::function<int(int lo, int hi, RngStream& rng)>;

struct SamplerConfig {
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  int exact_levels = 0;  // hybrid only
  SizeLaw size_law;      // empty = uniform
};

// Uniformly random coalition of exactly k nodes drawn from 0..n-1 minus
// {excluded} (pass excluded = -1 to draw from all n nodes). Uses Floyd's
// algorithm: k draws regardless of the universe size.
Coalition random_coalition_of_size(int n, int k, int excluded,
                                   RngStream& rng);

// Uniformly random nonempty subset of 0..n-1.
Coalition random_nonempty_coalition(int n, RngStream& rng);

namespace detail {

// One permutation-equivalent sample: given S drawn uniformly among the
// subsets of V minus {anchor} of a uniform random size, adds to acc[i] the
// marginal contribution of every player i to S with i and the anchor
// swapped when i is a member. Each acc[i] then averages to the Shapley
// value of the restricted game.
void accumulate_permutation_sample(const CharacteristicFunction& restricted,
                                   Coalition s, int anchor,
                                   std::vector<KahanAccumulator>& acc);

// One connected-coalition sample from a uniform draw over all nonempty
// subsets: connected coalitions credit their members and debit their
// neighbors with the closed-form weights; disconnected draws contribute
// nothing. Uses the unrestricted game by design. Returns whether the draw
// was connected.
bool accumulate_connected_sample(const Graph& g,
                                 const CharacteristicFunction& v, Coalition c,
                                 std::vector<KahanAccumulator>& plus,
                                 std::vector<KahanAccumulator>& minus);

// Exact tails of the hybrid estimator: full contribution of all coalitions
// of size <= exact_levels and, via complements, of size >= n-exact_levels-1,
// evaluated on the restricted game.
std::vector<double> hybrid_exact_part(const CharacteristicFunction& restricted,
                                      int exact_levels);

}  // namespace detail

// Shapley-permutation estimator on the graph-restricted game. Supports
// incremental refinement: sample() may be called repeatedly and estimate()
// is valid once at least one sample was drawn.
class PermutationSampler {
 public:
  PermutationSampler(const Graph& g, const CharacteristicFunction& v,
                     std::uint64_t seed, SizeLaw size_law = {});

  void sample(std::uint64_t count);
  std::uint64_t samples() const { return samples_; }
  Allocation estimate() const;

 private:
  int n_;
  CharacteristicFunction restricted_;
  RngStream rng_;
  SizeLaw size_law_;
  std::vector<KahanAccumulator> acc_;
  std::uint64_t samples_ = 0;
};

// Hybrid estimator: coalition sizes <= Ex and their complements are summed
// exactly; only the middle sizes are sampled, with the estimate scaled by
// the probability mass of the sampled band. When 2*Ex >= n-2 there is no
// middle band and the estimator falls back to the exhaustive engine.
class HybridSampler {
 public:
  HybridSampler(const Graph& g, const CharacteristicFunction& v,
                int exact_levels, std::uint64_t seed, SizeLaw size_law = {});

  // True when the exact part already covers every coalition size; sampling
  // is then a no-op and estimate() is available immediately.
  bool full_exact() const { return full_exact_; }
  void sample(std::uint64_t count);
  std::uint64_t samples() const { return samples_; }
  Allocation estimate() const;

 private:
  int n_;
  int exact_levels_;
  bool full_exact_;
  CharacteristicFunction restricted_;
  RngStream rng_;
  SizeLaw size_law_;
  std::vector<double> exact_part_;
  std::vector<KahanAccumulator> acc_;
  std::uint64_t samples_ = 0;
};

// Connected-coalition estimator: uniform draws over all nonempty subsets,
// gated on connectedness, scaled by (2^n - 1) / m. Evaluates the raw game
// only.
class ConnectedCoalitionSampler {
 public:
  ConnectedCoalitionSampler(const Graph& g, const CharacteristicFunction& v,
                            std::uint64_t seed);

  void sample(std::uint64_t count);
  std::uint64_t samples() const { return samples_; }
  std::uint64_t hits() const { return hits_; }
  Allocation estimate() const;

 private:
  int n_;
  Graph graph_;
  CharacteristicFunction game_;
  RngStream rng_;
  std::vector<KahanAccumulator> plus_;
  std::vector<KahanAccumulator> minus_;
  std::uint64_t samples_ = 0;
  std::uint64_t hits_ = 0;
};

// One-shot wrappers: construct, draw config.samples, return the estimate.
Allocation approx_permutations(const Graph& g,
                               const CharacteristicFunction& v,
                               const SamplerConfig& config);
Allocation approx_hybrid(const Graph& g, const CharacteristicFunction& v,
                         const SamplerConfig& config);
Allocation approx_connected(const Graph& g, const CharacteristicFunction& v,
                            const SamplerConfig& config);

}  // namespace myerson
