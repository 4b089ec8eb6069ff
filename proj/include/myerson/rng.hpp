#pragma once

#include <cassert>
#include <cstdint>

namespace myerson {

// splitmix64 output/finalizer function: a full-avalanche bijection on 64-bit
// words. Also used standalone to derive per-coalition value streams.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Hashes a (key, label) pair into one well-mixed word.
constexpr std::uint64_t mix64(std::uint64_t key, std::uint64_t label) {
  return mix64(key ^ mix64(label));
}

// Maps a random 64-bit word onto the open unit interval (0, 1): the top 52
// bits are centered on half-bin offsets, (k + 0.5) / 2^52. Every such value
// is exactly representable (k + 0.5 needs at most 53 mantissa bits and the
// scaling is a power of two), so no rounding can push the result onto an
// endpoint; a 53-bit variant would round the top word up to exactly 1.0.
constexpr double unit_open(std::uint64_t word) {
  return (static_cast<double>(word >> 12) + 0.5) * 0x1.0p-52;
}

// Deterministic random stream with platform-independent output. All draws
// are defined by exact 64-bit integer arithmetic; the same seed yields the
// same sequence on every platform, unlike the <random> distribution adaptors
// whose output is implementation-defined.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : seed_(seed), state_(seed) {}

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform draw from (0, 1), endpoints excluded.
  double next_double() { return unit_open(next_u64()); }

  // Uniform draw from (lo, hi); requires lo < hi.
  double uniform_real(double lo, double hi) {
    assert(lo < hi);
    return lo + (hi - lo) * next_double();
  }

  // Uniform integer from the inclusive range [lo, hi], unbiased
  // (Lemire's multiply-shift rejection method).
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    assert(lo <= hi);
    const std::uint64_t span =
        static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
    if (span == 0) return static_cast<std::int64_t>(next_u64());  // full range
    unsigned __int128 m =
        static_cast<unsigned __int128>(next_u64()) * span;
    auto low = static_cast<std::uint64_t>(m);
    if (low < span) {
      const std::uint64_t threshold = (0 - span) % span;
      while (low < threshold) {
        m = static_cast<unsigned __int128>(next_u64()) * span;
        low = static_cast<std::uint64_t>(m);
      }
    }
    return lo + static_cast<std::int64_t>(m >> 64);
  }

  // Derives an independent stream keyed by (original seed, label); the
  // result does not depend on how far this stream has advanced.
  RngStream split(std::uint64_t label) const {
    return RngStream(mix64(seed_, label));
  }

 private:
  std::uint64_t seed_;
  std::uint64_t state_;
};

}  // namespace myerson
