#pragma once

#include <bit>
#include <cassert>
#include <cstdint>

namespace myerson {

// A coalition is a subset of the node indices 0..n-1, packed into a 64-bit
// mask (bit v set <=> node v is a member). Games on more than 64 players are
// out of scope, which keeps every set operation a single integer instruction.
class Coalition {
 public:
  constexpr Coalition() = default;
  constexpr explicit Coalition(std::uint64_t bits) : bits_(bits) {}

  // The singleton {v}.
  static constexpr Coalition single(int v) {
    assert(v >= 0 && v < 64);
    return Coalition(std::uint64_t{1} << v);
  }

  // The grand coalition {0, ..., n-1}.
  static constexpr Coalition full(int n) {
    assert(n >= 0 && n <= 64);
    if (n == 64) return Coalition(~std::uint64_t{0});
    return Coalition((std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }

  constexpr bool contains(int v) const {
    return (bits_ >> v) & std::uint64_t{1};
  }
  constexpr Coalition with(int v) const {
    return Coalition(bits_ | (std::uint64_t{1} << v));
  }
  constexpr Coalition without(int v) const {
    return Coalition(bits_ & ~(std::uint64_t{1} << v));
  }

  // Smallest member index; coalition must be nonempty.
  int lowest() const {
    assert(!empty());
    return std::countr_zero(bits_);
  }

  constexpr bool is_subset_of(Coalition other) const {
    return (bits_ & ~other.bits_) == 0;
  }

  friend constexpr Coalition operator|(Coalition a, Coalition b) {
    return Coalition(a.bits_ | b.bits_);
  }
  friend constexpr Coalition operator&(Coalition a, Coalition b) {
    return Coalition(a.bits_ & b.bits_);
  }
  // Set difference a \ b.
  friend constexpr Coalition operator-(Coalition a, Coalition b) {
    return Coalition(a.bits_ & ~b.bits_);
  }
  friend constexpr bool operator==(Coalition a, Coalition b) {
    return a.bits_ == b.bits_;
  }
  friend constexpr bool operator!=(Coalition a, Coalition b) {
    return a.bits_ != b.bits_;
  }

  // Iterates member indices in ascending order, e.g.
  //   for (int v : coalition) { ... }
  class iterator {
   public:
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    int operator*() const { return std::countr_zero(rest_); }
    iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr bool operator!=(const iterator& o) const {
      return rest_ != o.rest_;
    }

   private:
    std::uint64_t rest_;
  };
  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

 private:
  std::uint64_t bits_ = 0;
};

}  // namespace myerson
