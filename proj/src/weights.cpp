#include "myerson/weights.hpp"

#include <array>

namespace myerson {
namespace {

// Pascal's triangle up to row 64, computed once in exact integer arithmetic.
struct BinomialTable {
  std::array<std::array<std::uint64_t, 65>, 65> c{};
  BinomialTable() {
    for (int a = 0; a <= 64; ++a) {
      c[a][0] = 1;
      for (int b = 1; b <= a; ++b) {
        c[a][b] = c[a - 1][b - 1] + (b <= a - 1 ? c[a - 1][b] : 0);
      }
    }
  }
};

const BinomialTable& table() {
  static const BinomialTable t;
  return t;
}

}  // namespace

std::uint64_t binomial(int a, int b) {
  assert(a >= 0 && a <= 64);
  if (b < 0 || b > a) return 0;
  return table().c[a][b];
}

double permutation_subset_weight(int n, int k) {
  assert(n >= 1 && k >= 0 && k <= n - 1);
  return 1.0 / (static_cast<double>(n) *
                static_cast<double>(binomial(n - 1, k)));
}

double connected_member_weight(int coalition_size, int neighbor_count) {
  assert(coalition_size >= 1 && neighbor_count >= 0);
  assert(coalition_size + neighbor_count <= 64);
  return 1.0 /
         (static_cast<double>(coalition_size) *
          static_cast<double>(
              binomial(coalition_size + neighbor_count, neighbor_count)));
}

double connected_neighbor_weight(int coalition_size, int neighbor_count) {
  assert(coalition_size >= 1 && neighbor_count >= 1);
  assert(coalition_size + neighbor_count <= 64);
  return 1.0 /
         (static_cast<double>(neighbor_count) *
          static_cast<double>(
              binomial(coalition_size + neighbor_count, neighbor_count)));
}

}  // namespace myerson
