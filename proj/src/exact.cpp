#include "myerson/exact.hpp"

#include <stdexcept>

namespace myerson {

namespace {

constexpr int kMaxSubsetNodes = 24;

std::vector<double> tabulate(const CharacteristicFunction& v) {
  const int n = v.player_count();
  if (n > kMaxSubsetNodes) {
    throw std::invalid_argument(
        "subset enumeration requires n <= " +
        std::to_string(kMaxSubsetNodes) + ", got " + std::to_string(n));
  }
  const std::uint64_t count = std::uint64_t{1} << n;
  std::vector<double> table(count);
  table[0] = 0.0;
  for (std::uint64_t mask = 1; mask < count; ++mask) {
    table[mask] = v(Coalition(mask));
  }
  return table;
}

}  // namespace

Allocation shapley_subsets(const CharacteristicFunction& v) {
  const int n = v.player_count();
  const std::vector<double> table = tabulate(v);
  Allocation out;
  out.method = "exact_subsets";
  out.values.assign(static_cast<std::size_t>(n), 0.0);
  const std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    const Coalition c(mask);
    const double weight = permutation_subset_weight(n, c.size());
    const double base = table[mask];
    for (int i : Coalition::full(n) - c) {
      out.values[static_cast<std::size_t>(i)] +=
          weight * (table[mask | (std::uint64_t{1} << i)] - base);
    }
  }
  return out;
}

Allocation myerson_exact_subsets(const Graph& g,
                                 const CharacteristicFunction& v) {
  Allocation out = shapley_subsets(restrict_to_graph(g, v));
  out.method = "exact_subsets";
  return out;
}

std::uint64_t count_connected_coalitions(const Graph& g) {
  std::uint64_t count = 0;
  enumerate_connected(g, [&](Coalition, Coalition) { ++count; });
  return count;
}

namespace detail {

void myerson_plus_minus(const Graph& g, const CharacteristicFunction& v,
                        std::vector<double>& plus, std::vector<double>& minus) {
  if (g.node_count() != v.player_count()) {
    throw std::invalid_argument("graph and game sizes differ");
  }
  const std::size_t n = static_cast<std::size_t>(g.node_count());
  plus.assign(n, 0.0);
  minus.assign(n, 0.0);
  enumerate_connected(g, [&](Coalition c, Coalition nbrs) {
    const double value = v(c);
    const int csize = c.size();
    const int nsize = nbrs.size();
    const double member_part =
        connected_member_weight(csize, nsize) * value;
    for (int i : c) plus[static_cast<std::size_t>(i)] += member_part;
    if (nsize > 0) {
      const double neighbor_part =
          connected_neighbor_weight(csize, nsize) * value;
      for (int i : nbrs) minus[static_cast<std::size_t>(i)] += neighbor_part;
    }
  });
}

}  // namespace detail

Allocation myerson_exact_connected(const Graph& g,
                                   const CharacteristicFunction& v) {
  std::vector<double> plus;
  std::vector<double> minus;
  detail::myerson_plus_minus(g, v, plus, minus);
  Allocation out;
  out.method = "exact_connected";
  out.values.assign(plus.size(), 0.0);
  for (std::size_t i = 0; i < plus.size(); ++i) {
    out.values[i] = plus[i] - minus[i];
  }
  return out;
}

}  // namespace myerson
