#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace myerson {

// A payoff vector plus provenance: which method produced it and how much
// work it took. Only the values take part in serialization.
struct Allocation {
  std::vector<double> values;
  std::string method;
  std::uint64_t samples_used = 0;
  std::int64_t elapsed_ns = 0;
};

// One "<node> <value>" line per player, nodes ascending, values printed
// with 12 significant digits.
std::string serialize_allocation(const Allocation& a);

// Parses the format above back into a payoff vector.
std::vector<double> parse_allocation(std::string_view text);

// Sum of absolute per-node deviations between two payoff vectors of equal
// length.
double l1_error(const std::vector<double>& a, const std::vector<double>& b);

}  // namespace myerson
