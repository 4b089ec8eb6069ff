#include "myerson/allocation.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace myerson {

std::string serialize_allocation(const Allocation& a) {
  std::string out;
  char buf[64];
  for (std::size_t v = 0; v < a.values.size(); ++v) {
    std::snprintf(buf, sizeof(buf), "%zu %.12g\n", v, a.values[v]);
    out += buf;
  }
  return out;
}

std::vector<double> parse_allocation(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  std::vector<double> values;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::size_t node = 0;
    std::string value_text;
    if (!(fields >> node >> value_text) || node != values.size()) {
      throw std::invalid_argument("bad allocation line " +
                                  std::to_string(lineno) + ": " + line);
    }
    char* end = nullptr;
    const double value = std::strtod(value_text.c_str(), &end);
    if (end == value_text.c_str() || *end != '\0') {
      throw std::invalid_argument("bad allocation value on line " +
                                  std::to_string(lineno) + ": " + value_text);
    }
    values.push_back(value);
  }
  if (values.empty()) throw std::invalid_argument("empty allocation");
  return values;
}

double l1_error(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("payoff vectors differ in length");
  }
  double total = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) total += std::fabs(a[i] - b[i]);
  return total;
}

}  // namespace myerson
