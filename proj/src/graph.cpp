#include "myerson/graph.hpp"

#include <cstdio>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "myerson/rng.hpp"

namespace myerson {

Graph::Graph(int n) : n_(n) {
  if (n < 1 || n > 64) {
    throw std::invalid_argument("graph size must be between 1 and 64, got " +
                                std::to_string(n));
  }
  adj_.assign(static_cast<std::size_t>(n), Coalition());
}

Graph Graph::from_edges(int n,
                        const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || u >= n_ || v < 0 || v >= n_) {
    throw std::invalid_argument("edge endpoint out of range: " +
                                std::to_string(u) + " " + std::to_string(v));
  }
  if (u == v) {
    throw std::invalid_argument("self-loop rejected at node " +
                                std::to_string(u));
  }
  if (adj_[u].contains(v)) {
    throw std::invalid_argument("duplicate edge: " + std::to_string(u) + " " +
                                std::to_string(v));
  }
  adj_[u] = adj_[u].with(v);
  adj_[v] = adj_[v].with(u);
}

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_) return false;
  return adj_[u].contains(v);
}

int Graph::edge_count() const {
  int twice = 0;
  for (const Coalition& row : adj_) twice += row.size();
  return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(edge_count()));
  for (int u = 0; u < n_; ++u) {
    for (int v : adj_[u]) {
      if (v > u) out.emplace_back(u, v);
    }
  }
  return out;
}

namespace {

void check_members(const Graph& g, Coalition c) {
  if (!c.is_subset_of(g.full_coalition())) {
    throw std::invalid_argument("coalition contains nodes outside the graph");
  }
}

}  // namespace

bool is_connected(const Graph& g, Coalition c) {
  check_members(g, c);
  if (c.empty()) return false;
  std::uint64_t comp = c.bits() & (0 - c.bits());
  std::uint64_t frontier = comp;
  while (frontier != 0) {
    std::uint64_t grown = 0;
    for (int v : Coalition(frontier)) grown |= g.neighbors_of(v).bits();
    frontier = grown & c.bits() & ~comp;
    comp |= frontier;
  }
  return comp == c.bits();
}

Coalition neighbors(const Graph& g, Coalition c) {
  check_members(g, c);
  std::uint64_t grown = 0;
  for (int v : c) grown |= g.neighbors_of(v).bits();
  return Coalition(grown & ~c.bits());
}

std::vector<Coalition> components(const Graph& g, Coalition c) {
  check_members(g, c);
  std::vector<Coalition> out;
  for_each_component(g, c, [&](Coalition comp) { out.push_back(comp); });
  return out;
}

Graph make_cycle(int n) {
  if (n < 3) {
    throw std::invalid_argument("cycle graph needs n >= 3, got " +
                                std::to_string(n));
  }
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  g.add_edge(0, n - 1);
  return g;
}

Graph make_star(int n) {
  if (n < 2) {
    throw std::invalid_argument("star graph needs n >= 2, got " +
                                std::to_string(n));
  }
  Graph g(n);
  for (int v = 1; v < n; ++v) g.add_edge(0, v);
  return g;
}

Graph make_erdos_renyi(int n, double edge_prob, std::uint64_t seed) {
  if (edge_prob < 0.0 || edge_prob > 1.0) {
    throw std::invalid_argument("edge probability must lie in [0, 1]");
  }
  Graph g(n);
  RngStream rng(seed);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (rng.next_double() < edge_prob) g.add_edge(u, v);
    }
  }
  return g;
}

Graph make_barabasi_albert(int n, int m0, int m, std::uint64_t seed) {
  if (m < 1 || m > m0 || m0 >= n) {
    throw std::invalid_argument(
        "preferential attachment needs 1 <= m <= m0 < n");
  }
  Graph g(n);
  RngStream rng(seed);
  // Endpoint pool: every edge contributes both endpoints, so a node's
  // multiplicity equals its degree. Seed nodes form a path so the graph
  // stays connected.
  std::vector<int> endpoints;
  endpoints.reserve(static_cast<std::size_t>(2 * (m0 - 1 + (n - m0) * m)));
  for (int v = 0; v + 1 < m0; ++v) {
    g.add_edge(v, v + 1);
    endpoints.push_back(v);
    endpoints.push_back(v + 1);
  }
  for (int v = m0; v < n; ++v) {
    Coalition chosen;
    while (chosen.size() < m) {
      int target;
      if (endpoints.empty()) {
        // No edges yet (m0 == 1): fall back to a uniform choice.
        target = static_cast<int>(rng.uniform_int(0, v - 1));
      } else {
        target = endpoints[static_cast<std::size_t>(rng.uniform_int(
            0, static_cast<std::int64_t>(endpoints.size()) - 1))];
      }
      if (!chosen.contains(target)) chosen = chosen.with(target);
    }
    for (int target : chosen) {
      g.add_edge(v, target);
      endpoints.push_back(v);
      endpoints.push_back(target);
    }
  }
  return g;
}

Graph generate_graph(GraphModel model, const GraphParams& params,
                     std::uint64_t seed) {
  switch (model) {
    case GraphModel::cycle:
      return make_cycle(params.n);
    case GraphModel::star:
      return make_star(params.n);
    case GraphModel::erdos_renyi:
      return make_erdos_renyi(params.n, params.edge_prob, seed);
    case GraphModel::barabasi_albert:
      return make_barabasi_albert(params.n, params.m0, params.m, seed);
  }
  throw std::invalid_argument("unknown graph model");
}

GraphModel graph_model_from_string(std::string_view name) {
  if (name == "cycle") return GraphModel::cycle;
  if (name == "star") return GraphModel::star;
  if (name == "erdos_renyi") return GraphModel::erdos_renyi;
  if (name == "barabasi_albert") return GraphModel::barabasi_albert;
  throw std::invalid_argument("unknown graph model: " + std::string(name));
}

std::string to_string(GraphModel model) {
  switch (model) {
    case GraphModel::cycle:
      return "cycle";
    case GraphModel::star:
      return "star";
    case GraphModel::erdos_renyi:
      return "erdos_renyi";
    case GraphModel::barabasi_albert:
      return "barabasi_albert";
  }
  return "unknown";
}

std::string serialize_graph(const Graph& g) {
  std::string out = "n " + std::to_string(g.node_count()) + "\n";
  for (const auto& [u, v] : g.edges()) {
    out += std::to_string(u) + " " + std::to_string(v) + "\n";
  }
  return out;
}

Graph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  int n = -1;
  std::optional<Graph> g;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream fields(line);
    if (n < 0) {
      std::string tag;
      if (!(fields >> tag >> n) || tag != "n" || n < 1 || n > 64) {
        throw std::invalid_argument("graph header must be \"n <count>\" with "
                                    "1 <= count <= 64, line " +
                                    std::to_string(lineno));
      }
      std::string extra;
      if (fields >> extra) {
        throw std::invalid_argument("trailing tokens after graph header, "
                                    "line " +
                                    std::to_string(lineno));
      }
      g.emplace(n);
      continue;
    }
    int u = -1;
    int v = -1;
    if (!(fields >> u >> v)) {
      throw std::invalid_argument("bad edge line " + std::to_string(lineno) +
                                  ": " + line);
    }
    std::string extra;
    if (fields >> extra) {
      throw std::invalid_argument("trailing tokens on edge line " +
                                  std::to_string(lineno));
    }
    try {
      g->add_edge(u, v);
    } catch (const std::invalid_argument& err) {
      throw std::invalid_argument(std::string(err.what()) + ", line " +
                                  std::to_string(lineno));
    }
  }
  if (!g) throw std::invalid_argument("empty graph file");
  return *g;
}

}  // namespace myerson
