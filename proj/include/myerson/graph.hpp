#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "myerson/coalition.hpp"

namespace myerson {

// Simple undirected graph on nodes 0..n-1, n <= 64. Adjacency is stored as
// one coalition mask per node so that neighborhood and connectivity queries
// reduce to word operations.
class Graph {
 public:
  explicit Graph(int n);

  static Graph from_edges(int n,
                          const std::vector<std::pair<int, int>>& edges);

  int node_count() const { return n_; }
  Coalition full_coalition() const { return Coalition::full(n_); }

  // Adds the undirected edge {u, v}; rejects self-loops, out-of-range
  // endpoints, and duplicates.
  void add_edge(int u, int v);

  bool has_edge(int u, int v) const;
  Coalition neighbors_of(int v) const { return adj_[v]; }

  int edge_count() const;
  // Edges in canonical order: u < v, sorted ascending by (u, v).
  std::vector<std::pair<int, int>> edges() const;

 private:
  int n_;
  std::vector<Coalition> adj_;
};

// True iff the subgraph induced by c is connected. The empty coalition is
// not connected; singletons are.
bool is_connected(const Graph& g, Coalition c);

// Nodes outside c adjacent to at least one member of c.
Coalition neighbors(const Graph& g, Coalition c);

// Connected components of the subgraph induced by c, ordered by smallest
// member index.
std::vector<Coalition> components(const Graph& g, Coalition c);

// Calls fn(component) for each connected component of the subgraph induced
// by c, in ascending order of smallest member. Allocation-free variant of
// components() for hot paths.
template <class F>
void for_each_component(const Graph& g, Coalition c, F&& fn) {
  std::uint64_t rest = c.bits();
  while (rest != 0) {
    std::uint64_t comp = rest & (0 - rest);  // lowest remaining bit
    std::uint64_t frontier = comp;
    while (frontier != 0) {
      std::uint64_t grown = 0;
      for (int v : Coalition(frontier)) grown |= g.neighbors_of(v).bits();
      frontier = grown & c.bits() & ~comp;
      comp |= frontier;
    }
    fn(Coalition(comp));
    rest &= ~comp;
  }
}

// --- Generators -----------------------------------------------------------

// Cycle 0-1-...-(n-1)-0; requires n >= 3.
Graph make_cycle(int n);

// Star with center 0 and leaves 1..n-1; requires n >= 2.
Graph make_star(int n);

// Erdos-Renyi G(n, p): each of the n(n-1)/2 node pairs is an edge
// independently with probability p, in canonical pair order.
Graph make_erdos_renyi(int n, double edge_prob, std::uint64_t seed);

// Barabasi-Albert preferential attachment: a path on the m0 seed nodes,
// then each arriving node attaches to m distinct existing nodes chosen with
// probability proportional to degree. Requires 1 <= m <= m0 < n.
Graph make_barabasi_albert(int n, int m0, int m, std::uint64_t seed);

enum class GraphModel { cycle, star, erdos_renyi, barabasi_albert };

struct GraphParams {
  int n = 0;
  double edge_prob = 0.5;  // erdos_renyi
  int m0 = 2;              // barabasi_albert seed nodes
  int m = 2;               // barabasi_albert edges per arrival
};

Graph generate_graph(GraphModel model, const GraphParams& params,
                     std::uint64_t seed);

GraphModel graph_model_from_string(std::string_view name);
std::string to_string(GraphModel model);

// --- Serialization --------------------------------------------------------

// Text format: a header line "n <count>" followed by one "<u> <v>" line per
// edge with u < v, in ascending order.
std::string serialize_graph(const Graph& g);
Graph parse_graph(std::string_view text);

}  // namespace myerson
