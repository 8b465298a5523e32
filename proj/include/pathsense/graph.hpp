#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pathsense {

/**
 * Undirected multigraph over vertices 0..n-1 with an indexed edge list.
 *
 * Immutable once built: construct through graph_from_edges() or a generator
 * and share freely across threads. Self-loops are rejected; parallel edges
 * are representable but no generator emits them.
 */
struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;                 // endpoint pairs, u < v
  std::vector<std::vector<std::pair<int, int>>> adjacency;  // vertex -> (neighbor, edge index)

  int num_edges() const { return static_cast<int>(edges.size()); }
  int degree(int v) const { return static_cast<int>(adjacency[v].size()); }
};

/// Validates endpoints and builds the symmetric adjacency structure.
Graph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges);

/// Complete graph K_n; n >= 2.
Graph make_complete(int n);

/// Erdos-Renyi G(n, p): each unordered pair kept independently with
/// probability p. Deterministic for a fixed seed.
Graph make_gnp(int n, double p, std::uint64_t seed);

/// True iff the graph has no isolated vertices and a single component.
bool is_connected(const Graph& g);

/// Degree extremes plus the walk mixing diagnostic.
struct GraphProfile {
  int d_min_vertex = 0;                 // smallest vertex degree
  int c = 0;                            // ceil(max degree / min degree)
  double delta = 0.0;                   // tolerance 1/(2cn)^2
  std::optional<int> mixing_time;       // steps to reach delta; nullopt = not reached
  int t_max = 0;                        // step cap that was used
};

/**
 * Exact mixing diagnostic by dense transition-matrix iteration: the smallest
 * t such that from every start vertex the t-step walk distribution is within
 * delta of the stationary law in the max norm. Periodic (bipartite) graphs
 * never reach it and report nullopt.
 */
GraphProfile profile(const Graph& g, int t_max);

/// Stationary law of the standard walk: degree(v) / (2|E|).
std::vector<double> stationary_distribution(const Graph& g);

/// One transition step of the standard walk applied to a distribution.
std::vector<double> walk_step(const Graph& g, const std::vector<double>& dist);

/// Edge-list text format: "n m" then one "u v" line per edge.
void save_edge_list(const Graph& g, const std::string& path);
Graph load_edge_list(const std::string& path);
std::string edge_list_string(const Graph& g);
Graph parse_edge_list(const std::string& text, const std::string& origin = "<string>");

}  // namespace pathsense
