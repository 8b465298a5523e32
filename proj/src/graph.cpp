#include "pathsense/graph.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "pathsense/errors.hpp"
#include "pathsense/rng.hpp"

namespace pathsense {

Graph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 1) throw InvalidParameter("graph needs at least one vertex");
  Graph g;
  g.n = n;
  g.adjacency.resize(n);
  g.edges.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    if (a == b) throw InvalidParameter("self-loops are not allowed");
    if (a < 0 || b < 0 || a >= n || b >= n)
      throw InvalidParameter("edge endpoint out of range");
    const int u = std::min(a, b);
    const int v = std::max(a, b);
    const int e = static_cast<int>(g.edges.size());
    g.edges.emplace_back(u, v);
    g.adjacency[u].emplace_back(v, e);
    g.adjacency[v].emplace_back(u, e);
  }
  return g;
}

Graph make_complete(int n) {
  if (n < 2) throw InvalidParameter("complete graph needs n >= 2");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return graph_from_edges(n, edges);
}

Graph make_gnp(int n, double p, std::uint64_t seed) {
  if (n < 1) throw InvalidParameter("gnp graph needs n >= 1");
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidParameter("gnp probability must lie in [0,1]");
  Rng rng(seed);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.uniform01() < p) edges.emplace_back(u, v);
  return graph_from_edges(n, edges);
}

bool is_connected(const Graph& g) {
  if (g.n == 0) return false;
  for (int v = 0; v < g.n; ++v)
    if (g.adjacency[v].empty()) return false;
  std::vector<char> seen(g.n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (const auto& [u, e] : g.adjacency[v]) {
      (void)e;
      if (!seen[u]) {
        seen[u] = 1;
        ++count;
        stack.push_back(u);
      }
    }
  }
  return count == g.n;
}

std::vector<double> stationary_distribution(const Graph& g) {
  std::vector<double> mu(g.n, 0.0);
  const double denom = 2.0 * g.num_edges();
  for (int v = 0; v < g.n; ++v) mu[v] = g.degree(v) / denom;
  return mu;
}

std::vector<double> walk_step(const Graph& g, const std::vector<double>& dist) {
  std::vector<double> next(g.n, 0.0);
  for (int v = 0; v < g.n; ++v) {
    if (dist[v] == 0.0 || g.adjacency[v].empty()) continue;
    const double share = dist[v] / g.degree(v);
    for (const auto& [u, e] : g.adjacency[v]) {
      (void)e;
      next[u] += share;
    }
  }
  return next;
}

GraphProfile profile(const Graph& g, int t_max) {
  if (t_max < 1) throw InvalidParameter("profile needs t_max >= 1");
  if (!is_connected(g)) throw GraphNotConnected("profile requires a connected graph");

  GraphProfile out;
  int d_min = g.degree(0), d_max = g.degree(0);
  for (int v = 1; v < g.n; ++v) {
    d_min = std::min(d_min, g.degree(v));
    d_max = std::max(d_max, g.degree(v));
  }
  out.d_min_vertex = d_min;
  out.c = (d_max + d_min - 1) / d_min;  // ceil(d_max / d_min)
  const double cn = 2.0 * out.c * g.n;
  out.delta = 1.0 / (cn * cn);
  out.t_max = t_max;

  // Dense n x n iteration of P^t; row i tracks the walk started at vertex i.
  const std::vector<double> mu = stationary_distribution(g);
  std::vector<std::vector<double>> rows(g.n);
  for (int i = 0; i < g.n; ++i) {
    rows[i].assign(g.n, 0.0);
    rows[i][i] = 1.0;
  }
  for (int t = 1; t <= t_max; ++t) {
    double worst = 0.0;
    for (int i = 0; i < g.n; ++i) {
      rows[i] = walk_step(g, rows[i]);
      for (int v = 0; v < g.n; ++v)
        worst = std::max(worst, std::abs(rows[i][v] - mu[v]));
    }
    if (worst <= out.delta) {
      out.mixing_time = t;
      break;
    }
  }
  return out;
}

std::string edge_list_string(const Graph& g) {
  std::ostringstream out;
  out << g.n << ' ' << g.num_edges() << '\n';
  for (const auto& [u, v] : g.edges) out << u << ' ' << v << '\n';
  return out.str();
}

void save_edge_list(const Graph& g, const std::string& path) {
  std::ofstream f(path);
  if (!f) throw IoError("cannot open for writing: " + path);
  f << edge_list_string(g);
  if (!f) throw IoError("write failed: " + path);
}

Graph parse_edge_list(const std::string& text, const std::string& origin) {
  std::istringstream in(text);
  std::string line;
  long lineno = 0;
  int n = -1, m = -1;
  std::vector<std::pair<int, int>> edges;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream ls(line);
    if (n < 0) {
      if (!(ls >> n >> m) || n < 1 || m < 0)
        throw IoError(origin, lineno, "expected header \"n m\"");
      edges.reserve(m);
      continue;
    }
    int u, v;
    if (!(ls >> u >> v)) throw IoError(origin, lineno, "expected edge \"u v\"");
    edges.emplace_back(u, v);
  }
  if (n < 0) throw IoError(origin, lineno, "empty edge-list file");
  if (static_cast<int>(edges.size()) != m)
    throw IoError(origin, lineno, "edge count does not match header");
  try {
    return graph_from_edges(n, edges);
  } catch (const InvalidParameter& e) {
    throw IoError(origin, lineno, e.what());
  }
}

Graph load_edge_list(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw IoError("cannot open: " + path);
  std::ostringstream buf;
  buf << f.rdbuf();
  return parse_edge_list(buf.str(), path);
}

}  // namespace pathsense
