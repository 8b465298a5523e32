#include "pathsense/walk.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "pathsense/errors.hpp"
#include "pathsense/rng.hpp"

namespace pathsense {

Walk random_walk(const Graph& g, const WalkConfig& cfg) {
  if (cfg.length < 1) throw InvalidParameter("walk length must be >= 1");
  if (!is_connected(g)) throw GraphNotConnected("random walk requires a connected graph");

  Rng rng(cfg.seed);
  int v;
  if (cfg.start_mode == StartMode::UniformVertex) {
    v = static_cast<int>(rng.uniform_index(g.n));
  } else {
    // A uniform edge plus a fair endpoint draw realizes degree/(2|E|) exactly.
    const auto& [a, b] = g.edges[rng.uniform_index(g.edges.size())];
    v = rng.uniform_index(2) == 0 ? a : b;
  }

  Walk w;
  w.vertices.reserve(cfg.length + 1);
  w.edge_trace.reserve(cfg.length);
  w.vertices.push_back(v);
  for (int step = 0; step < cfg.length; ++step) {
    const auto& [u, e] = g.adjacency[v][rng.uniform_index(g.adjacency[v].size())];
    w.vertices.push_back(u);
    w.edge_trace.push_back(e);
    v = u;
  }
  return w;
}

bool is_path_valid(const Walk& w, const Graph& g) {
  if (w.vertices.size() != w.edge_trace.size() + 1) return false;
  if (w.vertices.empty()) return false;
  for (int v : w.vertices)
    if (v < 0 || v >= g.n) return false;
  for (std::size_t i = 0; i < w.edge_trace.size(); ++i) {
    const int e = w.edge_trace[i];
    if (e < 0 || e >= g.num_edges()) return false;
    const auto& [a, b] = g.edges[e];
    const int x = w.vertices[i], y = w.vertices[i + 1];
    if (!((a == x && b == y) || (a == y && b == x))) return false;
  }
  return true;
}

std::vector<int> edge_multiplicities(const Walk& w, int num_edges) {
  std::vector<int> mult(num_edges, 0);
  for (int e : w.edge_trace) ++mult[e];
  return mult;
}

namespace {

// Trim traversals off either end while the trimmed edge stays covered
// elsewhere in the trace.
void trim_ends(Walk& w, std::vector<int>& mult) {
  bool changed = true;
  while (changed && w.edge_trace.size() > 1) {
    changed = false;
    if (mult[w.edge_trace.front()] >= 2) {
      --mult[w.edge_trace.front()];
      w.edge_trace.erase(w.edge_trace.begin());
      w.vertices.erase(w.vertices.begin());
      changed = true;
    }
    if (w.edge_trace.size() > 1 && mult[w.edge_trace.back()] >= 2) {
      --mult[w.edge_trace.back()];
      w.edge_trace.pop_back();
      w.vertices.pop_back();
      changed = true;
    }
  }
}

}  // namespace

Walk regularize(const Walk& w, const Graph& g, const RegularizeOptions& opts) {
  if (!is_path_valid(w, g)) throw InvalidWalk("regularize: walk is not path-valid");

  std::vector<int> mult = edge_multiplicities(w, g.num_edges());
  if (*std::max_element(mult.begin(), mult.end()) <= 2) return w;

  // Visited edges in ascending index order, each doubled.
  std::vector<int> visited;
  for (int e = 0; e < g.num_edges(); ++e)
    if (mult[e] > 0) visited.push_back(e);

  struct Arc {
    int to;
    int edge;
    int copy;  // index into `used`
  };
  std::vector<std::vector<Arc>> adj(g.n);
  std::vector<char> used;
  used.reserve(visited.size() * 2);
  for (int e : visited) {
    const auto& [u, v] = g.edges[e];
    for (int dup = 0; dup < 2; ++dup) {
      const int copy = static_cast<int>(used.size());
      used.push_back(0);
      adj[u].push_back({v, e, copy});
      adj[v].push_back({u, e, copy});
    }
  }

  // Iterative Hierholzer from the walk's original start vertex. All degrees
  // in the doubled subgraph are even and it is connected, so a circuit
  // covering every copy exists.
  std::vector<std::size_t> next(g.n, 0);
  std::vector<std::pair<int, int>> stack;  // (vertex, edge used to reach it)
  std::vector<std::pair<int, int>> circuit;
  stack.emplace_back(w.start(), -1);
  while (!stack.empty()) {
    const int v = stack.back().first;
    auto& ptr = next[v];
    while (ptr < adj[v].size() && used[adj[v][ptr].copy]) ++ptr;
    if (ptr == adj[v].size()) {
      circuit.push_back(stack.back());
      stack.pop_back();
    } else {
      const Arc& arc = adj[v][ptr];
      used[arc.copy] = 1;
      stack.emplace_back(arc.to, arc.edge);
    }
  }
  std::reverse(circuit.begin(), circuit.end());

  Walk out;
  out.vertices.reserve(circuit.size());
  out.edge_trace.reserve(circuit.size() - 1);
  for (std::size_t i = 0; i < circuit.size(); ++i) {
    out.vertices.push_back(circuit[i].first);
    if (i + 1 < circuit.size()) out.edge_trace.push_back(circuit[i + 1].second);
  }

  if (opts.shorten) {
    std::vector<int> out_mult = edge_multiplicities(out, g.num_edges());
    trim_ends(out, out_mult);
  }
  return out;
}

std::string walks_string(std::span<const Walk> walks) {
  std::ostringstream out;
  for (const Walk& w : walks) {
    for (std::size_t i = 0; i < w.vertices.size(); ++i) {
      if (i) out << ' ';
      out << w.vertices[i];
    }
    out << '\n';
  }
  return out.str();
}

void save_walks(std::span<const Walk> walks, const std::string& path) {
  std::ofstream f(path);
  if (!f) throw IoError("cannot open for writing: " + path);
  f << walks_string(walks);
  if (!f) throw IoError("write failed: " + path);
}

std::vector<Walk> parse_walks(const Graph& g, const std::string& text,
                              const std::string& origin) {
  std::vector<Walk> walks;
  std::istringstream in(text);
  std::string line;
  long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream ls(line);
    Walk w;
    int v;
    while (ls >> v) w.vertices.push_back(v);
    if (!ls.eof()) throw IoError(origin, lineno, "expected vertex indices");
    if (w.vertices.size() < 2) throw IoError(origin, lineno, "walk needs at least two vertices");
    for (std::size_t i = 0; i + 1 < w.vertices.size(); ++i) {
      const int a = w.vertices[i], b = w.vertices[i + 1];
      if (a < 0 || a >= g.n || b < 0 || b >= g.n)
        throw IoError(origin, lineno, "vertex index out of range");
      int edge = -1;
      for (const auto& [u, e] : g.adjacency[a]) {
        if (u == b) {
          edge = e;
          break;
        }
      }
      if (edge < 0) throw IoError(origin, lineno, "consecutive vertices are not adjacent");
      w.edge_trace.push_back(edge);
    }
    walks.push_back(std::move(w));
  }
  return walks;
}

std::vector<Walk> load_walks(const Graph& g, const std::string& path) {
  std::ifstream f(path);
  if (!f) throw IoError("cannot open: " + path);
  std::ostringstream buf;
  buf << f.rdbuf();
  return parse_walks(g, buf.str(), path);
}

}  // namespace pathsense
