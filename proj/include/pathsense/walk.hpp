#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pathsense/graph.hpp"

namespace pathsense {

/// Ordered traversal of t edges; vertices has t+1 entries and edge_trace[i]
/// is the edge connecting vertices[i] and vertices[i+1].
struct Walk {
  std::vector<int> vertices;
  std::vector<int> edge_trace;

  int length() const { return static_cast<int>(edge_trace.size()); }
  int start() const { return vertices.front(); }
};

enum class StartMode {
  UniformVertex,        // start vertex uniform over V
  DegreeProportional,   // start vertex with probability degree/(2|E|)
};

struct WalkConfig {
  int length = 1;
  StartMode start_mode = StartMode::UniformVertex;
  std::uint64_t seed = 0;
};

/// Standard random walk: each step moves to a uniformly random neighbor.
/// Deterministic for a fixed seed.
Walk random_walk(const Graph& g, const WalkConfig& cfg);

/// True iff every consecutive vertex pair is joined by the recorded edge.
bool is_path_valid(const Walk& w, const Graph& g);

/// Traversal count per edge index.
std::vector<int> edge_multiplicities(const Walk& w, int num_edges);

struct RegularizeOptions {
  // Trim walk ends whose edges are covered elsewhere in the trace. Off by
  // default: the <=2 multiplicity bound is what matters, not minimality.
  bool shorten = false;
};

/**
 * Rewrites a walk so that it covers exactly the same edge set while
 * traversing each edge at most twice.
 *
 * Walks already within the bound are returned unchanged. Otherwise every
 * visited edge is doubled, which makes all degrees of the visited subgraph
 * even, and an Eulerian circuit from the walk's start vertex traverses each
 * edge exactly twice (Hierholzer).
 */
Walk regularize(const Walk& w, const Graph& g, const RegularizeOptions& opts = {});

/// Walk text format: one line of space-separated vertex indices per walk.
void save_walks(std::span<const Walk> walks, const std::string& path);
std::vector<Walk> load_walks(const Graph& g, const std::string& path);
std::string walks_string(std::span<const Walk> walks);
std::vector<Walk> parse_walks(const Graph& g, const std::string& text,
                              const std::string& origin = "<string>");

}  // namespace pathsense
