#pragma once

#include <span>
#include <string>
#include <vector>

#include "pathsense/graph.hpp"
#include "pathsense/walk.hpp"

namespace pathsense {

enum class Provenance {
  Raw,          // rows count traversals of unmodified walks
  Regularized,  // rows built from regularized walks; entries <= 2
  Literal,      // loaded or hand-written fixture
};

/**
 * Dense m x |E| matrix of traversal counts; row i counts how many times
 * walk i crossed each edge. Immutable after construction.
 */
struct MeasurementMatrix {
  int m = 0;
  int num_edges = 0;
  std::vector<int> entries;  // row-major
  Provenance provenance = Provenance::Literal;

  int at(int row, int col) const {
    return entries[static_cast<std::size_t>(row) * num_edges + col];
  }
  int& at(int row, int col) {
    return entries[static_cast<std::size_t>(row) * num_edges + col];
  }

  /// y = A x, accumulated in doubles.
  std::vector<double> apply(std::span<const double> x) const;

  /// Entries as doubles (for rank tests and least squares).
  std::vector<double> as_doubles() const;
};

MeasurementMatrix matrix_from_rows(const std::vector<std::vector<int>>& rows,
                                   Provenance provenance = Provenance::Literal);

/// One row per walk; entry (i,j) counts traversals of edge j by walk i.
/// With `regularized` set each walk is regularized first.
MeasurementMatrix build_matrix(const Graph& g, std::span<const Walk> walks,
                               bool regularized);

struct ColumnDegreeStats {
  int d_min = 0;
  int d_max = 0;
  std::vector<int> per_column;  // nonzero count per column
  std::vector<int> histogram;   // histogram[d] = number of columns with d nonzeros
};

ColumnDegreeStats column_degree_stats(const MeasurementMatrix& A);

/// CSV format: header "m,num_edges" then m comma-separated integer rows.
/// Round trips bit-exactly.
void save_matrix_csv(const MeasurementMatrix& A, const std::string& path);
MeasurementMatrix load_matrix_csv(const std::string& path);
std::string matrix_csv_string(const MeasurementMatrix& A);
MeasurementMatrix parse_matrix_csv(const std::string& text,
                                   const std::string& origin = "<string>");

}  // namespace pathsense
