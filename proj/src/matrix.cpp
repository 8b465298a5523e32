#include "pathsense/matrix.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "pathsense/errors.hpp"

namespace pathsense {

std::vector<double> MeasurementMatrix::apply(std::span<const double> x) const {
  std::vector<double> y(m, 0.0);
  for (int i = 0; i < m; ++i) {
    double acc = 0.0;
    const int* row = &entries[static_cast<std::size_t>(i) * num_edges];
    for (int j = 0; j < num_edges; ++j)
      if (row[j] != 0) acc += row[j] * x[j];
    y[i] = acc;
  }
  return y;
}

std::vector<double> MeasurementMatrix::as_doubles() const {
  return std::vector<double>(entries.begin(), entries.end());
}

MeasurementMatrix matrix_from_rows(const std::vector<std::vector<int>>& rows,
                                   Provenance provenance) {
  if (rows.empty()) throw EmptyMatrix("matrix needs at least one row");
  MeasurementMatrix A;
  A.m = static_cast<int>(rows.size());
  A.num_edges = static_cast<int>(rows.front().size());
  A.provenance = provenance;
  A.entries.reserve(static_cast<std::size_t>(A.m) * A.num_edges);
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != A.num_edges)
      throw InvalidParameter("ragged matrix rows");
    for (int v : row) {
      if (v < 0) throw InvalidParameter("matrix entries must be nonnegative");
      A.entries.push_back(v);
    }
  }
  return A;
}

MeasurementMatrix build_matrix(const Graph& g, std::span<const Walk> walks,
                               bool regularized) {
  if (walks.empty()) throw EmptyMatrix("build_matrix needs at least one walk");
  MeasurementMatrix A;
  A.m = static_cast<int>(walks.size());
  A.num_edges = g.num_edges();
  A.provenance = regularized ? Provenance::Regularized : Provenance::Raw;
  A.entries.assign(static_cast<std::size_t>(A.m) * A.num_edges, 0);
  for (int i = 0; i < A.m; ++i) {
    if (!is_path_valid(walks[i], g))
      throw InvalidWalk("build_matrix: walk " + std::to_string(i) + " is not path-valid");
    const Walk& w = regularized ? regularize(walks[i], g) : walks[i];
    for (int e : w.edge_trace) ++A.at(i, e);
  }
  return A;
}

ColumnDegreeStats column_degree_stats(const MeasurementMatrix& A) {
  ColumnDegreeStats s;
  s.per_column.assign(A.num_edges, 0);
  for (int j = 0; j < A.num_edges; ++j) {
    int d = 0;
    for (int i = 0; i < A.m; ++i)
      if (A.at(i, j) != 0) ++d;
    s.per_column[j] = d;
  }
  s.d_min = *std::min_element(s.per_column.begin(), s.per_column.end());
  s.d_max = *std::max_element(s.per_column.begin(), s.per_column.end());
  s.histogram.assign(s.d_max + 1, 0);
  for (int d : s.per_column) ++s.histogram[d];
  return s;
}

std::string matrix_csv_string(const MeasurementMatrix& A) {
  std::ostringstream out;
  out << A.m << ',' << A.num_edges << '\n';
  for (int i = 0; i < A.m; ++i) {
    for (int j = 0; j < A.num_edges; ++j) {
      if (j) out << ',';
      out << A.at(i, j);
    }
    out << '\n';
  }
  return out.str();
}

void save_matrix_csv(const MeasurementMatrix& A, const std::string& path) {
  std::ofstream f(path);
  if (!f) throw IoError("cannot open for writing: " + path);
  f << matrix_csv_string(A);
  if (!f) throw IoError("write failed: " + path);
}

MeasurementMatrix parse_matrix_csv(const std::string& text, const std::string& origin) {
  std::istringstream in(text);
  std::string line;
  long lineno = 0;
  int m = -1, cols = -1;
  std::vector<std::vector<int>> rows;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::vector<int> fields;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) {
      try {
        std::size_t pos = 0;
        const int v = std::stoi(cell, &pos);
        if (pos != cell.size()) throw std::invalid_argument(cell);
        fields.push_back(v);
      } catch (const std::exception&) {
        throw IoError(origin, lineno, "expected integer, got \"" + cell + "\"");
      }
    }
    if (m < 0) {
      if (fields.size() != 2 || fields[0] < 1 || fields[1] < 1)
        throw IoError(origin, lineno, "expected header \"m,num_edges\"");
      m = fields[0];
      cols = fields[1];
      continue;
    }
    if (static_cast<int>(fields.size()) != cols)
      throw IoError(origin, lineno, "row has wrong number of columns");
    for (int v : fields)
      if (v < 0) throw IoError(origin, lineno, "entries must be nonnegative");
    rows.push_back(std::move(fields));
  }
  if (m < 0) throw IoError(origin, lineno, "empty matrix file");
  if (static_cast<int>(rows.size()) != m)
    throw IoError(origin, lineno, "row count does not match header");
  return matrix_from_rows(rows, Provenance::Literal);
}

MeasurementMatrix load_matrix_csv(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw IoError("cannot open: " + path);
  std::ostringstream buf;
  buf << f.rdbuf();
  return parse_matrix_csv(buf.str(), path);
}

}  // namespace pathsense
