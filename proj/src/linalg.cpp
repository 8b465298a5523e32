#include "pathsense/linalg.hpp"

#include <cmath>
#include <cstdlib>

namespace pathsense::linalg {

int rank(const std::vector<double>& a, int rows, int cols, double tol) {
  std::vector<double> m = a;
  int r = 0;
  for (int col = 0; col < cols && r < rows; ++col) {
    int pivot = -1;
    double best = tol;
    for (int i = r; i < rows; ++i) {
      const double v = std::abs(m[static_cast<std::size_t>(i) * cols + col]);
      if (v > best) {
        best = v;
        pivot = i;
      }
    }
    if (pivot < 0) continue;
    if (pivot != r) {
      for (int j = 0; j < cols; ++j)
        std::swap(m[static_cast<std::size_t>(pivot) * cols + j],
                  m[static_cast<std::size_t>(r) * cols + j]);
    }
    const double p = m[static_cast<std::size_t>(r) * cols + col];
    for (int i = r + 1; i < rows; ++i) {
      const double f = m[static_cast<std::size_t>(i) * cols + col] / p;
      if (f == 0.0) continue;
      for (int j = col; j < cols; ++j)
        m[static_cast<std::size_t>(i) * cols + j] -=
            f * m[static_cast<std::size_t>(r) * cols + j];
    }
    ++r;
  }
  return r;
}

LstsqResult lstsq(const std::vector<double>& a, int rows, int cols,
                  const std::vector<double>& y, double tol) {
  // Normal equations G z = h with G = A^T A, h = A^T y. Full pivoting on G;
  // non-pivot coordinates are fixed at zero, which picks one minimizer.
  std::vector<double> g(static_cast<std::size_t>(cols) * cols, 0.0);
  std::vector<double> h(cols, 0.0);
  for (int i = 0; i < rows; ++i) {
    const double* row = &a[static_cast<std::size_t>(i) * cols];
    for (int j = 0; j < cols; ++j) {
      h[j] += row[j] * y[i];
      for (int k = j; k < cols; ++k) g[static_cast<std::size_t>(j) * cols + k] += row[j] * row[k];
    }
  }
  for (int j = 0; j < cols; ++j)
    for (int k = 0; k < j; ++k)
      g[static_cast<std::size_t>(j) * cols + k] = g[static_cast<std::size_t>(k) * cols + j];

  std::vector<int> col_of(cols);
  for (int j = 0; j < cols; ++j) col_of[j] = j;
  int rank = 0;
  for (int step = 0; step < cols; ++step) {
    int pr = -1, pc = -1;
    double best = tol;
    for (int i = step; i < cols; ++i) {
      for (int j = step; j < cols; ++j) {
        const double v = std::abs(g[static_cast<std::size_t>(i) * cols + col_of[j]]);
        if (v > best) {
          best = v;
          pr = i;
          pc = j;
        }
      }
    }
    if (pr < 0) break;
    if (pr != step) {
      for (int j = 0; j < cols; ++j)
        std::swap(g[static_cast<std::size_t>(pr) * cols + j],
                  g[static_cast<std::size_t>(step) * cols + j]);
      std::swap(h[pr], h[step]);
    }
    std::swap(col_of[pc], col_of[step]);
    const double p = g[static_cast<std::size_t>(step) * cols + col_of[step]];
    for (int i = step + 1; i < cols; ++i) {
      const double f = g[static_cast<std::size_t>(i) * cols + col_of[step]] / p;
      if (f == 0.0) continue;
      for (int j = step; j < cols; ++j)
        g[static_cast<std::size_t>(i) * cols + col_of[j]] -=
            f * g[static_cast<std::size_t>(step) * cols + col_of[j]];
      h[i] -= f * h[step];
    }
    ++rank;
  }

  LstsqResult out;
  out.rank = rank;
  out.solution.assign(cols, 0.0);
  for (int i = rank - 1; i >= 0; --i) {
    double s = h[i];
    for (int j = i + 1; j < rank; ++j)
      s -= g[static_cast<std::size_t>(i) * cols + col_of[j]] * out.solution[col_of[j]];
    out.solution[col_of[i]] = s / g[static_cast<std::size_t>(i) * cols + col_of[i]];
  }

  out.residual_inf = 0.0;
  for (int i = 0; i < rows; ++i) {
    double r = -y[i];
    const double* row = &a[static_cast<std::size_t>(i) * cols];
    for (int j = 0; j < cols; ++j) r += row[j] * out.solution[j];
    out.residual_inf = std::max(out.residual_inf, std::abs(r));
  }
  return out;
}

bool solve_square(std::vector<double> a, int n, std::vector<double> b,
                  std::vector<double>& x, double tol) {
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    double best = std::abs(a[static_cast<std::size_t>(col) * n + col]);
    for (int i = col + 1; i < n; ++i) {
      const double v = std::abs(a[static_cast<std::size_t>(i) * n + col]);
      if (v > best) {
        best = v;
        pivot = i;
      }
    }
    if (best <= tol) return false;
    if (pivot != col) {
      for (int j = 0; j < n; ++j)
        std::swap(a[static_cast<std::size_t>(pivot) * n + j],
                  a[static_cast<std::size_t>(col) * n + j]);
      std::swap(b[pivot], b[col]);
    }
    const double p = a[static_cast<std::size_t>(col) * n + col];
    for (int i = col + 1; i < n; ++i) {
      const double f = a[static_cast<std::size_t>(i) * n + col] / p;
      if (f == 0.0) continue;
      for (int j = col; j < n; ++j)
        a[static_cast<std::size_t>(i) * n + j] -= f * a[static_cast<std::size_t>(col) * n + j];
      b[i] -= f * b[col];
    }
  }
  x.assign(n, 0.0);
  for (int i = n - 1; i >= 0; --i) {
    double s = b[i];
    for (int j = i + 1; j < n; ++j) s -= a[static_cast<std::size_t>(i) * n + j] * x[j];
    x[i] = s / a[static_cast<std::size_t>(i) * n + i];
  }
  return true;
}

}  // namespace pathsense::linalg
