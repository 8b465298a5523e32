#pragma once

#include <vector>

namespace pathsense::linalg {

/// Rank of a row-major rows x cols matrix by Gaussian elimination with
/// partial pivoting; pivots below `tol` count as zero.
int rank(const std::vector<double>& a, int rows, int cols, double tol);

struct LstsqResult {
  std::vector<double> solution;  // one least-squares minimizer (free variables zeroed)
  int rank = 0;                  // numerical rank of the coefficient matrix
  double residual_inf = 0.0;     // max-norm of A*solution - y
};

/// Least squares min ||A z - y||_2 via the normal equations with full pivoting.
/// When A is column-rank-deficient the returned minimizer has the non-pivot
/// coordinates set to zero; the residual is the same for every minimizer.
LstsqResult lstsq(const std::vector<double>& a, int rows, int cols,
                  const std::vector<double>& y, double tol);

/// Solve the square system A x = b in place; returns false if A is singular
/// at tolerance `tol`.
bool solve_square(std::vector<double> a, int n, std::vector<double> b,
                  std::vector<double>& x, double tol);

}  // namespace pathsense::linalg
