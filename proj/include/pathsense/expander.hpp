#pragma once

#include <string>
#include <vector>

#include "pathsense/matrix.hpp"

namespace pathsense {

/**
 * Exact bipartite-expansion statistics of a measurement matrix, viewing
 * columns as left nodes and rows as right nodes.
 *
 * For a column subset S, |E(S)| counts nonzero entries in those columns and
 * |N(S)| counts rows touching S. worst_ratio is the exact minimum of
 * |N(S)|/|E(S)| over all subsets with 1 <= |S| <= k_completed; the matrix is
 * a (k, 1-worst_ratio) expander.
 */
struct ExpanderReport {
  int k = 0;            // requested subset-size bound
  int k_completed = 0;  // sizes fully enumerated (< k only if the budget ran out)
  double worst_ratio = 1.0;
  double epsilon = 0.0;           // 1 - worst_ratio
  std::vector<int> witness;       // lexicographically smallest minimizing subset
  long long witness_neighbors = 0;  // |N(S)| of the witness
  long long witness_entries = 0;    // |E(S)| of the witness
  int d_min = 0;  // smallest column nonzero-count
  int d_max = 0;
  unsigned long long subsets_enumerated = 0;
};

inline constexpr unsigned long long kDefaultSubsetBudget = 20'000'000ULL;

/// Exhaustive enumeration of all column subsets of size 1..k. Subset sizes
/// are completed whole; if the next size would exceed `subset_budget` the
/// report carries k_completed < k. Enumeration is OpenMP-parallel and the
/// result does not depend on the thread count.
ExpanderReport expansion_report(const MeasurementMatrix& A, int k,
                                unsigned long long subset_budget = kDefaultSubsetBudget);

std::string expander_report_string(const ExpanderReport& r);

}  // namespace pathsense
