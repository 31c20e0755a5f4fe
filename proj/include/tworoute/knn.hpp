#ifndef TWOROUTE_KNN_HPP
#define TWOROUTE_KNN_HPP

#include "tworoute/matrix.hpp"
#include "tworoute/two_tsp.hpp"

namespace tworoute {

struct KnnResult {
  /// Cyclic visiting order of all n nodes, rotated so node 1 is first. On a
  /// permuted strong Kalmanson matrix this permutation restores the hidden
  /// ordering (up to rotation/reversal).
  Permutation tour;
  int used_start;
};

/// Nearest-neighbour-to-either-endpoint path growth over the zero-transformed
/// matrix, restricted to nodes {2..n}, followed by a cheapest insertion of
/// node 1 measured in the original costs. Ties pick the smallest node label;
/// an endpoint tie extends at the tail of the path.
KnnResult knn(const SymmetricCostMatrix& c, int start);

/// Balanced two-period heuristic for arbitrary symmetric matrices: for every
/// start node, recognize an ordering with knn, solve the relabeled instance
/// with the exact balanced solver, polish both tours with belperm, and keep
/// the best feasible result of the n-1 starts.
TwoTourSolution ks_heuristic(const TwoTspInstance& inst);

/// One iteration of ks_heuristic for a single start node in 2..n.
TwoTourSolution ks_single_start(const TwoTspInstance& inst, int start);

/// The belperm polish used by ks_heuristic, exposed for reuse: improves one
/// closed tour (sequence starting and ending at node 1) on the induced
/// submatrix, keeping its node set. Returns the improved sequence.
std::vector<int> improve_subtour(const SymmetricCostMatrix& c, const std::vector<int>& tour);

}  // namespace tworoute

#endif
