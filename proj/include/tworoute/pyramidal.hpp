#ifndef TWOROUTE_PYRAMIDAL_HPP
#define TWOROUTE_PYRAMIDAL_HPP

#include <span>
#include <vector>

#include "tworoute/matrix.hpp"

namespace tworoute {

/// Closed tour; `nodes` is a permutation of {1..n} starting at node 1, the
/// closing edge back to node 1 is implicit.
struct Tour {
  std::vector<int> nodes;
  double length = 0.0;
};

double tour_cost(const AsymmetricCostMatrix& c, const std::vector<int>& nodes);

/// Minimum-length tour that ascends from node 1 to node n and then descends
/// back, over an asymmetric matrix. Quadratic-time dynamic program over the
/// 2^(n-2) such tours; on ties the branch that keeps the next node adjacent
/// to the first state endpoint wins, so the result is deterministic.
Tour optimal_pyramidal(const AsymmetricCostMatrix& c);

/// As above but on the relabeled matrix c[sigma(i)][sigma(j)]; the returned
/// tour is expressed in the original labels (rotated to start at node 1).
Tour optimal_pyramidal_relabeled(const AsymmetricCostMatrix& c, std::span<const int> sigma);

/// Iterated exponential-neighbourhood descent: for every cyclic shift of the
/// current numbering, take the optimal pyramidal tour of the relabeled
/// matrix; adopt the best of the n tours as the new numbering while it keeps
/// strictly improving. The result can not be improved by any 2-opt exchange.
Tour belperm(const AsymmetricCostMatrix& c, const Permutation& sigma0);

}  // namespace tworoute

#endif
