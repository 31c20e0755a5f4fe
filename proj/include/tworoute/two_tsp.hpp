#ifndef TWOROUTE_TWO_TSP_HPP
#define TWOROUTE_TWO_TSP_HPP

#include <string>
#include <vector>

#include "tworoute/matrix.hpp"

namespace tworoute {

/// Two-period instance: every node in `fixed` is visited in both periods,
/// every other node in exactly one, and the two closed tours through node 1
/// must have (near-)equal node counts.
class TwoTspInstance {
 public:
  /// `fixed` must contain node 1; n + |fixed| must be even unless
  /// near_balanced is set.
  TwoTspInstance(SymmetricCostMatrix matrix, std::vector<int> fixed,
                 bool near_balanced = false);

  const SymmetricCostMatrix& matrix() const { return matrix_; }
  const std::vector<int>& fixed() const { return fixed_; }  // sorted ascending
  bool is_fixed(int node) const { return fixed_mask_[static_cast<std::size_t>(node)]; }
  bool near_balanced() const { return near_balanced_; }
  int n() const { return matrix_.size(); }

  /// Larger of the two admissible tour sizes (node 1 counted once per tour);
  /// for an even n + |fixed| both tours have exactly this size.
  int p() const { return (n() + static_cast<int>(fixed_.size()) + 1) / 2; }

 private:
  SymmetricCostMatrix matrix_;
  std::vector<int> fixed_;
  std::vector<char> fixed_mask_;
  bool near_balanced_;
};

/// Pair of closed tours; each sequence starts and ends with node 1.
struct TwoTourSolution {
  std::vector<int> tour1, tour2;
  double total_length = 0.0;
};

struct EvalReport {
  bool feasible = false;
  double total = 0.0;
  std::vector<std::string> violations;
};

/// Exact optimum over the family of solutions whose tours visit their nodes
/// in increasing resp. decreasing label order. Cubic time and space. When the
/// matrix satisfies the Kalmanson conditions in its given labeling, the
/// master-tour property makes this the global optimum.
TwoTourSolution solve_balanced_2tsp(const TwoTspInstance& inst);

/// Same optimum computed with rolling quadratic-space tables. Returns only
/// the value unless `reconstruct`, which re-runs the cubic solver to get the
/// tours.
TwoTourSolution solve_balanced_2tsp_lowmem(const TwoTspInstance& inst,
                                           bool reconstruct = false);

/// Brute force: enumerates every balanced split of the free nodes and solves
/// both tours by full permutation enumeration. Guarded to n + |fixed| <= 18.
TwoTourSolution oracle_2tsp(const TwoTspInstance& inst);

/// Checks coverage, balance, and endpoints; recomputes the total. Violations
/// are reported, never thrown.
EvalReport evaluate_solution(const TwoTspInstance& inst, const TwoTourSolution& sol);

/// Length of a closed tour given as a node sequence whose first and last
/// entries are the same node.
double closed_tour_length(const SymmetricCostMatrix& c, const std::vector<int>& seq);

}  // namespace tworoute

#endif
