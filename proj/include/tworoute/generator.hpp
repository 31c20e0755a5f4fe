#ifndef TWOROUTE_GENERATOR_HPP
#define TWOROUTE_GENERATOR_HPP

#include <cstdint>
#include <vector>

#include "tworoute/matrix.hpp"
#include "tworoute/two_tsp.hpp"

namespace tworoute {

struct GeneratorParams {
  int n = 0;                  // order, >= 4
  double lo = 0.1, hi = 1.1;  // range for first-row entries and alpha/beta draws
  std::uint64_t seed = 0;
  bool permute_output = true;  // disguise the structure with a random relabeling
  bool strong = true;          // strict inequalities; requires lo > 0
};

struct GeneratedInstance {
  SymmetricCostMatrix matrix;
  /// Maps positions of the hidden ordering to node labels of `matrix`:
  /// permute(matrix, hidden_order) satisfies the Kalmanson conditions.
  Permutation hidden_order;
  std::vector<double> alphas;  // row-major: i = 1..n-3, j = i+2..n-1
  std::vector<double> betas;   // i = 2..n-2
};

/// Deterministic inputs for the construction, exposed so a run can be driven
/// with hand-picked numbers instead of the seeded stream.
struct KalmansonInputs {
  int n = 0;
  std::vector<double> first_row;  // c(1,i) for i = 2..n
  double c2n = 0.0;               // c(2,n)
  std::vector<double> betas;      // i = 2..n-2
  std::vector<double> alphas;     // row-major as in GeneratedInstance
};

/// Intermediate matrices of the construction, for inspection and tests.
struct KalmansonStages {
  RealMatrix border;       // first row/column and last row/column filled
  RealMatrix complete;     // all entries filled, possibly negative
  SymmetricCostMatrix nonnegative;  // after shifting off-diagonal entries
  KalmansonStages() : nonnegative(3, std::vector<double>(9, 0.0)) {}
};

/// Builds a Kalmanson matrix from explicit inputs: fills the last column top
/// down from the beta differences, then the interior row by row (columns
/// walked right to left) from the alpha differences, then shifts all
/// off-diagonal entries up by the most negative one if any entry is negative.
SymmetricCostMatrix build_kalmanson(const KalmansonInputs& in, KalmansonStages* stages = nullptr);

/// Seeded construction. Draw order: first-row entries for i=2..n, then
/// c(2,n), then betas in index order, then alphas row-major, then (if
/// requested) the disguising relabeling by Fisher-Yates over labels 2..n.
/// Label 1 always keeps hidden rank 1, so instances built on top can treat
/// node 1 as the home node.
GeneratedInstance generate_kalmanson(const GeneratorParams& params);

struct Generated2Tsp {
  TwoTspInstance instance;  // fixed set expressed in the (possibly permuted) labels
  double known_optimum;     // exact optimum, computed on the hidden ordering
  GeneratedInstance source;
};

/// Builds a two-period instance with a known optimum: generates a matrix,
/// draws a uniform fixed set of the given size that always contains the node
/// ranked first by the hidden ordering, and solves the instance exactly on
/// the hidden ordering. n + fixed_count must be even unless allow_odd, which
/// switches the solver to its near-balanced boundary.
Generated2Tsp generate_2tsp_instance(const GeneratorParams& params, int fixed_count,
                                     bool allow_odd = false);

}  // namespace tworoute

#endif
