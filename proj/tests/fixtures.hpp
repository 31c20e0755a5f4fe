#ifndef TWOROUTE_TESTS_FIXTURES_HPP
#define TWOROUTE_TESTS_FIXTURES_HPP

#include <vector>

#include "tworoute/matrix.hpp"

namespace fixtures {

// 5x5 Kalmanson matrix produced by the worked construction with first row
// (0,3,1,3,0), c25=2, betas (1,1), alphas a13=2, a14=3, a24=1.
inline tworoute::SymmetricCostMatrix kalmanson5() {
  return tworoute::SymmetricCostMatrix(5, {0, 5, 3, 5, 2,   //
                                           5, 0, 0, 4, 4,   //
                                           3, 0, 0, 0, 1,   //
                                           5, 4, 0, 0, 2,   //
                                           2, 4, 1, 2, 0});
}

// kalmanson5 with rows/columns relabeled by (3,2,4,1,5).
inline tworoute::SymmetricCostMatrix disguised5() {
  return tworoute::SymmetricCostMatrix(5, {0, 0, 0, 3, 1,   //
                                           0, 0, 4, 5, 4,   //
                                           0, 4, 0, 5, 2,   //
                                           3, 5, 5, 0, 2,   //
                                           1, 4, 2, 2, 0});
}

// Four points on a convex hull (diamond); the classic nearest neighbour trap.
inline tworoute::SymmetricCostMatrix diamond4() {
  return tworoute::SymmetricCostMatrix(4, {0, 22, 40, 22,   //
                                           22, 0, 22, 20,   //
                                           40, 22, 0, 22,   //
                                           22, 20, 22, 0});
}

}  // namespace fixtures

#endif
