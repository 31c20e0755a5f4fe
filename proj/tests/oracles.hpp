#ifndef TWOROUTE_TESTS_ORACLES_HPP
#define TWOROUTE_TESTS_ORACLES_HPP

// Brute-force reference implementations, test-side only. They share no code
// with the solvers they check.

#include <algorithm>
#include <vector>

#include "tworoute/matrix.hpp"
#include "tworoute/pyramidal.hpp"
#include "tworoute/rng.hpp"

namespace oracles {

// Optimal closed tour over the given node set (node 1 pinned first), by
// enumerating every permutation of the remaining nodes.
template <typename M>
double brute_tsp(const M& c, std::vector<int> nodes) {
  auto it = std::find(nodes.begin(), nodes.end(), 1);
  if (it != nodes.end()) nodes.erase(it);
  std::sort(nodes.begin(), nodes.end());
  double best = tworoute::kInf;
  do {
    double len = 0.0;
    int at = 1;
    for (int v : nodes) {
      len += c.cost(at, v);
      at = v;
    }
    len += c.cost(at, 1);
    best = std::min(best, len);
  } while (std::next_permutation(nodes.begin(), nodes.end()));
  return best;
}

// Optimal sub-tour over an arbitrary node subset (no pinned node).
template <typename M>
double brute_tsp_subset(const M& c, std::vector<int> nodes) {
  if (nodes.size() <= 2) {
    if (nodes.size() < 2) return 0.0;
    return c.cost(nodes[0], nodes[1]) + c.cost(nodes[1], nodes[0]);
  }
  std::sort(nodes.begin(), nodes.end());
  const int anchor = nodes.front();
  std::vector<int> rest(nodes.begin() + 1, nodes.end());
  double best = tworoute::kInf;
  do {
    double len = 0.0;
    int at = anchor;
    for (int v : rest) {
      len += c.cost(at, v);
      at = v;
    }
    len += c.cost(at, anchor);
    best = std::min(best, len);
  } while (std::next_permutation(rest.begin(), rest.end()));
  return best;
}

// Minimum over all 2^(n-2) pyramidal tours, enumerated explicitly by the
// subset of interior nodes placed on the ascending side.
inline double enumerate_pyramidal(const tworoute::AsymmetricCostMatrix& c) {
  const int n = c.size();
  if (n == 2) return c.cost(1, 2) + c.cost(2, 1);
  const int interior = n - 2;  // nodes 2..n-1
  double best = tworoute::kInf;
  for (unsigned mask = 0; mask < (1u << interior); ++mask) {
    std::vector<int> up, down;
    for (int v = 2; v <= n - 1; ++v)
      (((mask >> (v - 2)) & 1u) ? up : down).push_back(v);
    std::vector<int> tour{1};
    tour.insert(tour.end(), up.begin(), up.end());
    tour.push_back(n);
    tour.insert(tour.end(), down.rbegin(), down.rend());
    best = std::min(best, tworoute::tour_cost(c, tour));
  }
  return best;
}

// True if some segment reversal shortens the closed tour by more than eps.
inline bool two_opt_improvable(const tworoute::SymmetricCostMatrix& c,
                               const std::vector<int>& nodes, double eps) {
  const int n = static_cast<int>(nodes.size());
  auto node = [&](int k) { return nodes[static_cast<std::size_t>((k % n + n) % n)]; };
  for (int i = 0; i < n - 1; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (i == 0 && j == n - 1) continue;
      const double before = c.cost(node(i - 1), node(i)) + c.cost(node(j), node(j + 1));
      const double after = c.cost(node(i - 1), node(j)) + c.cost(node(i), node(j + 1));
      if (after < before - eps) return true;
    }
  }
  return false;
}

inline tworoute::SymmetricCostMatrix random_symmetric(tworoute::Rng& rng, int n, double lo = 1.0,
                                                      double hi = 10.0) {
  std::vector<double> v(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      const double x = rng.uniform(lo, hi);
      v[static_cast<std::size_t>(i - 1) * n + (j - 1)] = x;
      v[static_cast<std::size_t>(j - 1) * n + (i - 1)] = x;
    }
  }
  return tworoute::SymmetricCostMatrix(n, std::move(v));
}

inline tworoute::AsymmetricCostMatrix random_asymmetric(tworoute::Rng& rng, int n,
                                                        double lo = 1.0, double hi = 10.0) {
  std::vector<double> v(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j) v[static_cast<std::size_t>(i - 1) * n + (j - 1)] = rng.uniform(lo, hi);
  return tworoute::AsymmetricCostMatrix(n, std::move(v));
}

}  // namespace oracles

#endif
