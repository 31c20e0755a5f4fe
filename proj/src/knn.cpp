#include "tworoute/knn.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "tworoute/pyramidal.hpp"

namespace tworoute {

KnnResult knn(const SymmetricCostMatrix& c, int start) {
  const int n = c.size();
  if (start < 2 || start > n) throw std::invalid_argument("knn start must be in 2..n");

  const RealMatrix zt = zero_transform(c);
  std::deque<int> path{start};
  std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
  used[1] = 1;
  used[static_cast<std::size_t>(start)] = 1;

  for (int round = 0; round < n - 2; ++round) {
    const int head = path.front(), tail = path.back();
    int pick = -1;
    double pick_d = kInf;
    bool pick_front = false;
    for (int x = 2; x <= n; ++x) {
      if (used[static_cast<std::size_t>(x)]) continue;
      const double dh = zt.at(x, head), dt = zt.at(x, tail);
      const double d = std::min(dh, dt);
      if (d < pick_d) {  // strict: smallest label wins ties
        pick_d = d;
        pick = x;
        pick_front = dh < dt;  // endpoint tie extends at the tail
      }
    }
    used[static_cast<std::size_t>(pick)] = 1;
    if (pick_front)
      path.push_front(pick);
    else
      path.push_back(pick);
  }

  // Insert node 1 into the cyclic order of the path, cheapest in the
  // original costs; gaps are scanned along the path and then the wrap-around.
  int best_gap = 0;
  double best_cost = kInf;
  const int plen = static_cast<int>(path.size());
  for (int g = 0; g < plen; ++g) {
    const int u = path[static_cast<std::size_t>(g)];
    const int v = path[static_cast<std::size_t>((g + 1) % plen)];
    const double ins = c.cost(u, 1) + c.cost(1, v) - c.cost(u, v);
    if (ins < best_cost) {
      best_cost = ins;
      best_gap = g;
    }
  }

  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(n));
  order.push_back(1);
  for (int k = 1; k <= plen; ++k) order.push_back(path[static_cast<std::size_t>((best_gap + k) % plen)]);
  return KnnResult{Permutation(std::move(order)), start};
}

std::vector<int> improve_subtour(const SymmetricCostMatrix& c, const std::vector<int>& tour) {
  const int t = static_cast<int>(tour.size()) - 1;  // node count, 1 counted once
  if (t <= 3) return tour;                          // nothing a reordering could change

  // Induced submatrix over the tour's nodes, in tour order with node 1 first,
  // so the identity numbering reproduces the incumbent tour.
  std::vector<int> nodes(tour.begin(), tour.end() - 1);
  std::vector<double> sub(static_cast<std::size_t>(t) * t, 0.0);
  for (int i = 0; i < t; ++i)
    for (int j = 0; j < t; ++j)
      sub[static_cast<std::size_t>(i) * t + j] = c.cost(nodes[static_cast<std::size_t>(i)], nodes[static_cast<std::size_t>(j)]);
  AsymmetricCostMatrix subm(t, std::move(sub));

  const Tour improved = belperm(subm, Permutation::identity(t));
  std::vector<int> out;
  out.reserve(tour.size());
  for (int v : improved.nodes) out.push_back(nodes[static_cast<std::size_t>(v) - 1]);
  out.push_back(out.front());
  return out;
}

TwoTourSolution ks_single_start(const TwoTspInstance& inst, int start) {
  const SymmetricCostMatrix& c = inst.matrix();
  const KnnResult rec = knn(c, start);
  const Permutation& tau = rec.tour;  // tau(1) == 1 by construction

  // Relabel the instance: position -> original label through tau.
  SymmetricCostMatrix relabeled = permute(c, tau);
  const Permutation tau_inv = tau.inverse();
  std::vector<int> fixed_rel;
  fixed_rel.reserve(inst.fixed().size());
  for (int v : inst.fixed()) fixed_rel.push_back(tau_inv(v));
  TwoTspInstance rel_inst(std::move(relabeled), std::move(fixed_rel), inst.near_balanced());

  TwoTourSolution sol = solve_balanced_2tsp(rel_inst);
  for (auto* tp : {&sol.tour1, &sol.tour2})
    for (auto& v : *tp) v = tau(v);
  sol.total_length = closed_tour_length(c, sol.tour1) + closed_tour_length(c, sol.tour2);

  TwoTourSolution polished = sol;
  polished.tour1 = improve_subtour(c, sol.tour1);
  polished.tour2 = improve_subtour(c, sol.tour2);
  polished.total_length =
      closed_tour_length(c, polished.tour1) + closed_tour_length(c, polished.tour2);
  if (polished.total_length <= sol.total_length && evaluate_solution(inst, polished).feasible)
    return polished;
  return sol;
}

TwoTourSolution ks_heuristic(const TwoTspInstance& inst) {
  TwoTourSolution best;
  best.total_length = kInf;
  for (int start = 2; start <= inst.n(); ++start) {
    TwoTourSolution sol = ks_single_start(inst, start);
    if (sol.total_length < best.total_length) best = std::move(sol);
  }
  return best;
}

}  // namespace tworoute
