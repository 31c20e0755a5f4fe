#include "tworoute/pyramidal.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tworoute {

double tour_cost(const AsymmetricCostMatrix& c, const std::vector<int>& nodes) {
  double len = 0.0;
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i) len += c.cost(nodes[i], nodes[i + 1]);
  if (!nodes.empty()) len += c.cost(nodes.back(), nodes.front());
  return len;
}

namespace {

// E[a][b] with q = max(a,b): length of the best pyramidal path from a to b
// through {q+1..n}. The next node q+1 goes adjacent to a or adjacent to b.
struct PyramidalDp {
  int n;
  std::vector<double> e;
  std::vector<std::uint8_t> pick;  // 1: next adjacent to the start, 2: to the end

  double& E(int a, int b) { return e[static_cast<std::size_t>(a - 1) * n + (b - 1)]; }
  std::uint8_t& P(int a, int b) { return pick[static_cast<std::size_t>(a - 1) * n + (b - 1)]; }

  template <typename Cost>
  void run(int n_, Cost cost) {
    n = n_;
    e.assign(static_cast<std::size_t>(n) * n, 0.0);
    pick.assign(static_cast<std::size_t>(n) * n, 0);
    for (int i = 1; i <= n - 1; ++i) {
      E(i, n) = cost(i, n);
      E(n, i) = cost(n, i);
    }
    for (int j = n - 1; j >= 2; --j) {
      for (int i = 1; i <= j - 1; ++i) {
        const double up1 = cost(i, j + 1) + E(j + 1, j);
        const double up2 = cost(j + 1, j) + E(i, j + 1);
        E(i, j) = std::min(up1, up2);
        P(i, j) = (up1 <= up2) ? 1 : 2;
        const double dn1 = E(j + 1, i) + cost(j, j + 1);
        const double dn2 = E(j, j + 1) + cost(j + 1, i);
        E(j, i) = std::min(dn1, dn2);
        P(j, i) = (dn1 <= dn2) ? 1 : 2;
      }
    }
  }

  // Emits the path from a to b through {max(a,b)+1..n}, including both ends.
  void reconstruct(int a, int b, std::vector<int>& out) {
    if (std::max(a, b) == n) {
      out.push_back(a);
      out.push_back(b);
      return;
    }
    if (a < b) {
      if (P(a, b) == 1) {
        out.push_back(a);
        reconstruct(b + 1, b, out);
      } else {
        reconstruct(a, b + 1, out);
        out.push_back(b);
      }
    } else {
      const int j = a;  // path from the larger index down to b
      if (P(a, b) == 1) {
        out.push_back(j);
        reconstruct(j + 1, b, out);
      } else {
        reconstruct(j, j + 1, out);
        out.push_back(b);
      }
    }
  }
};

template <typename Cost>
Tour pyramidal_impl(int n, Cost cost) {
  if (n < 2) {
    if (n == 1) return Tour{{1}, 0.0};
    throw std::invalid_argument("pyramidal tour needs n >= 1");
  }
  PyramidalDp dp;
  dp.run(n, cost);
  const double via_up = cost(1, 2) + dp.E(2, 1);
  const double via_down = cost(2, 1) + dp.E(1, 2);

  std::vector<int> path;
  Tour tour;
  if (via_up <= via_down) {
    // 1 -> 2 -> ... -> 1; drop the trailing return to 1.
    tour.length = via_up;
    path.push_back(1);
    dp.reconstruct(2, 1, path);
    path.pop_back();
  } else {
    tour.length = via_down;
    dp.reconstruct(1, 2, path);
  }
  tour.nodes = std::move(path);
  return tour;
}

}  // namespace

Tour optimal_pyramidal(const AsymmetricCostMatrix& c) {
  return pyramidal_impl(c.size(), [&](int i, int j) { return c.cost(i, j); });
}

Tour optimal_pyramidal_relabeled(const AsymmetricCostMatrix& c, std::span<const int> sigma) {
  const int n = static_cast<int>(sigma.size());
  Tour t = pyramidal_impl(n, [&](int i, int j) {
    return c.cost(sigma[static_cast<std::size_t>(i) - 1], sigma[static_cast<std::size_t>(j) - 1]);
  });
  for (auto& v : t.nodes) v = sigma[static_cast<std::size_t>(v) - 1];
  // Rotate to start at node 1; a rotation leaves the directed cycle intact.
  const auto it = std::find(t.nodes.begin(), t.nodes.end(), 1);
  std::rotate(t.nodes.begin(), it, t.nodes.end());
  return t;
}

Tour belperm(const AsymmetricCostMatrix& c, const Permutation& sigma0) {
  const int n = c.size();
  if (sigma0.order() != n) throw std::invalid_argument("belperm: permutation order mismatch");
  const double eps = kCheckEps * std::max(1.0, c.max_finite());

  std::vector<int> numbering = sigma0.mapping();
  Tour incumbent;
  incumbent.nodes = numbering;
  const auto it = std::find(incumbent.nodes.begin(), incumbent.nodes.end(), 1);
  std::rotate(incumbent.nodes.begin(), it, incumbent.nodes.end());
  incumbent.length = tour_cost(c, incumbent.nodes);

  for (;;) {
    Tour best_shift;
    best_shift.length = kInf;
    std::vector<int> shifted(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
      for (int i = 0; i < n; ++i) shifted[static_cast<std::size_t>(i)] = numbering[static_cast<std::size_t>((i + k) % n)];
      Tour t = optimal_pyramidal_relabeled(c, shifted);
      if (t.length < best_shift.length) best_shift = std::move(t);
    }
    if (best_shift.length < incumbent.length - eps) {
      incumbent = best_shift;
      numbering = incumbent.nodes;
    } else {
      return incumbent;
    }
  }
}

}  // namespace tworoute
