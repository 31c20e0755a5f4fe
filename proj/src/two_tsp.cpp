#include "tworoute/two_tsp.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "tworoute/errors.hpp"

namespace tworoute {

namespace {

struct Balance {
  int lo, hi;  // admissible per-tour node counts (node 1 counted once)
  bool accepts(int m) const { return m == lo || m == hi; }
};

Balance balance_of(const TwoTspInstance& inst) {
  const int total = inst.n() + static_cast<int>(inst.fixed().size());
  return Balance{total / 2, (total + 1) / 2};
}

}  // namespace

double closed_tour_length(const SymmetricCostMatrix& c, const std::vector<int>& seq) {
  double len = 0.0;
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) len += c.cost(seq[i], seq[i + 1]);
  return len;
}

TwoTspInstance::TwoTspInstance(SymmetricCostMatrix matrix, std::vector<int> fixed,
                               bool near_balanced)
    : matrix_(std::move(matrix)), fixed_(std::move(fixed)), near_balanced_(near_balanced) {
  std::sort(fixed_.begin(), fixed_.end());
  fixed_.erase(std::unique(fixed_.begin(), fixed_.end()), fixed_.end());
  if (fixed_.empty() || fixed_.front() != 1)
    throw std::invalid_argument("fixed set must contain node 1");
  if (fixed_.back() > matrix_.size())
    throw std::invalid_argument("fixed node label out of range");
  if (!near_balanced_ && (matrix_.size() + static_cast<int>(fixed_.size())) % 2 != 0)
    throw std::invalid_argument(
        "n + |fixed| must be even; construct with near_balanced to allow odd totals");
  fixed_mask_.assign(static_cast<std::size_t>(matrix_.size()) + 1, 0);
  for (int v : fixed_) fixed_mask_[static_cast<std::size_t>(v)] = 1;
}

// Exact solver over sequences <1, increasing part, 1, decreasing part, 1>.
// State (a, b, m): nodes 2..max(a,b) are placed, the increasing part
// currently ends at a, the decreasing part currently begins at b, and the
// second tour holds m nodes so far (its closing node 1 included). Placing
// node q+1 extends a (same m), extends b (m+1), or both when q+1 is fixed.
TwoTourSolution solve_balanced_2tsp(const TwoTspInstance& inst) {
  const SymmetricCostMatrix& c = inst.matrix();
  const int n = c.size();
  const Balance bal = balance_of(inst);
  const int p = bal.hi;
  const int mcols = p + 2;  // column p+1 stays infinite as the m+1 overflow guard

  const std::size_t cells = static_cast<std::size_t>(n) * n * mcols;
  std::vector<double> val(cells, kInf);
  std::vector<std::uint8_t> choice(cells, 0);
  auto at = [&](int a, int b, int m) -> double& {
    return val[(static_cast<std::size_t>(a - 1) * n + (b - 1)) * mcols + m];
  };
  auto ch = [&](int a, int b, int m) -> std::uint8_t& {
    return choice[(static_cast<std::size_t>(a - 1) * n + (b - 1)) * mcols + m];
  };

  for (int i = 1; i <= n; ++i) {
    for (int m = 1; m <= p; ++m) {
      if (!bal.accepts(m)) continue;
      at(i, n, m) = c.cost(i, 1) + c.cost(1, n);
      at(n, i, m) = c.cost(n, 1) + c.cost(1, i);
    }
  }

  for (int q = n - 1; q >= 2; --q) {
    const int next = q + 1;
    const bool next_fixed = inst.is_fixed(next);
    for (int i = 1; i <= q; ++i) {
      // i == q covers the diagonal state reached when q is fixed.
      for (int m = 1; m <= p; ++m) {
        if (next_fixed) {
          const double both = c.cost(i, next) + c.cost(next, q) + at(next, next, m + 1);
          at(i, q, m) = both;
          ch(i, q, m) = 3;
          if (i < q) {
            at(q, i, m) = c.cost(q, next) + c.cost(next, i) + at(next, next, m + 1);
            ch(q, i, m) = 3;
          }
        } else {
          const double f1 = c.cost(i, next) + at(next, q, m);
          const double s1 = c.cost(next, q) + at(i, next, m + 1);
          at(i, q, m) = std::min(f1, s1);
          ch(i, q, m) = (f1 <= s1) ? 1 : 2;
          if (i < q) {
            const double f2 = c.cost(q, next) + at(next, i, m);
            const double s2 = c.cost(next, i) + at(q, next, m + 1);
            at(q, i, m) = std::min(f2, s2);
            ch(q, i, m) = (f2 <= s2) ? 1 : 2;
          }
        }
      }
    }
  }

  // Assemble: place node 2 (n >= 3 guarantees it exists).
  double best;
  std::uint8_t first_choice;
  if (inst.is_fixed(2)) {
    best = c.cost(1, 2) + c.cost(2, 1) + at(2, 2, 2);
    first_choice = 3;
  } else {
    const double f = c.cost(1, 2) + at(2, 1, 1);
    const double s = c.cost(2, 1) + at(1, 2, 2);
    best = std::min(f, s);
    first_choice = (f <= s) ? 1 : 2;
  }
  if (!std::isfinite(best)) throw InfeasibleError("balanced two-period instance infeasible");

  // Walk the stored choices forward. m counts the nodes of the second tour
  // placed so far, its closing node 1 included.
  std::vector<int> first{1}, second_rev{1};
  int a = 1, b = 1, m = 1;
  std::uint8_t step = first_choice;
  int next = 2;
  for (;;) {
    if (step == 1) {
      first.push_back(next);
      a = next;
    } else if (step == 2) {
      second_rev.push_back(next);
      b = next;
      ++m;
    } else {
      first.push_back(next);
      second_rev.push_back(next);
      a = next;
      b = next;
      ++m;
    }
    if (std::max(a, b) == n) break;
    next = std::max(a, b) + 1;
    step = ch(a, b, m);
  }

  TwoTourSolution sol;
  sol.tour1 = std::move(first);
  sol.tour1.push_back(1);
  sol.tour2.push_back(1);
  for (auto it = second_rev.rbegin(); it != second_rev.rend(); ++it) sol.tour2.push_back(*it);
  sol.total_length = best;
  return sol;
}

TwoTourSolution solve_balanced_2tsp_lowmem(const TwoTspInstance& inst, bool reconstruct) {
  if (reconstruct) return solve_balanced_2tsp(inst);

  const SymmetricCostMatrix& c = inst.matrix();
  const int n = c.size();
  const Balance bal = balance_of(inst);
  const int p = bal.hi;
  const int mcols = p + 2;

  // mv(i,m) / mw(i,m) hold, at loop level j, the values of states (i,j) and
  // (j,i); d(j,m) holds the diagonal state (j,j). Row j itself is only read
  // at level j, so rows 1..j-1 can be overwritten in place, ascending in m.
  std::vector<double> mv(static_cast<std::size_t>(n + 1) * mcols, kInf);
  std::vector<double> mw(static_cast<std::size_t>(n + 1) * mcols, kInf);
  std::vector<double> d(static_cast<std::size_t>(n + 1) * mcols, kInf);
  auto MV = [&](int i, int m) -> double& { return mv[static_cast<std::size_t>(i) * mcols + m]; };
  auto MW = [&](int i, int m) -> double& { return mw[static_cast<std::size_t>(i) * mcols + m]; };
  auto D = [&](int j, int m) -> double& { return d[static_cast<std::size_t>(j) * mcols + m]; };

  for (int i = 1; i <= n - 1; ++i) {
    for (int m = 1; m <= p; ++m) {
      if (!bal.accepts(m)) continue;
      MV(i, m) = c.cost(i, 1) + c.cost(1, n);
      MW(i, m) = c.cost(n, 1) + c.cost(1, i);
    }
  }
  if (inst.is_fixed(n)) {
    for (int m = 1; m <= p; ++m)
      if (bal.accepts(m)) D(n, m) = c.cost(n, 1) + c.cost(1, n);
  }

  for (int j = n - 1; j >= 2; --j) {
    const int next = j + 1;
    const bool next_fixed = inst.is_fixed(next);
    for (int m = 1; m <= p; ++m) {
      D(j, m) = next_fixed
                    ? c.cost(j, next) + c.cost(next, j) + D(next, m + 1)
                    : std::min(c.cost(j, next) + MW(j, m), c.cost(next, j) + MV(j, m + 1));
    }
    for (int i = 1; i <= j - 1; ++i) {
      for (int m = 1; m <= p; ++m) {
        if (next_fixed) {
          const double dn = D(next, m + 1);
          MV(i, m) = c.cost(i, next) + c.cost(next, j) + dn;
          MW(i, m) = c.cost(j, next) + c.cost(next, i) + dn;
        } else {
          const double nmv = std::min(c.cost(i, next) + MW(j, m), c.cost(next, j) + MV(i, m + 1));
          const double nmw = std::min(c.cost(j, next) + MW(i, m), c.cost(next, i) + MV(j, m + 1));
          MV(i, m) = nmv;
          MW(i, m) = nmw;
        }
      }
    }
  }

  const double best = inst.is_fixed(2)
                          ? c.cost(1, 2) + c.cost(2, 1) + D(2, 2)
                          : std::min(c.cost(1, 2) + MW(1, 1), c.cost(2, 1) + MV(1, 2));
  if (!std::isfinite(best)) throw InfeasibleError("balanced two-period instance infeasible");
  TwoTourSolution sol;
  sol.total_length = best;
  return sol;
}

namespace {

// Best closed tour through node 1 and `others`, by full enumeration.
std::pair<double, std::vector<int>> best_tour_brute(const SymmetricCostMatrix& c,
                                                    std::vector<int> others) {
  std::sort(others.begin(), others.end());
  std::vector<int> best_seq, seq;
  double best = kInf;
  do {
    seq.clear();
    seq.push_back(1);
    seq.insert(seq.end(), others.begin(), others.end());
    seq.push_back(1);
    const double len = closed_tour_length(c, seq);
    if (len < best) {
      best = len;
      best_seq = seq;
    }
  } while (std::next_permutation(others.begin(), others.end()));
  return {best, std::move(best_seq)};
}

}  // namespace

TwoTourSolution oracle_2tsp(const TwoTspInstance& inst) {
  const int n = inst.n();
  const int total = n + static_cast<int>(inst.fixed().size());
  if (total > 18) throw GuardError("oracle_2tsp guard: n + |fixed| must be <= 18");

  std::vector<int> free_nodes;
  for (int v = 2; v <= n; ++v)
    if (!inst.is_fixed(v)) free_nodes.push_back(v);
  const int nfree = static_cast<int>(free_nodes.size());
  const Balance bal = balance_of(inst);
  const int nfixed = static_cast<int>(inst.fixed().size());

  TwoTourSolution best;
  best.total_length = kInf;
  for (int size1 = bal.lo; size1 <= bal.hi; ++size1) {
    const int f1 = size1 - nfixed;
    if (f1 < 0 || f1 > nfree) continue;
    std::vector<char> take(static_cast<std::size_t>(nfree), 0);
    std::fill(take.begin(), take.begin() + f1, 1);
    std::sort(take.begin(), take.end(), std::greater<char>());
    do {
      std::vector<int> set1(inst.fixed().begin() + 1, inst.fixed().end());
      std::vector<int> set2 = set1;
      for (int k = 0; k < nfree; ++k) (take[static_cast<std::size_t>(k)] ? set1 : set2).push_back(free_nodes[static_cast<std::size_t>(k)]);
      auto [len1, tour1] = best_tour_brute(inst.matrix(), std::move(set1));
      auto [len2, tour2] = best_tour_brute(inst.matrix(), std::move(set2));
      if (len1 + len2 < best.total_length) {
        best.total_length = len1 + len2;
        best.tour1 = std::move(tour1);
        best.tour2 = std::move(tour2);
      }
    } while (std::prev_permutation(take.begin(), take.end()));
  }
  if (!std::isfinite(best.total_length))
    throw InfeasibleError("no balanced split exists");
  return best;
}

EvalReport evaluate_solution(const TwoTspInstance& inst, const TwoTourSolution& sol) {
  EvalReport rep;
  const int n = inst.n();
  auto bad = [&](const std::string& v) { rep.violations.push_back(v); };

  for (const auto* t : {&sol.tour1, &sol.tour2}) {
    if (t->size() < 2 || t->front() != 1 || t->back() != 1) {
      bad("endpoint: tour must start and end at node 1");
      rep.feasible = false;
      return rep;
    }
    for (int v : *t)
      if (v < 1 || v > n) {
        bad("label: node out of range");
        rep.feasible = false;
        return rep;
      }
  }

  std::vector<int> count1(static_cast<std::size_t>(n) + 1, 0), count2(count1);
  for (std::size_t i = 0; i + 1 < sol.tour1.size(); ++i) ++count1[static_cast<std::size_t>(sol.tour1[i])];
  for (std::size_t i = 0; i + 1 < sol.tour2.size(); ++i) ++count2[static_cast<std::size_t>(sol.tour2[i])];

  for (int v = 1; v <= n; ++v) {
    const int c1 = count1[static_cast<std::size_t>(v)], c2 = count2[static_cast<std::size_t>(v)];
    if (c1 > 1 || c2 > 1) bad("duplicate: node " + std::to_string(v) + " repeated within a tour");
    if (v == 1) continue;
    if (inst.is_fixed(v)) {
      if (c1 != 1 || c2 != 1) bad("fixed node absent: node " + std::to_string(v));
    } else if (c1 + c2 != 1) {
      bad("coverage: node " + std::to_string(v) + " visited " + std::to_string(c1 + c2) + " times");
    }
  }

  const Balance bal = balance_of(inst);
  const int size1 = static_cast<int>(sol.tour1.size()) - 1;
  const int size2 = static_cast<int>(sol.tour2.size()) - 1;
  if (!bal.accepts(size1) || !bal.accepts(size2) ||
      size1 + size2 != inst.n() + static_cast<int>(inst.fixed().size()))
    bad("balance: tour sizes " + std::to_string(size1) + "/" + std::to_string(size2));

  rep.total = closed_tour_length(inst.matrix(), sol.tour1) +
              closed_tour_length(inst.matrix(), sol.tour2);
  const double tol = kCheckEps * std::max(1.0, inst.matrix().max_abs()) *
                     static_cast<double>(inst.n() + 1);
  if (std::abs(rep.total - sol.total_length) > tol)
    bad("length: stored total does not match recomputation");

  rep.feasible = rep.violations.empty();
  return rep;
}

}  // namespace tworoute
