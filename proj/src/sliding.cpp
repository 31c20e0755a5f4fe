#include "tworoute/sliding.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

#include "tworoute/errors.hpp"
#include "tworoute/knn.hpp"
#include "tworoute/pyramidal.hpp"
#include "tworoute/rng.hpp"

namespace tworoute {

namespace {

double cost_scale(const TwoVrpInstance& inst) {
  return std::max({1.0, inst.cost(1).max_finite(), inst.cost(2).max_finite()});
}

int entry_node(const TwoVrpInstance& inst, const RouteStop& s) {
  const Customer& c = inst.customer(s.customer);
  return s.enter_left ? c.left : c.right;
}

int exit_node(const TwoVrpInstance& inst, const RouteStop& s) {
  const Customer& c = inst.customer(s.customer);
  return s.enter_left ? c.right : c.left;
}

double internal_cost(const TwoVrpInstance& inst, const RouteStop& s, int vehicle) {
  const Customer& c = inst.customer(s.customer);
  return s.enter_left ? c.forward[vehicle - 1] : c.reverse[vehicle - 1];
}

}  // namespace

Customer aggregate_subpath(const TwoVrpInstance& inst, std::span<const RouteStop> subpath) {
  if (subpath.empty()) throw std::invalid_argument("aggregate_subpath: empty subpath");

  Customer agg;
  agg.left = entry_node(inst, subpath.front());
  agg.right = exit_node(inst, subpath.back());
  agg.demand = 0.0;
  agg.fixed_to = FixedTo::none;
  for (const RouteStop& s : subpath) {
    const Customer& c = inst.customer(s.customer);
    agg.demand += c.demand;
    if (c.fixed_to == FixedTo::none) continue;
    if (agg.fixed_to != FixedTo::none && agg.fixed_to != c.fixed_to)
      throw std::invalid_argument("aggregate_subpath: subpath mixes vehicle fixings");
    agg.fixed_to = c.fixed_to;
  }

  for (int vehicle = 1; vehicle <= 2; ++vehicle) {
    const AsymmetricCostMatrix& c = inst.cost(vehicle);
    double fwd = internal_cost(inst, subpath.front(), vehicle);
    for (std::size_t k = 1; k < subpath.size(); ++k) {
      fwd += c.cost(exit_node(inst, subpath[k - 1]), entry_node(inst, subpath[k]));
      fwd += internal_cost(inst, subpath[k], vehicle);
    }
    // Reverse traversal walks the stops backwards with every direction flipped.
    RouteStop r = subpath.back();
    r.enter_left = !r.enter_left;
    double rev = internal_cost(inst, r, vehicle);
    for (std::size_t k = subpath.size() - 1; k-- > 0;) {
      RouteStop prev = subpath[k];
      prev.enter_left = !prev.enter_left;
      rev += c.cost(exit_node(inst, r), entry_node(inst, prev));
      rev += internal_cost(inst, prev, vehicle);
      r = prev;
    }
    agg.forward[static_cast<std::size_t>(vehicle) - 1] = fwd;
    agg.reverse[static_cast<std::size_t>(vehicle) - 1] = rev;
  }
  return agg;
}

namespace {

// One disassembled sub-problem: the window customers stay individual, every
// remainder segment becomes an aggregate, the leading segment is glued into
// vehicle 1's start depot.
struct SubProblem {
  std::vector<Customer> customers;
  // expansion[k]: the incumbent stops behind sub-customer k+1 (forward order).
  std::vector<std::vector<RouteStop>> expansion;
  int depot1_start = 0;
  int glue_len = 0;          // leading incumbent stops glued into the depot
  double glue_cost = 0.0;    // vehicle-1 cost of the glued prefix
  double glue_demand = 0.0;  // its demand, subtracted from capacity 1
};

// Full windows of size s starting at `from`, stepping by l, inside
// [from, limit); the last window is clamped to touch the limit. A single
// shrunken window is used when the span is shorter than s.
std::vector<int> window_starts(int from, int limit, const SlidingParams& params) {
  std::vector<int> out;
  const int s = params.s;
  if (from >= limit) return out;
  if (limit - from < s) {
    out.push_back(from);
    return out;
  }
  int b = from;
  for (; b + s <= limit; b += params.step) out.push_back(b);
  if (out.back() + s < limit) out.push_back(limit - s);
  return out;
}

class Disassembler {
 public:
  Disassembler(const TwoVrpInstance& inst, const SlidingParams& params)
      : inst_(inst), params_(params) {}

  void load(const TwoVrpSolution& sol) {
    flat_ = sol.route1;
    k1_ = static_cast<int>(flat_.size());
    flat_.insert(flat_.end(), sol.route2.begin(), sol.route2.end());
    total_ = static_cast<int>(flat_.size());
  }

  int route1_len() const { return k1_; }
  int total_len() const { return total_; }

  SubProblem build(int a, int span1, int b, int span2) const {
    SubProblem sub;
    auto add_individual = [&](const RouteStop& s) {
      const Customer& c = inst_.customer(s.customer);
      Customer copy = c;
      copy.id = static_cast<int>(sub.customers.size()) + 1;
      sub.customers.push_back(copy);
      sub.expansion.push_back({s});
    };
    auto add_piece = [&](std::vector<RouteStop> stops) {
      Customer agg = aggregate_subpath(inst_, stops);
      agg.id = static_cast<int>(sub.customers.size()) + 1;
      sub.customers.push_back(agg);
      sub.expansion.push_back(std::move(stops));
    };

    // Leading segment: glued into the start depot of vehicle 1.
    sub.depot1_start = inst_.depot_start(1);
    sub.glue_len = a;
    if (a > 0) {
      const AsymmetricCostMatrix& c1 = inst_.cost(1);
      int at = inst_.depot_start(1);
      for (int k = 0; k < a; ++k) {
        sub.glue_cost += c1.cost(at, entry_node(inst_, flat_[static_cast<std::size_t>(k)]));
        sub.glue_cost += internal_cost(inst_, flat_[static_cast<std::size_t>(k)], 1);
        sub.glue_demand += inst_.customer(flat_[static_cast<std::size_t>(k)].customer).demand;
        at = exit_node(inst_, flat_[static_cast<std::size_t>(k)]);
      }
      sub.depot1_start = at;
    }

    for (int k = a; k < a + span1; ++k) add_individual(flat_[static_cast<std::size_t>(k)]);

    // Separating segment, split at the route boundary; remember the pieces so
    // the size normalisation below can split single customers off them.
    std::vector<int> piece_ids;
    auto add_range_pieces = [&](int lo, int hi) {
      if (lo >= hi) return;
      const int cut = std::clamp(k1_, lo, hi);
      for (const auto& [plo, phi] : {std::pair{lo, cut}, std::pair{cut, hi}}) {
        if (plo >= phi) continue;
        piece_ids.push_back(static_cast<int>(sub.customers.size()));
        add_piece({flat_.begin() + plo, flat_.begin() + phi});
      }
    };
    add_range_pieces(a + span1, b);
    for (int k = b; k < b + span2; ++k) add_individual(flat_[static_cast<std::size_t>(k)]);
    add_range_pieces(b + span2, total_);

    // Normalise to the fixed sub-problem size: repeatedly detach the last
    // stop of the first still-divisible piece as an individual customer.
    const int target = params_.target_size() - 3;  // separator and depots excluded
    bool divisible = true;
    while (static_cast<int>(sub.customers.size()) < target && divisible) {
      divisible = false;
      for (int pid : piece_ids) {
        auto& stops = sub.expansion[static_cast<std::size_t>(pid)];
        if (stops.size() < 2) continue;
        RouteStop tail = stops.back();
        stops.pop_back();
        sub.customers[static_cast<std::size_t>(pid)] = [&] {
          Customer c = aggregate_subpath(inst_, stops);
          c.id = pid + 1;
          return c;
        }();
        add_individual(tail);
        divisible = true;
        break;
      }
    }
    return sub;
  }

  TwoVrpInstance instantiate(const SubProblem& sub) const {
    return TwoVrpInstance(sub.customers, sub.depot1_start, inst_.depot_end(1),
                          inst_.depot_start(2), inst_.depot_end(2),
                          inst_.capacity(1) - sub.glue_demand, inst_.capacity(2),
                          inst_.cost(1), inst_.cost(2));
  }

  TwoVrpSolution expand(const SubProblem& sub, const TwoVrpSolution& subsol) const {
    TwoVrpSolution full;
    for (int k = 0; k < sub.glue_len; ++k)
      full.route1.push_back(flat_[static_cast<std::size_t>(k)]);
    auto emit = [&](const RouteStop& s, std::vector<RouteStop>& route) {
      const auto& stops = sub.expansion[static_cast<std::size_t>(s.customer) - 1];
      if (s.enter_left) {
        route.insert(route.end(), stops.begin(), stops.end());
      } else {
        for (auto it = stops.rbegin(); it != stops.rend(); ++it) {
          RouteStop r = *it;
          r.enter_left = !r.enter_left;
          route.push_back(r);
        }
      }
    };
    for (const RouteStop& s : subsol.route1) emit(s, full.route1);
    for (const RouteStop& s : subsol.route2) emit(s, full.route2);
    full.cost = subsol.cost + sub.glue_cost;
    full.load1 = 0.0;
    full.load2 = 0.0;
    for (const RouteStop& s : full.route1) full.load1 += inst_.customer(s.customer).demand;
    for (const RouteStop& s : full.route2) full.load2 += inst_.customer(s.customer).demand;
    return full;
  }

 private:
  const TwoVrpInstance& inst_;
  SlidingParams params_;
  std::vector<RouteStop> flat_;
  int k1_ = 0;
  int total_ = 0;
};

}  // namespace

std::vector<WindowPair> sliding_window_pairs(int route1_len, int total_len,
                                             const SlidingParams& params) {
  if (params.s < 1 || params.step < 1)
    throw std::invalid_argument("sliding parameters must be >= 1");
  std::vector<WindowPair> out;
  if (route1_len == 0 || total_len == route1_len) return out;  // needs both routes
  for (int a : window_starts(0, route1_len, params)) {
    const int span1 = std::min(params.s, route1_len - a);
    const int b_from = std::max(a + span1, route1_len - params.s + 1);
    for (int b : window_starts(b_from, total_len, params)) {
      const int span2 = std::min(params.s, total_len - b);
      out.push_back(WindowPair{a, span1, b, span2});
    }
  }
  return out;
}

TwoVrpSolution sliding_subset_search(const TwoVrpInstance& inst, const TwoVrpSolution& incumbent,
                                     const SlidingParams& params,
                                     const VrpSolveOptions& solver_opts) {
  const double eps = kCheckEps * cost_scale(inst);

  TwoVrpSolution current = incumbent;
  Disassembler dis(inst, params);

  bool improved = true;
  while (improved) {
    improved = false;
    dis.load(current);
    for (const WindowPair& w : sliding_window_pairs(dis.route1_len(), dis.total_len(), params)) {
      SubProblem sub = dis.build(w.a, w.span1, w.b, w.span2);
      TwoVrpInstance sub_inst = dis.instantiate(sub);
      TwoVrpSolution subsol = solve_2vrp_exact(sub_inst, solver_opts);
      if (subsol.cost + sub.glue_cost < current.cost - eps) {
        current = dis.expand(sub, subsol);
        improved = true;
        break;
      }
    }
  }
  return current;
}

TwoVrpSolution polish_routes(const TwoVrpInstance& inst, const TwoVrpSolution& sol) {
  TwoVrpSolution out = sol;
  for (int vehicle = 1; vehicle <= 2; ++vehicle) {
    std::vector<RouteStop>& route = vehicle == 1 ? out.route1 : out.route2;
    const int t = static_cast<int>(route.size());
    if (t < 2) continue;
    const AsymmetricCostMatrix& cm = inst.cost(vehicle);

    // Node 1 is the depot pair (arrive at the end depot, leave from the start
    // depot at no cost); node k+1 is stop k with its entry side frozen.
    const int m = t + 1;
    std::vector<double> grid(static_cast<std::size_t>(m) * m, 0.0);
    auto put = [&](int i, int j, double v) { grid[static_cast<std::size_t>(i - 1) * m + (j - 1)] = v; };
    for (int k = 0; k < t; ++k) {
      put(1, k + 2, cm.cost(inst.depot_start(vehicle), entry_node(inst, route[static_cast<std::size_t>(k)])));
      put(k + 2, 1, cm.cost(exit_node(inst, route[static_cast<std::size_t>(k)]), inst.depot_end(vehicle)));
      for (int q = 0; q < t; ++q) {
        if (q == k) continue;
        put(k + 2, q + 2,
            cm.cost(exit_node(inst, route[static_cast<std::size_t>(k)]),
                    entry_node(inst, route[static_cast<std::size_t>(q)])));
      }
    }
    AsymmetricCostMatrix subm(m, std::move(grid));
    const Tour improved = belperm(subm, Permutation::identity(m));

    std::vector<RouteStop> reordered;
    reordered.reserve(route.size());
    for (std::size_t k = 1; k < improved.nodes.size(); ++k)
      reordered.push_back(route[static_cast<std::size_t>(improved.nodes[k]) - 2]);
    route = std::move(reordered);
  }
  out.cost = route_cost(inst, 1, out.route1) + route_cost(inst, 2, out.route2);
  if (out.cost <= sol.cost) return out;
  return sol;
}

TwoVrpSolution random_feasible_solution(const TwoVrpInstance& inst, std::uint64_t seed) {
  Rng rng(seed);
  const int n = inst.n();
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i + 1;
    rng.shuffle(order);

    TwoVrpSolution sol;
    double rem1 = inst.capacity(1), rem2 = inst.capacity(2);
    bool ok = true;
    for (int id : order) {
      const Customer& c = inst.customer(id);
      int vehicle;
      if (c.fixed_to == FixedTo::vehicle1)
        vehicle = 1;
      else if (c.fixed_to == FixedTo::vehicle2)
        vehicle = 2;
      else if (c.demand <= rem1 && c.demand <= rem2)
        vehicle = rng.next_double() < 0.5 ? 1 : 2;  // random among fitting vehicles
      else if (c.demand <= rem1)
        vehicle = 1;
      else if (c.demand <= rem2)
        vehicle = 2;
      else {
        ok = false;
        break;
      }
      double& rem = vehicle == 1 ? rem1 : rem2;
      if (c.demand > rem) {
        ok = false;
        break;
      }
      rem -= c.demand;
      RouteStop stop{id, true};
      if (!std::isfinite(c.forward[static_cast<std::size_t>(vehicle) - 1]))
        stop.enter_left = false;
      else if (std::isfinite(c.reverse[static_cast<std::size_t>(vehicle) - 1]))
        stop.enter_left = rng.next_double() < 0.5;
      (vehicle == 1 ? sol.route1 : sol.route2).push_back(stop);
      (vehicle == 1 ? sol.load1 : sol.load2) += c.demand;
    }
    if (!ok || sol.route1.empty()) continue;
    sol.cost = route_cost(inst, 1, sol.route1) + route_cost(inst, 2, sol.route2);
    if (!std::isfinite(sol.cost)) continue;
    return sol;
  }
  throw InfeasibleError("random_feasible_solution: no feasible packing found in 1000 attempts");
}

HeuristicResult two_vrp_heuristic(const TwoVrpInstance& inst, const SlidingParams& params,
                                  StartGenerator generator, int repetitions, std::uint64_t seed,
                                  const TwoTspInstance* source_2tsp, const HeuristicOptions& opts) {
  if (generator == StartGenerator::ksh && source_2tsp == nullptr)
    throw std::invalid_argument("ksh generation needs the two-period instance behind the mapping");
  if (repetitions < 1) throw std::invalid_argument("repetitions must be >= 1");

  const double eps = kCheckEps * cost_scale(inst);
  Rng master(seed);
  std::vector<std::uint64_t> rep_seeds(static_cast<std::size_t>(repetitions));
  for (auto& s : rep_seeds) s = master.next_u64();

  int reps = repetitions;
  if (generator == StartGenerator::ksh)
    reps = std::min(repetitions, source_2tsp->n() - 1);

  HeuristicResult res;
  res.best.cost = kInf;
  const auto t0 = std::chrono::steady_clock::now();
  auto elapsed_ms = [&] {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
  };
  auto validate = [&](const TwoVrpSolution& s, double bound, const char* what) {
    if (!opts.validate) return;
    if (s.cost > bound + eps) throw std::logic_error(std::string(what) + ": cost increased");
    if (!evaluate_2vrp(inst, s).feasible)
      throw std::logic_error(std::string(what) + ": infeasible intermediate solution");
    ++res.validated_steps;
  };

  for (int rep = 1; rep <= reps; ++rep) {
    if (opts.time_budget_ms && rep > 1 && elapsed_ms() > *opts.time_budget_ms) break;
    TwoVrpSolution cur;
    if (generator == StartGenerator::ksh) {
      const TwoTourSolution start = ks_single_start(*source_2tsp, rep + 1);
      cur = lift_two_tour_solution(inst, *source_2tsp, start);
    } else {
      cur = random_feasible_solution(inst, rep_seeds[static_cast<std::size_t>(rep) - 1]);
    }
    validate(cur, kInf, "generate");

    int pass = 0;
    for (;;) {
      ++pass;
      const double before = cur.cost;
      TwoVrpSolution slid = sliding_subset_search(inst, cur, params, opts.solver);
      validate(slid, cur.cost, "sliding_subset_search");
      TwoVrpSolution polished = polish_routes(inst, slid);
      validate(polished, slid.cost, "polish_routes");
      cur = std::move(polished);

      if (cur.cost < res.best.cost) res.best = cur;
      res.log.push_back(HeuristicLogRow{rep, pass, res.best.cost, elapsed_ms()});
      if (cur.cost >= before - eps) break;
    }
    if (opts.stop_at && res.best.cost <= *opts.stop_at + eps) break;
  }
  return res;
}

}  // namespace tworoute
