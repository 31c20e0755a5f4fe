#include "tworoute/two_vrp.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "tworoute/errors.hpp"
#include "tworoute/rng.hpp"

namespace tworoute {

TwoVrpInstance::TwoVrpInstance(std::vector<Customer> customers, int depot1_start,
                               int depot1_end, int depot2_start, int depot2_end,
                               double capacity1, double capacity2, AsymmetricCostMatrix cost1,
                               AsymmetricCostMatrix cost2)
    : customers_(std::move(customers)),
      d1s_(depot1_start),
      d1e_(depot1_end),
      d2s_(depot2_start),
      d2e_(depot2_end),
      cap1_(capacity1),
      cap2_(capacity2),
      c1_(std::move(cost1)),
      c2_(std::move(cost2)) {
  if (customers_.empty()) throw std::invalid_argument("instance needs at least one customer");
  if (c1_.size() != c2_.size()) throw std::invalid_argument("cost matrices differ in order");
  const int nodes = c1_.size();
  auto check_node = [&](int v) {
    if (v < 1 || v > nodes) throw std::invalid_argument("node label outside the cost matrices");
  };
  for (int v : {d1s_, d1e_, d2s_, d2e_}) check_node(v);
  if (cap1_ < 0 || cap2_ < 0) throw std::invalid_argument("negative capacity");
  total_demand_ = 0.0;
  double fixed1 = 0.0, fixed2 = 0.0;
  int expect = 1;
  for (const Customer& c : customers_) {
    if (c.id != expect++) throw std::invalid_argument("customer ids must be 1..n in order");
    check_node(c.left);
    check_node(c.right);
    if (c.demand < 0) throw std::invalid_argument("negative demand");
    for (double v : {c.forward[0], c.forward[1], c.reverse[0], c.reverse[1]})
      if (v < 0 || std::isnan(v)) throw std::invalid_argument("internal cost must be >= 0 or inf");
    if (c.fixed_to == FixedTo::vehicle1) fixed1 += c.demand;
    if (c.fixed_to == FixedTo::vehicle2) fixed2 += c.demand;
    total_demand_ += c.demand;
  }
  if (fixed1 > cap1_ || fixed2 > cap2_)
    throw std::invalid_argument("fixed customers already exceed a vehicle capacity");
}

double route_cost(const TwoVrpInstance& inst, int vehicle, const std::vector<RouteStop>& route) {
  const AsymmetricCostMatrix& c = inst.cost(vehicle);
  int at = inst.depot_start(vehicle);
  double total = 0.0;
  for (const RouteStop& s : route) {
    const Customer& cu = inst.customer(s.customer);
    const int entry = s.enter_left ? cu.left : cu.right;
    const int exit = s.enter_left ? cu.right : cu.left;
    total += c.cost(at, entry);
    total += s.enter_left ? cu.forward[vehicle - 1] : cu.reverse[vehicle - 1];
    at = exit;
  }
  total += c.cost(at, inst.depot_end(vehicle));
  return total;
}

namespace {

// Separator pseudo-customer: left node is vehicle 1's end depot, right node
// vehicle 2's start depot, free in that direction and forbidden in reverse.
Customer separator_customer(const TwoVrpInstance& inst) {
  Customer s;
  s.id = 0;
  s.left = inst.depot_end(1);
  s.right = inst.depot_start(2);
  s.forward = {0.0, 0.0};
  s.reverse = {kInf, kInf};
  s.demand = 0.0;
  s.fixed_to = FixedTo::none;
  return s;
}

struct DpScratch {
  std::vector<double> val;   // ((J * width + i) * 2 + side)
  std::vector<double> wsum;  // demand of subset J
};

// Table reuse across solves; the sliding search calls the solver thousands
// of times with identically sized tables.
DpScratch& tls_scratch() {
  thread_local DpScratch scratch;
  return scratch;
}

}  // namespace

TwoVrpSolution solve_2vrp_exact(const TwoVrpInstance& inst, const VrpSolveOptions& opts) {
  const int n = inst.n();
  const int width = n + 1;  // separator is bit 0, customer i is bit i
  if (width > opts.max_subset_bits)
    throw GuardError("solve_2vrp_exact guard: needs " + std::to_string(width) +
                     " subset bits, limit " + std::to_string(opts.max_subset_bits));
  if (width > 25) throw GuardError("solve_2vrp_exact: subset width above hard limit 25");

  const std::uint32_t sz = 1u << width;
  const std::uint32_t full = sz - 1;
  const double w2 = inst.capacity(2), w1 = inst.capacity(1);

  // Flat per-customer arrays, separator at index 0.
  std::vector<int> entry_left(static_cast<std::size_t>(width)), entry_right(entry_left);
  std::vector<double> fwd1(static_cast<std::size_t>(width)), rev1(fwd1), fwd2(fwd1), rev2(fwd1);
  std::vector<double> demand(static_cast<std::size_t>(width));
  std::uint32_t fix1 = 0, fix2 = 0;
  {
    const Customer sep = separator_customer(inst);
    auto put = [&](int idx, const Customer& c) {
      entry_left[static_cast<std::size_t>(idx)] = c.left - 1;
      entry_right[static_cast<std::size_t>(idx)] = c.right - 1;
      fwd1[static_cast<std::size_t>(idx)] = c.forward[0];
      rev1[static_cast<std::size_t>(idx)] = c.reverse[0];
      fwd2[static_cast<std::size_t>(idx)] = c.forward[1];
      rev2[static_cast<std::size_t>(idx)] = c.reverse[1];
      demand[static_cast<std::size_t>(idx)] = c.demand;
    };
    put(0, sep);
    for (const Customer& c : inst.customers()) {
      put(c.id, c);
      if (c.fixed_to == FixedTo::vehicle1) fix1 |= 1u << c.id;
      if (c.fixed_to == FixedTo::vehicle2) fix2 |= 1u << c.id;
    }
  }

  DpScratch& scratch = tls_scratch();
  scratch.val.assign(static_cast<std::size_t>(sz) * width * 2, kInf);
  scratch.wsum.assign(sz, 0.0);
  double* val = scratch.val.data();
  double* wsum = scratch.wsum.data();
  for (std::uint32_t j = 1; j < sz; ++j)
    wsum[j] = wsum[j & (j - 1)] + demand[static_cast<std::size_t>(std::countr_zero(j))];
  const double total_w = wsum[full];

  const double* c1 = inst.cost(1).data().data();
  const double* c2 = inst.cost(2).data().data();
  const int nodes = inst.cost(1).size();
  const int d2e = inst.depot_end(2) - 1;

  auto cell = [&](std::uint32_t J, int i) -> double* {
    return val + (static_cast<std::size_t>(J) * width + i) * 2;
  };

  // Boundary: last customer of vehicle 2's leg.
  for (int i = 0; i < width; ++i) {
    if (fix1 & (1u << i)) continue;
    double* v = cell(0, i);
    if (i == 0) {
      // Separator last means vehicle 2 stays empty; vehicle 1 carries all.
      if (total_w <= w1) v[0] = c2[static_cast<std::size_t>(entry_right[0]) * nodes + d2e];
      continue;
    }
    if (demand[static_cast<std::size_t>(i)] > w2) continue;
    v[0] = fwd2[static_cast<std::size_t>(i)] +
           c2[static_cast<std::size_t>(entry_right[static_cast<std::size_t>(i)]) * nodes + d2e];
    v[1] = rev2[static_cast<std::size_t>(i)] +
           c2[static_cast<std::size_t>(entry_left[static_cast<std::size_t>(i)]) * nodes + d2e];
  }

  for (std::uint32_t J = 1; J < sz; ++J) {
    const bool phase1 = (J & 1u) != 0;
    if (!phase1) {
      // Everything in J is served by vehicle 2 from here on.
      if ((J & fix1) != 0 || wsum[J] > w2) continue;
    }
    const std::uint32_t comp = full & ~J;
    for (std::uint32_t cb = comp; cb != 0; cb &= cb - 1) {
      const int i = std::countr_zero(cb);
      double baseL, baseR;
      const double* cm;
      if (i == 0) {
        if (total_w - wsum[J] > w1) continue;  // vehicle 1 load gate
        cm = c2;
        baseL = 0.0;
        baseR = kInf;
      } else if (phase1) {
        if (fix2 & (1u << i)) continue;
        cm = c1;
        baseL = fwd1[static_cast<std::size_t>(i)];
        baseR = rev1[static_cast<std::size_t>(i)];
      } else {
        if ((fix1 & (1u << i)) || demand[static_cast<std::size_t>(i)] + wsum[J] > w2) continue;
        cm = c2;
        baseL = fwd2[static_cast<std::size_t>(i)];
        baseR = rev2[static_cast<std::size_t>(i)];
      }
      const double* rowL =
          cm + static_cast<std::size_t>(entry_right[static_cast<std::size_t>(i)]) * nodes;
      const double* rowR =
          cm + static_cast<std::size_t>(entry_left[static_cast<std::size_t>(i)]) * nodes;
      double bestL = kInf, bestR = kInf;
      for (std::uint32_t rem = J; rem != 0; rem &= rem - 1) {
        const int j = std::countr_zero(rem);
        const double* tv = cell(J ^ (1u << j), j);
        const int eL = entry_left[static_cast<std::size_t>(j)];
        const int eR = entry_right[static_cast<std::size_t>(j)];
        const double viaL = tv[0] + rowL[eL];
        const double viaR = tv[1] + rowL[eR];
        bestL = std::min(bestL, std::min(viaL, viaR));
        bestR = std::min(bestR, std::min(tv[0] + rowR[eL], tv[1] + rowR[eR]));
      }
      double* v = cell(J, i);
      v[0] = baseL + bestL;
      v[1] = baseR + bestR;
    }
  }

  // Route start: vehicle 1 leaves its depot for the first customer.
  const int d1s = inst.depot_start(1) - 1;
  double best = kInf;
  int best_i = -1, best_side = 0;
  const int first_lo = opts.allow_empty_vehicle1 ? 0 : 1;
  for (int i = first_lo; i < width; ++i) {
    const double* v = cell(full ^ (1u << i), i);
    for (int side = 0; side < 2; ++side) {
      const int entry = side == 0 ? entry_left[static_cast<std::size_t>(i)]
                                  : entry_right[static_cast<std::size_t>(i)];
      const double cand = c1[static_cast<std::size_t>(d1s) * nodes + entry] + v[side];
      if (cand < best) {
        best = cand;
        best_i = i;
        best_side = side;
      }
    }
  }
  if (!std::isfinite(best)) throw InfeasibleError("no feasible two-vehicle route exists");

  // Backtrack by re-finding, at each state, the first transition (customers
  // ascending, left side first) that reproduces the stored value exactly; the
  // recomputation repeats the forward pass arithmetic, so equality is exact.
  TwoVrpSolution sol;
  sol.cost = best;
  std::vector<RouteStop> flat;
  int i = best_i, side = best_side;
  std::uint32_t J = full ^ (1u << best_i);
  for (;;) {
    flat.push_back(RouteStop{i, side == 0});
    if (J == 0) break;
    const bool phase1 = (J & 1u) != 0;
    double base;
    const double* cm;
    if (i == 0) {
      cm = c2;
      base = 0.0;
    } else if (phase1) {
      cm = c1;
      base = side == 0 ? fwd1[static_cast<std::size_t>(i)] : rev1[static_cast<std::size_t>(i)];
    } else {
      cm = c2;
      base = side == 0 ? fwd2[static_cast<std::size_t>(i)] : rev2[static_cast<std::size_t>(i)];
    }
    const int exit_node = side == 0 ? entry_right[static_cast<std::size_t>(i)]
                                    : entry_left[static_cast<std::size_t>(i)];
    const double* row = cm + static_cast<std::size_t>(exit_node) * nodes;
    const double target = cell(J, i)[side];
    int ni = -1, nside = 0;
    for (std::uint32_t rem = J; rem != 0 && ni < 0; rem &= rem - 1) {
      const int j = std::countr_zero(rem);
      const double* tv = cell(J ^ (1u << j), j);
      for (int s = 0; s < 2 && ni < 0; ++s) {
        const int entry = s == 0 ? entry_left[static_cast<std::size_t>(j)]
                                 : entry_right[static_cast<std::size_t>(j)];
        if (base + (tv[s] + row[entry]) == target) {
          ni = j;
          nside = s;
        }
      }
    }
    if (ni < 0) throw std::logic_error("two-vehicle backtrack lost the optimal path");
    i = ni;
    side = nside;
    J ^= 1u << i;
  }

  bool after_sep = false;
  for (const RouteStop& s : flat) {
    if (s.customer == 0) {
      after_sep = true;
      continue;
    }
    (after_sep ? sol.route2 : sol.route1).push_back(s);
    (after_sep ? sol.load2 : sol.load1) += inst.customer(s.customer).demand;
  }
  return sol;
}

namespace {

// Best direction assignment for a fixed visiting order, by a two-state chain
// scan; fills `dirs` with the argmin choices.
double chain_best(const TwoVrpInstance& inst, int vehicle, const std::vector<int>& seq,
                  std::vector<bool>* dirs) {
  const AsymmetricCostMatrix& c = inst.cost(vehicle);
  if (seq.empty()) {
    if (dirs) dirs->clear();
    return c.cost(inst.depot_start(vehicle), inst.depot_end(vehicle));
  }
  const std::size_t t = seq.size();
  std::vector<std::array<double, 2>> d(t);
  std::vector<std::array<std::uint8_t, 2>> from(t);
  const Customer& c0 = inst.customer(seq[0]);
  d[0][0] = c.cost(inst.depot_start(vehicle), c0.left) + c0.forward[vehicle - 1];
  d[0][1] = c.cost(inst.depot_start(vehicle), c0.right) + c0.reverse[vehicle - 1];
  for (std::size_t k = 1; k < t; ++k) {
    const Customer& prev = inst.customer(seq[k - 1]);
    const Customer& cur = inst.customer(seq[k]);
    for (int s = 0; s < 2; ++s) {
      const int entry = s == 0 ? cur.left : cur.right;
      const double lcost = s == 0 ? cur.forward[vehicle - 1] : cur.reverse[vehicle - 1];
      const double fromL = d[k - 1][0] + c.cost(prev.right, entry);
      const double fromR = d[k - 1][1] + c.cost(prev.left, entry);
      d[k][static_cast<std::size_t>(s)] = std::min(fromL, fromR) + lcost;
      from[k][static_cast<std::size_t>(s)] = fromL <= fromR ? 0 : 1;
    }
  }
  const Customer& last = inst.customer(seq[t - 1]);
  const double endL = d[t - 1][0] + c.cost(last.right, inst.depot_end(vehicle));
  const double endR = d[t - 1][1] + c.cost(last.left, inst.depot_end(vehicle));
  const double best = std::min(endL, endR);
  if (dirs) {
    dirs->assign(t, true);
    int s = endL <= endR ? 0 : 1;
    for (std::size_t k = t; k-- > 0;) {
      (*dirs)[k] = (s == 0);
      if (k > 0) s = from[k][static_cast<std::size_t>(s)];
    }
  }
  return best;
}

// Minimum over all visiting orders of one vehicle's customer set.
double best_order(const TwoVrpInstance& inst, int vehicle, std::vector<int> ids,
                  std::vector<int>* order_out, std::vector<bool>* dirs_out) {
  std::sort(ids.begin(), ids.end());
  double best = kInf;
  std::vector<int> best_ids;
  do {
    const double cost = chain_best(inst, vehicle, ids, nullptr);
    if (cost < best) {
      best = cost;
      best_ids = ids;
    }
  } while (std::next_permutation(ids.begin(), ids.end()));
  if (order_out) *order_out = best_ids;
  if (dirs_out && std::isfinite(best)) chain_best(inst, vehicle, best_ids, dirs_out);
  return best;
}

}  // namespace

TwoVrpSolution oracle_2vrp(const TwoVrpInstance& inst, const VrpSolveOptions& opts) {
  const int n = inst.n();
  if (n > 9) throw GuardError("oracle_2vrp guard: n must be <= 9");

  double best = kInf;
  std::uint32_t best_mask = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (mask == 0 && !opts.allow_empty_vehicle1) continue;
    double load1 = 0.0, load2 = 0.0;
    bool ok = true;
    for (int i = 1; i <= n && ok; ++i) {
      const Customer& c = inst.customer(i);
      const bool in1 = (mask >> (i - 1)) & 1u;
      if (c.fixed_to == FixedTo::vehicle1 && !in1) ok = false;
      if (c.fixed_to == FixedTo::vehicle2 && in1) ok = false;
      (in1 ? load1 : load2) += c.demand;
    }
    if (!ok || load1 > inst.capacity(1) || load2 > inst.capacity(2)) continue;

    std::vector<int> set1, set2;
    for (int i = 1; i <= n; ++i) (((mask >> (i - 1)) & 1u) ? set1 : set2).push_back(i);
    const double cost = best_order(inst, 1, set1, nullptr, nullptr) +
                        best_order(inst, 2, set2, nullptr, nullptr);
    if (cost < best) {
      best = cost;
      best_mask = mask;
    }
  }
  if (!std::isfinite(best)) throw InfeasibleError("no feasible packing exists");

  std::vector<int> set1, set2;
  for (int i = 1; i <= n; ++i) (((best_mask >> (i - 1)) & 1u) ? set1 : set2).push_back(i);
  TwoVrpSolution sol;
  std::vector<int> order;
  std::vector<bool> dirs;
  sol.cost = 0.0;
  sol.cost += best_order(inst, 1, set1, &order, &dirs);
  for (std::size_t k = 0; k < order.size(); ++k) {
    sol.route1.push_back(RouteStop{order[k], dirs[k]});
    sol.load1 += inst.customer(order[k]).demand;
  }
  sol.cost += best_order(inst, 2, set2, &order, &dirs);
  for (std::size_t k = 0; k < order.size(); ++k) {
    sol.route2.push_back(RouteStop{order[k], dirs[k]});
    sol.load2 += inst.customer(order[k]).demand;
  }
  return sol;
}

TwoVrpInstance map_2tsp_to_2vrp(const TwoTspInstance& inst) {
  const int n = inst.n();
  if ((n + static_cast<int>(inst.fixed().size())) % 2 != 0)
    throw std::invalid_argument("map_2tsp_to_2vrp needs an even n + |fixed|");

  std::vector<Customer> customers;
  int id = 0;
  for (int v = 2; v <= n; ++v) {
    Customer c;
    c.left = c.right = v;
    c.demand = 1.0;
    if (inst.is_fixed(v)) {
      c.id = ++id;
      c.fixed_to = FixedTo::vehicle1;
      customers.push_back(c);
      c.id = ++id;
      c.fixed_to = FixedTo::vehicle2;
      customers.push_back(c);
    } else {
      c.id = ++id;
      c.fixed_to = FixedTo::none;
      customers.push_back(c);
    }
  }
  const double cap = inst.p() - 1;
  AsymmetricCostMatrix c1 = AsymmetricCostMatrix::from_symmetric(inst.matrix());
  AsymmetricCostMatrix c2 = c1;
  return TwoVrpInstance(std::move(customers), 1, 1, 1, 1, cap, cap, std::move(c1),
                        std::move(c2));
}

TwoVrpSolution lift_two_tour_solution(const TwoVrpInstance& mapped, const TwoTspInstance& source,
                                      const TwoTourSolution& sol) {
  const int n = source.n();
  // Rebuild the node -> customer-id layout of map_2tsp_to_2vrp.
  std::vector<int> first_id(static_cast<std::size_t>(n) + 1, 0);
  int id = 0;
  for (int v = 2; v <= n; ++v) {
    first_id[static_cast<std::size_t>(v)] = id + 1;
    id += source.is_fixed(v) ? 2 : 1;
  }
  TwoVrpSolution out;
  for (std::size_t k = 1; k + 1 < sol.tour1.size(); ++k) {
    const int v = sol.tour1[k];
    out.route1.push_back(RouteStop{first_id[static_cast<std::size_t>(v)], true});
  }
  for (std::size_t k = 1; k + 1 < sol.tour2.size(); ++k) {
    const int v = sol.tour2[k];
    const int cid = first_id[static_cast<std::size_t>(v)] + (source.is_fixed(v) ? 1 : 0);
    out.route2.push_back(RouteStop{cid, true});
  }
  out.load1 = static_cast<double>(out.route1.size());
  out.load2 = static_cast<double>(out.route2.size());
  out.cost = route_cost(mapped, 1, out.route1) + route_cost(mapped, 2, out.route2);
  return out;
}

Vrp2EvalReport evaluate_2vrp(const TwoVrpInstance& inst, const TwoVrpSolution& sol) {
  Vrp2EvalReport rep;
  auto bad = [&](const std::string& v) { rep.violations.push_back(v); };
  const int n = inst.n();

  std::vector<int> seen(static_cast<std::size_t>(n) + 1, 0);
  double load1 = 0.0, load2 = 0.0;
  bool labels_ok = true;
  for (int vehicle : {1, 2}) {
    for (const RouteStop& s : (vehicle == 1 ? sol.route1 : sol.route2)) {
      if (s.customer < 1 || s.customer > n) {
        bad("label: customer id out of range");
        labels_ok = false;
        continue;
      }
      ++seen[static_cast<std::size_t>(s.customer)];
      const Customer& c = inst.customer(s.customer);
      (vehicle == 1 ? load1 : load2) += c.demand;
      if (c.fixed_to != FixedTo::none &&
          c.fixed_to != (vehicle == 1 ? FixedTo::vehicle1 : FixedTo::vehicle2))
        bad("fixed: customer " + std::to_string(s.customer) + " on the wrong vehicle");
    }
  }
  for (int i = 1; i <= n; ++i)
    if (seen[static_cast<std::size_t>(i)] != 1)
      bad("coverage: customer " + std::to_string(i) + " visited " +
          std::to_string(seen[static_cast<std::size_t>(i)]) + " times");
  if (load1 > inst.capacity(1)) bad("capacity-1: load exceeds vehicle 1 capacity");
  if (load2 > inst.capacity(2)) bad("capacity-2: load exceeds vehicle 2 capacity");

  if (labels_ok) {
    rep.cost = route_cost(inst, 1, sol.route1) + route_cost(inst, 2, sol.route2);
    const double scale = std::max({1.0, inst.cost(1).max_finite(), inst.cost(2).max_finite()});
    const double tol = kCheckEps * scale * static_cast<double>(n + 4);
    if (!(std::abs(rep.cost - sol.cost) <= tol))
      bad("cost: stored cost does not match recomputation");
  }
  rep.feasible = rep.violations.empty();
  return rep;
}

TwoVrpInstance random_2vrp_instance(std::uint64_t seed, const RandomVrpParams& params) {
  const int n = params.n;
  if (n < 1) throw std::invalid_argument("random instance needs n >= 1");
  Rng rng(seed);
  const int nodes = 2 * (n + 2);

  auto random_matrix = [&]() {
    std::vector<double> m(static_cast<std::size_t>(nodes) * nodes, 0.0);
    for (int i = 0; i < nodes; ++i)
      for (int j = 0; j < nodes; ++j)
        if (i != j)
          m[static_cast<std::size_t>(i) * nodes + j] = rng.uniform(params.cost_lo, params.cost_hi);
    return AsymmetricCostMatrix(nodes, std::move(m));
  };
  AsymmetricCostMatrix c1 = random_matrix();
  AsymmetricCostMatrix c2 = random_matrix();

  std::vector<Customer> customers(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    Customer& c = customers[static_cast<std::size_t>(i) - 1];
    c.id = i;
    c.left = 2 * i - 1;
    c.right = 2 * i;
    for (int v = 0; v < 2; ++v) c.forward[static_cast<std::size_t>(v)] = rng.uniform(params.cost_lo, params.cost_hi);
    for (int v = 0; v < 2; ++v) c.reverse[static_cast<std::size_t>(v)] = rng.uniform(params.cost_lo, params.cost_hi);
    c.demand = rng.uniform(params.demand_lo, params.demand_hi);
    if (rng.next_double() < params.one_way_fraction) c.reverse = {kInf, kInf};
    const double f = rng.next_double();
    if (f < params.fixed_fraction / 2)
      c.fixed_to = FixedTo::vehicle1;
    else if (f < params.fixed_fraction)
      c.fixed_to = FixedTo::vehicle2;
  }

  // Capacities from a random packing plus slack, so the instance is feasible.
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 1);
  rng.shuffle(order);
  double load1 = 0.0, load2 = 0.0;
  bool any1 = false;
  for (int idx : order) {
    Customer& c = customers[static_cast<std::size_t>(idx) - 1];
    bool to1;
    if (c.fixed_to == FixedTo::vehicle1)
      to1 = true;
    else if (c.fixed_to == FixedTo::vehicle2)
      to1 = false;
    else
      to1 = rng.next_double() < 0.5;
    (to1 ? load1 : load2) += c.demand;
    any1 = any1 || to1;
  }
  if (!any1) {
    // Vehicle 1 must serve someone; move the first unfixed customer over.
    for (Customer& c : customers) {
      if (c.fixed_to != FixedTo::vehicle2) {
        load1 += c.demand;
        load2 -= c.demand;
        break;
      }
    }
  }
  const double cap1 = load1 * (1.0 + params.slack) + 1e-9;
  const double cap2 = load2 * (1.0 + params.slack) + 1e-9;

  return TwoVrpInstance(std::move(customers), 2 * n + 1, 2 * n + 2, 2 * n + 3, 2 * n + 4, cap1,
                        cap2, std::move(c1), std::move(c2));
}

}  // namespace tworoute
