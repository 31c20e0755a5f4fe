#ifndef TWOROUTE_TWO_VRP_HPP
#define TWOROUTE_TWO_VRP_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "tworoute/matrix.hpp"
#include "tworoute/two_tsp.hpp"

namespace tworoute {

enum class FixedTo : std::uint8_t { none = 0, vehicle1 = 1, vehicle2 = 2 };

/// Interval customer: an estate with two entry nodes and direction-dependent
/// traversal costs per vehicle.
struct Customer {
  int id = 0;
  int left = 0, right = 0;  // node labels into the cost matrices
  /// forward[v]: traversal cost left->right by vehicle v+1 (may be +inf);
  /// reverse[v]: right->left.
  std::array<double, 2> forward{0.0, 0.0};
  std::array<double, 2> reverse{0.0, 0.0};
  double demand = 0.0;
  FixedTo fixed_to = FixedTo::none;
};

/// Two heterogeneous vehicles; vehicle m leaves depot_start[m-1] and returns
/// to depot_end[m-1]. Costs live in per-vehicle asymmetric matrices over the
/// union of all referenced nodes (2(n+2) nodes when all entry points are
/// distinct). The auxiliary separator customer is synthesized by the solvers,
/// never stored.
class TwoVrpInstance {
 public:
  TwoVrpInstance(std::vector<Customer> customers, int depot1_start, int depot1_end,
                 int depot2_start, int depot2_end, double capacity1, double capacity2,
                 AsymmetricCostMatrix cost1, AsymmetricCostMatrix cost2);

  const std::vector<Customer>& customers() const { return customers_; }
  const Customer& customer(int id) const { return customers_[static_cast<std::size_t>(id) - 1]; }
  int n() const { return static_cast<int>(customers_.size()); }
  int depot_start(int vehicle) const { return vehicle == 1 ? d1s_ : d2s_; }
  int depot_end(int vehicle) const { return vehicle == 1 ? d1e_ : d2e_; }
  double capacity(int vehicle) const { return vehicle == 1 ? cap1_ : cap2_; }
  const AsymmetricCostMatrix& cost(int vehicle) const { return vehicle == 1 ? c1_ : c2_; }
  double total_demand() const { return total_demand_; }

 private:
  std::vector<Customer> customers_;
  int d1s_, d1e_, d2s_, d2e_;
  double cap1_, cap2_;
  AsymmetricCostMatrix c1_, c2_;
  double total_demand_;
};

struct RouteStop {
  int customer = 0;
  bool enter_left = true;  // entered at the left node, exits at the right
  bool operator==(const RouteStop&) const = default;
};

struct TwoVrpSolution {
  std::vector<RouteStop> route1, route2;
  double cost = 0.0;
  double load1 = 0.0, load2 = 0.0;
};

struct VrpSolveOptions {
  int max_subset_bits = 24;        // guard on n+1, the subset width
  bool allow_empty_vehicle1 = false;  // permit the separator as first customer
};

/// Exact solver: subset dynamic program over states (customer, entry side,
/// set of customers still to visit), with the separator customer switching
/// the cost model from vehicle 1 to vehicle 2. Vehicle-2 load is checked at
/// every second-phase state, vehicle-1 load once at the separator transition.
/// Throws GuardError above the subset-width guard and InfeasibleError when no
/// packing fits.
TwoVrpSolution solve_2vrp_exact(const TwoVrpInstance& inst, const VrpSolveOptions& opts = {});

/// Brute force over assignments, orders and directions; n <= 9.
TwoVrpSolution oracle_2vrp(const TwoVrpInstance& inst, const VrpSolveOptions& opts = {});

/// Model the balanced two-period instance as a two-vehicle instance: node 1
/// becomes the shared depot of both vehicles, every other fixed node is
/// duplicated into a vehicle-1 copy and a vehicle-2 copy, free nodes become
/// unfixed customers, all demands are 1 and both capacities p-1.
TwoVrpInstance map_2tsp_to_2vrp(const TwoTspInstance& inst);

/// Converts a two-period solution to the mapped instance's customers.
TwoVrpSolution lift_two_tour_solution(const TwoVrpInstance& mapped, const TwoTspInstance& source,
                                      const TwoTourSolution& sol);

struct Vrp2EvalReport {
  bool feasible = false;
  double cost = 0.0;
  std::vector<std::string> violations;
};

Vrp2EvalReport evaluate_2vrp(const TwoVrpInstance& inst, const TwoVrpSolution& sol);

/// Route cost of one vehicle's leg from its start depot through the stops to
/// its end depot (internal traversals included). Infinity if a forbidden
/// direction is used.
double route_cost(const TwoVrpInstance& inst, int vehicle, const std::vector<RouteStop>& route);

struct RandomVrpParams {
  int n = 6;
  double cost_lo = 1.0, cost_hi = 10.0;
  double demand_lo = 1.0, demand_hi = 5.0;
  double fixed_fraction = 0.3;    // expected share of customers with a fixed vehicle
  double one_way_fraction = 0.2;  // expected share of customers with one inf direction
  double slack = 0.25;            // capacity slack over a random feasible packing
};

/// Seeded random instance with 2(n+2) distinct nodes, heterogeneous costs and
/// guaranteed-feasible capacities.
TwoVrpInstance random_2vrp_instance(std::uint64_t seed, const RandomVrpParams& params = {});

}  // namespace tworoute

#endif
