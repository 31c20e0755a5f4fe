#ifndef TWOROUTE_SLIDING_HPP
#define TWOROUTE_SLIDING_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "tworoute/two_vrp.hpp"

namespace tworoute {

struct SlidingParams {
  int s = 3;     // window size, customers per window
  int step = 1;  // slide step
  /// Customers of each sub-problem, the two depots counted in.
  int target_size() const { return 2 * s + 6; }
};

/// Collapses an ordered subpath of stops into one customer: entry node of the
/// first stop, exit node of the last, summed demand, and the four directional
/// traversal costs obtained by walking the subpath forward resp. backward
/// (backward flips every stop's direction). Fixing is inherited; a subpath
/// mixing customers fixed to different vehicles is rejected.
Customer aggregate_subpath(const TwoVrpInstance& inst, std::span<const RouteStop> subpath);

/// One window pair over the flattened customer sequence (route1 ++ route2,
/// 0-based positions): the first window starts at `a` inside route1, the
/// second at `b` and always reaches route2.
struct WindowPair {
  int a = 0, span1 = 0;
  int b = 0, span2 = 0;
};

/// Enumeration order of the search: for each first-window position
/// (advancing by `step`), the second window starts at the route boundary or
/// right after the first window, whichever is later, and slides to the end
/// of the sequence. Windows shrink only when a route is shorter than `s`.
std::vector<WindowPair> sliding_window_pairs(int route1_len, int total_len,
                                             const SlidingParams& params);

/// One local search descent: enumerates window pairs over the flattened
/// route, rebuilds each window pair plus aggregated remainder segments as an
/// exact sub-problem of target_size() customers, and restarts the enumeration
/// from the first window pair after every strict improvement. Returns a
/// feasible solution with cost <= incumbent.cost.
TwoVrpSolution sliding_subset_search(const TwoVrpInstance& inst, const TwoVrpSolution& incumbent,
                                     const SlidingParams& params,
                                     const VrpSolveOptions& solver_opts = {});

/// Reorders one vehicle's stops (directions kept) with belperm on the
/// route's node graph, the depot pair acting as one pinned virtual node.
/// Never worsens the solution.
TwoVrpSolution polish_routes(const TwoVrpInstance& inst, const TwoVrpSolution& sol);

enum class StartGenerator : std::uint8_t { ksh, rndh };

struct HeuristicLogRow {
  int repetition = 0;  // 1-based outer iteration
  int pass = 0;        // inner improvement pass within the repetition
  double best_cost = 0.0;  // global best after this pass
  double elapsed_ms = 0.0;
};

struct HeuristicResult {
  TwoVrpSolution best;
  std::vector<HeuristicLogRow> log;
  long validated_steps = 0;
};

struct HeuristicOptions {
  VrpSolveOptions solver;
  /// Stop early once the best cost reaches this value (known optimum).
  std::optional<double> stop_at;
  /// Wall-clock budget: no new repetition starts after this much time. Used
  /// to match a random-start run against a recognition-start run; seeded
  /// runs stay reproducible only without it, so the default is off.
  std::optional<double> time_budget_ms;
  /// Re-check feasibility and monotonicity after every improvement step;
  /// throws std::logic_error on a violation.
  bool validate = false;
};

/// Outer loop: `repetitions` times, generate a feasible start (ksh: the
/// recognition heuristic on the two-period instance behind `source_2tsp`,
/// one start node per repetition; rndh: seeded random packing), then
/// alternate sliding_subset_search and polish_routes until neither improves.
/// Logs the global best after every inner pass.
HeuristicResult two_vrp_heuristic(const TwoVrpInstance& inst, const SlidingParams& params,
                                  StartGenerator generator, int repetitions, std::uint64_t seed,
                                  const TwoTspInstance* source_2tsp = nullptr,
                                  const HeuristicOptions& opts = {});

/// Random feasible start used by the rndh generator: shuffled customers,
/// each assigned to a random vehicle among those with enough remaining
/// capacity, random entry sides. Throws InfeasibleError after 1000 failed
/// packing attempts.
TwoVrpSolution random_feasible_solution(const TwoVrpInstance& inst, std::uint64_t seed);

}  // namespace tworoute

#endif
