#include "doctest.h"

#include <stdexcept>
#include <vector>

#include "tworoute/errors.hpp"
#include "tworoute/generator.hpp"
#include "tworoute/rng.hpp"
#include "tworoute/sliding.hpp"
#include "tworoute/two_vrp.hpp"

using namespace tworoute;

TEST_CASE("aggregating a single stop reproduces the customer") {
  const auto inst = random_2vrp_instance(3, RandomVrpParams{.n = 5});
  const RouteStop stop{2, true};
  const Customer agg = aggregate_subpath(inst, std::vector<RouteStop>{stop});
  const Customer& c = inst.customer(2);
  CHECK(agg.left == c.left);
  CHECK(agg.right == c.right);
  CHECK(agg.demand == c.demand);
  CHECK(agg.forward == c.forward);
  CHECK(agg.reverse == c.reverse);

  const RouteStop flipped{2, false};
  const Customer ragg = aggregate_subpath(inst, std::vector<RouteStop>{flipped});
  CHECK(ragg.left == c.right);
  CHECK(ragg.right == c.left);
  CHECK(ragg.forward == c.reverse);
  CHECK(ragg.reverse == c.forward);
}

TEST_CASE("aggregate traversal costs match an explicit path walk") {
  const auto inst = random_2vrp_instance(11, RandomVrpParams{.n = 6, .one_way_fraction = 0.0});
  const std::vector<RouteStop> path{{2, true}, {5, false}, {3, true}};
  const Customer agg = aggregate_subpath(inst, path);

  for (int vehicle = 1; vehicle <= 2; ++vehicle) {
    const auto& c = inst.cost(vehicle);
    auto walk = [&](const std::vector<RouteStop>& stops) {
      double total = 0.0;
      for (std::size_t k = 0; k < stops.size(); ++k) {
        const Customer& cu = inst.customer(stops[k].customer);
        total += stops[k].enter_left ? cu.forward[vehicle - 1] : cu.reverse[vehicle - 1];
        if (k + 1 < stops.size()) {
          const Customer& nx = inst.customer(stops[k + 1].customer);
          total += c.cost(stops[k].enter_left ? cu.right : cu.left,
                          stops[k + 1].enter_left ? nx.left : nx.right);
        }
      }
      return total;
    };
    CHECK(agg.forward[vehicle - 1] == doctest::Approx(walk(path)).epsilon(1e-12));
    std::vector<RouteStop> rev(path.rbegin(), path.rend());
    for (auto& s : rev) s.enter_left = !s.enter_left;
    CHECK(agg.reverse[vehicle - 1] == doctest::Approx(walk(rev)).epsilon(1e-12));
  }

  SUBCASE("zero-cost stops aggregate to zero") {
    GeneratorParams p;
    p.n = 6;
    p.seed = 2;
    const auto g = generate_2tsp_instance(p, 2);
    const auto mapped = map_2tsp_to_2vrp(g.instance);
    // Two unfixed mapped customers: single nodes, zero internal costs.
    std::vector<int> free_ids;
    for (const Customer& c : mapped.customers())
      if (c.fixed_to == FixedTo::none) free_ids.push_back(c.id);
    REQUIRE(free_ids.size() >= 2);
    const std::vector<RouteStop> pp{{free_ids[0], true}, {free_ids[1], true}};
    const Customer agg0 = aggregate_subpath(mapped, pp);
    CHECK(agg0.demand == 2.0);
    CHECK(agg0.forward[0] == doctest::Approx(mapped.cost(1).cost(
                                 mapped.customer(free_ids[0]).right,
                                 mapped.customer(free_ids[1]).left)));
  }
}

TEST_CASE("aggregating across different fixings fails") {
  GeneratorParams p;
  p.n = 6;
  p.seed = 4;
  const auto g = generate_2tsp_instance(p, 2);
  const auto mapped = map_2tsp_to_2vrp(g.instance);
  // Find a vehicle-1 and a vehicle-2 fixed customer.
  int f1 = 0, f2 = 0;
  for (const Customer& c : mapped.customers()) {
    if (c.fixed_to == FixedTo::vehicle1) f1 = c.id;
    if (c.fixed_to == FixedTo::vehicle2) f2 = c.id;
  }
  REQUIRE(f1 > 0);
  REQUIRE(f2 > 0);
  CHECK_THROWS_AS(
      aggregate_subpath(mapped, std::vector<RouteStop>{{f1, true}, {f2, true}}),
      std::invalid_argument);
}

TEST_CASE("window enumeration: first step, ordering, and coverage") {
  SUBCASE("first pair straddles the route boundary") {
    const SlidingParams p{3, 1};
    const auto pairs = sliding_window_pairs(10, 20, p);
    REQUIRE_FALSE(pairs.empty());
    // S1 at the front; S2 holds the last s-1 of route1 plus one route2 stop.
    CHECK(pairs[0].a == 0);
    CHECK(pairs[0].span1 == 3);
    CHECK(pairs[0].b == 10 - 3 + 1);
    CHECK(pairs[0].b + pairs[0].span2 - 1 >= 10);
  }

  SUBCASE("every second window reaches route2; windows stay disjoint") {
    for (const auto& dims : {std::pair{7, 14}, std::pair{10, 25}, std::pair{4, 9}}) {
      for (int s = 1; s <= 4; ++s) {
        for (int l = 1; l <= 3; ++l) {
          const auto pairs = sliding_window_pairs(dims.first, dims.second, SlidingParams{s, l});
          for (const auto& w : pairs) {
            CHECK(w.a + w.span1 <= w.b);
            CHECK(w.a < dims.first);                     // anchored in route1
            CHECK(w.b + w.span2 > dims.first);           // reaches route2
            CHECK(w.b + w.span2 <= dims.second);
          }
        }
      }
    }
  }

  SUBCASE("with step 1 every route2 position appears in a second window") {
    const int k1 = 9, total = 21;
    for (int s = 2; s <= 4; ++s) {
      std::vector<bool> covered(static_cast<std::size_t>(total), false);
      for (const auto& w : sliding_window_pairs(k1, total, SlidingParams{s, 1}))
        for (int pos = w.b; pos < w.b + w.span2; ++pos) covered[static_cast<std::size_t>(pos)] = true;
      for (int pos = k1; pos < total; ++pos) CHECK(covered[static_cast<std::size_t>(pos)]);
    }
  }
}

TEST_CASE("sliding search is monotone and keeps feasibility") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    GeneratorParams p;
    p.n = 10;
    p.seed = 6000 + seed;
    const auto g = generate_2tsp_instance(p, 4);
    const auto mapped = map_2tsp_to_2vrp(g.instance);
    const auto start = random_feasible_solution(mapped, seed);
    REQUIRE(evaluate_2vrp(mapped, start).feasible);

    const SlidingParams params{2, 1};
    const auto out = sliding_subset_search(mapped, start, params);
    CHECK(out.cost <= start.cost + 1e-9);
    CHECK(evaluate_2vrp(mapped, out).feasible);
  }
}

TEST_CASE("an optimal incumbent stays put") {
  GeneratorParams p;
  p.n = 8;
  p.seed = 15;
  const auto g = generate_2tsp_instance(p, 2);
  const auto mapped = map_2tsp_to_2vrp(g.instance);
  const auto opt = solve_2vrp_exact(mapped);
  REQUIRE(opt.cost == doctest::Approx(g.known_optimum).epsilon(1e-9));
  const auto out = sliding_subset_search(mapped, opt, SlidingParams{2, 1});
  CHECK(out.cost == doctest::Approx(opt.cost).epsilon(1e-12));
}

TEST_CASE("sliding search solves small mapped instances from a random start") {
  // Window pairs cover the whole route, so the exact sub-solver should close
  // the gap on instances whose size matches the sub-problem size.
  int solved = 0;
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    GeneratorParams p;
    p.n = 8;
    p.seed = 7000 + seed;
    const auto g = generate_2tsp_instance(p, 2);
    const auto mapped = map_2tsp_to_2vrp(g.instance);
    const auto start = random_feasible_solution(mapped, seed + 1);
    const auto out = sliding_subset_search(mapped, start, SlidingParams{3, 1});
    if (out.cost <= g.known_optimum * (1 + 1e-9)) ++solved;
  }
  CHECK(solved >= 4);
}

TEST_CASE("polish_routes never worsens and preserves feasibility") {
  const auto inst = random_2vrp_instance(31, RandomVrpParams{.n = 8});
  const auto start = random_feasible_solution(inst, 9);
  const auto polished = polish_routes(inst, start);
  CHECK(polished.cost <= start.cost + 1e-9);
  CHECK(evaluate_2vrp(inst, polished).feasible);
}

TEST_CASE("random feasible starts respect fixings and capacities") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto inst = random_2vrp_instance(seed, RandomVrpParams{.n = 7, .fixed_fraction = 0.5});
    const auto sol = random_feasible_solution(inst, seed * 7 + 1);
    CHECK(evaluate_2vrp(inst, sol).feasible);
    CHECK_FALSE(sol.route1.empty());
  }
}

TEST_CASE("heuristic runs are deterministic and logged") {
  GeneratorParams p;
  p.n = 10;
  p.seed = 71;
  const auto g = generate_2tsp_instance(p, 4);
  const auto mapped = map_2tsp_to_2vrp(g.instance);

  HeuristicOptions opts;
  opts.validate = true;
  const auto a = two_vrp_heuristic(mapped, SlidingParams{2, 1}, StartGenerator::rndh, 5, 99,
                                   nullptr, opts);
  const auto b = two_vrp_heuristic(mapped, SlidingParams{2, 1}, StartGenerator::rndh, 5, 99,
                                   nullptr, opts);
  CHECK(a.best.cost == b.best.cost);
  REQUIRE(a.log.size() == b.log.size());
  for (std::size_t k = 0; k < a.log.size(); ++k) {
    CHECK(a.log[k].repetition == b.log[k].repetition);
    CHECK(a.log[k].pass == b.log[k].pass);
    CHECK(a.log[k].best_cost == b.log[k].best_cost);
  }
  CHECK(a.validated_steps > 0);

  // Best-so-far trace never increases.
  for (std::size_t k = 1; k < a.log.size(); ++k)
    CHECK(a.log[k].best_cost <= a.log[k - 1].best_cost + 1e-12);
}

TEST_CASE("ksh generation needs the source instance and finds the optimum") {
  GeneratorParams p;
  p.n = 10;
  p.seed = 72;
  const auto g = generate_2tsp_instance(p, 4);
  const auto mapped = map_2tsp_to_2vrp(g.instance);
  CHECK_THROWS_AS(
      two_vrp_heuristic(mapped, SlidingParams{2, 1}, StartGenerator::ksh, 3, 1, nullptr),
      std::invalid_argument);

  HeuristicOptions opts;
  opts.stop_at = g.known_optimum;
  const auto res = two_vrp_heuristic(mapped, SlidingParams{2, 1}, StartGenerator::ksh, 3, 1,
                                     &g.instance, opts);
  CHECK(res.best.cost == doctest::Approx(g.known_optimum).epsilon(1e-9));
  CHECK(evaluate_2vrp(mapped, res.best).feasible);
}

TEST_CASE("a time budget stops new repetitions but always finishes the first") {
  GeneratorParams p;
  p.n = 8;
  p.seed = 74;
  const auto g = generate_2tsp_instance(p, 2);
  const auto mapped = map_2tsp_to_2vrp(g.instance);
  HeuristicOptions opts;
  opts.time_budget_ms = 1e-6;  // expires immediately after repetition 1
  const auto res = two_vrp_heuristic(mapped, SlidingParams{2, 1}, StartGenerator::rndh, 50, 4,
                                     nullptr, opts);
  REQUIRE_FALSE(res.log.empty());
  CHECK(res.log.back().repetition == 1);
  CHECK(evaluate_2vrp(mapped, res.best).feasible);
}

TEST_CASE("rndh improves toward the optimum on a small instance") {
  GeneratorParams p;
  p.n = 10;
  p.seed = 73;
  const auto g = generate_2tsp_instance(p, 2);
  const auto mapped = map_2tsp_to_2vrp(g.instance);
  HeuristicOptions opts;
  opts.stop_at = g.known_optimum;
  const auto res = two_vrp_heuristic(mapped, SlidingParams{3, 1}, StartGenerator::rndh, 40, 5,
                                     nullptr, opts);
  CHECK(res.best.cost <= g.known_optimum * (1 + 1e-9));
}
