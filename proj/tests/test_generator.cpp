#include "doctest.h"

#include <stdexcept>
#include <vector>

#include "fixtures.hpp"
#include "tworoute/generator.hpp"
#include "tworoute/two_tsp.hpp"

using namespace tworoute;

namespace {

KalmansonInputs worked_inputs() {
  KalmansonInputs in;
  in.n = 5;
  in.first_row = {3, 1, 3, 0};  // c(1,2)..c(1,5)
  in.c2n = 2;
  in.betas = {1, 1};        // beta_2, beta_3
  in.alphas = {2, 3, 1};    // alpha_13, alpha_14, alpha_24
  return in;
}

}  // namespace

TEST_CASE("construction replays the worked example stage by stage") {
  KalmansonStages stages;
  const auto out = build_kalmanson(worked_inputs(), &stages);

  // Border stage: first row/column plus the completed last column.
  CHECK(stages.border.at(1, 2) == 3.0);
  CHECK(stages.border.at(1, 3) == 1.0);
  CHECK(stages.border.at(1, 4) == 3.0);
  CHECK(stages.border.at(1, 5) == 0.0);
  CHECK(stages.border.at(2, 5) == 2.0);
  CHECK(stages.border.at(3, 5) == -1.0);
  CHECK(stages.border.at(4, 5) == 0.0);
  CHECK(stages.border.at(5, 3) == -1.0);

  // Interior stage, before the shift.
  CHECK(stages.complete.at(2, 3) == -2.0);
  CHECK(stages.complete.at(2, 4) == 2.0);
  CHECK(stages.complete.at(3, 4) == -2.0);

  // Shifted, nonnegative result.
  const auto expect = fixtures::kalmanson5();
  for (int i = 1; i <= 5; ++i)
    for (int j = 1; j <= 5; ++j) CHECK(out.cost(i, j) == expect.cost(i, j));

  // Disguising with the printed relabeling gives the printed matrix.
  const auto disguised = permute(out, Permutation({3, 2, 4, 1, 5}));
  const auto expect_d = fixtures::disguised5();
  for (int i = 1; i <= 5; ++i)
    for (int j = 1; j <= 5; ++j) CHECK(disguised.cost(i, j) == expect_d.cost(i, j));
}

TEST_CASE("zero inputs give the zero matrix") {
  KalmansonInputs in;
  in.n = 5;
  in.first_row = {0, 0, 0, 0};
  in.c2n = 0;
  in.betas = {0, 0};
  in.alphas = {0, 0, 0};
  const auto out = build_kalmanson(in);
  for (int i = 1; i <= 5; ++i)
    for (int j = 1; j <= 5; ++j) CHECK(out.cost(i, j) == 0.0);
}

TEST_CASE("seeded generation is deterministic and hides a strong structure") {
  for (std::uint64_t seed : {1ULL, 7ULL, 99ULL}) {
    GeneratorParams p;
    p.n = 9;
    p.seed = seed;
    const auto a = generate_kalmanson(p);
    const auto b = generate_kalmanson(p);
    CHECK(a.matrix.data() == b.matrix.data());  // bit identical
    CHECK(a.hidden_order == b.hidden_order);
    CHECK(a.alphas == b.alphas);
    CHECK(a.betas == b.betas);

    // The two-period builder replays the same stream: identical matrix.
    const auto g = generate_2tsp_instance(p, 3, true);
    CHECK(g.instance.matrix().data() == a.matrix.data());
    CHECK(g.source.hidden_order == a.hidden_order);
  }
}

TEST_CASE("hidden order restores a strict kalmanson matrix") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    GeneratorParams p;
    p.n = 4 + static_cast<int>(seed % 9);
    p.seed = seed;
    p.lo = 0.1;
    p.hi = 1.1;
    p.strong = true;
    p.permute_output = true;
    const auto g = generate_kalmanson(p);
    CHECK(check_kalmanson(permute(g.matrix, g.hidden_order), true).holds);
  }
}

TEST_CASE("alpha and beta values are recoverable from the ordered matrix") {
  GeneratorParams p;
  p.n = 8;
  p.seed = 5;
  p.permute_output = false;
  const auto g = generate_kalmanson(p);
  std::size_t a = 0;
  for (int i = 1; i <= p.n - 3; ++i)
    for (int j = i + 2; j <= p.n - 1; ++j)
      CHECK(alpha_value(g.matrix, i, j) == doctest::Approx(g.alphas[a++]).epsilon(1e-9));
  for (int i = 2; i <= p.n - 2; ++i)
    CHECK(beta_value(g.matrix, i) ==
          doctest::Approx(g.betas[static_cast<std::size_t>(i) - 2]).epsilon(1e-9));
}

TEST_CASE("shifting all off-diagonal entries leaves alpha and beta unchanged") {
  const auto m = fixtures::kalmanson5();
  std::vector<double> shifted = m.data();
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j)
      if (i != j) shifted[static_cast<std::size_t>(i) * 5 + j] += 17.5;
  SymmetricCostMatrix ms(5, std::move(shifted));
  for (int i = 1; i <= 2; ++i)
    for (int j = i + 2; j <= 4; ++j)
      CHECK(alpha_value(ms, i, j) == doctest::Approx(alpha_value(m, i, j)).epsilon(1e-12));
  for (int i = 2; i <= 3; ++i)
    CHECK(beta_value(ms, i) == doctest::Approx(beta_value(m, i)).epsilon(1e-12));
}

TEST_CASE("parameter validation") {
  GeneratorParams p;
  p.n = 3;
  CHECK_THROWS_AS(generate_kalmanson(p), std::invalid_argument);
  p.n = 6;
  p.lo = 0.0;
  p.strong = true;
  CHECK_THROWS_AS(generate_kalmanson(p), std::invalid_argument);
  p.strong = false;
  CHECK_NOTHROW(generate_kalmanson(p));
  p.hi = -1.0;
  CHECK_THROWS_AS(generate_kalmanson(p), std::invalid_argument);
}

TEST_CASE("two-period generation: parity, anchor and known optimum") {
  GeneratorParams p;
  p.n = 6;
  p.seed = 42;
  CHECK_THROWS_AS(generate_2tsp_instance(p, 1), std::invalid_argument);  // odd total

  const auto g = generate_2tsp_instance(p, 2);
  CHECK(g.instance.fixed().size() == 2);
  // The anchor (first node of the hidden ordering) is always fixed.
  CHECK(g.instance.is_fixed(g.source.hidden_order(1)));

  const auto brute = oracle_2tsp(g.instance);
  CHECK(g.known_optimum == doctest::Approx(brute.total_length).epsilon(1e-9));
}

TEST_CASE("all nodes fixed: optimum is twice the identity master tour") {
  GeneratorParams p;
  p.n = 4;
  p.seed = 0;
  p.permute_output = false;
  const auto g = generate_2tsp_instance(p, 4);
  std::vector<int> ident{1, 2, 3, 4, 1};
  CHECK(g.known_optimum ==
        doctest::Approx(2 * closed_tour_length(g.instance.matrix(), ident)).epsilon(1e-12));
}

TEST_CASE("odd totals supported only in the near-balanced mode") {
  GeneratorParams p;
  p.n = 5;
  p.seed = 3;
  CHECK_THROWS_AS(generate_2tsp_instance(p, 2), std::invalid_argument);
  const auto g = generate_2tsp_instance(p, 2, true);
  const auto brute = oracle_2tsp(g.instance);
  CHECK(g.known_optimum == doctest::Approx(brute.total_length).epsilon(1e-9));
}
