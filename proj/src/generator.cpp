#include "tworoute/generator.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "tworoute/rng.hpp"

namespace tworoute {

namespace {

void validate(const GeneratorParams& p) {
  if (p.n < 4) throw std::invalid_argument("generator needs n >= 4");
  if (p.hi < p.lo) throw std::invalid_argument("empty value range");
  if (p.strong ? !(p.lo > 0.0) : !(p.lo >= 0.0))
    throw std::invalid_argument("value range incompatible with strong flag");
}

std::size_t alpha_count(int n) {
  return static_cast<std::size_t>(n - 3) * static_cast<std::size_t>(n - 2) / 2;
}

// Disguising relabeling. Label 1 stays put: the node ranked first by the
// hidden ordering is the home node of every instance built on top, which the
// two-period model wants in the fixed set.
Permutation draw_disguise(Rng& rng, int n) {
  std::vector<int> phi(static_cast<std::size_t>(n));
  std::iota(phi.begin(), phi.end(), 1);
  std::vector<int> tail(phi.begin() + 1, phi.end());
  rng.shuffle(tail);
  std::copy(tail.begin(), tail.end(), phi.begin() + 1);
  return Permutation(std::move(phi));
}

// The fixed draw order: first-row entries, c(2,n), betas, alphas.
KalmansonInputs draw_inputs(Rng& rng, const GeneratorParams& params) {
  KalmansonInputs in;
  in.n = params.n;
  in.first_row.resize(static_cast<std::size_t>(params.n - 1));
  for (auto& v : in.first_row) v = rng.uniform(params.lo, params.hi);
  in.c2n = rng.uniform(params.lo, params.hi);
  in.betas.resize(static_cast<std::size_t>(params.n - 3));
  for (auto& v : in.betas) v = rng.uniform(params.lo, params.hi);
  in.alphas.resize(alpha_count(params.n));
  for (auto& v : in.alphas) v = rng.uniform(params.lo, params.hi);
  return in;
}

}  // namespace

SymmetricCostMatrix build_kalmanson(const KalmansonInputs& in, KalmansonStages* stages) {
  const int n = in.n;
  if (n < 4) throw std::invalid_argument("build_kalmanson needs n >= 4");
  if (in.first_row.size() != static_cast<std::size_t>(n - 1) ||
      in.betas.size() != static_cast<std::size_t>(n - 3) ||
      in.alphas.size() != alpha_count(n))
    throw std::invalid_argument("build_kalmanson: input sizes do not match n");

  RealMatrix m(n);
  for (int i = 2; i <= n; ++i) {
    m.at(1, i) = in.first_row[static_cast<std::size_t>(i) - 2];
    m.at(i, 1) = m.at(1, i);
  }
  m.at(2, n) = in.c2n;
  m.at(n, 2) = in.c2n;

  // Last column, top down: each beta difference pins the next entry.
  for (int i = 3; i <= n - 1; ++i) {
    const double v = m.at(i, 1) + m.at(i - 1, n) - m.at(i - 1, 1) - in.betas[static_cast<std::size_t>(i) - 3];
    m.at(i, n) = v;
    m.at(n, i) = v;
  }
  if (stages) stages->border = m;

  // Interior, rows 2..n-2, columns walked from n-1 down to the diagonal.
  std::size_t a = 0;
  for (int i = 2; i <= n - 2; ++i) {
    const std::size_t row_base = a;
    // alphas for row index i-1 are stored ascending in j; walk them backwards
    const int jcount = (n - 1) - (i + 1) + 1;
    for (int j = n - 1; j >= i + 1; --j) {
      const double alpha = in.alphas[row_base + static_cast<std::size_t>(j - (i + 1))];
      const double v = m.at(i - 1, j) + m.at(i, j + 1) - m.at(i - 1, j + 1) - alpha;
      m.at(i, j) = v;
      m.at(j, i) = v;
    }
    a += static_cast<std::size_t>(jcount);
  }
  if (stages) stages->complete = m;

  // Shift all off-diagonal entries by the most negative one, if any.
  double lowest = 0.0;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j) lowest = std::min(lowest, m.at(i, j));
  if (lowest < 0.0) {
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        if (i != j) m.at(i, j) -= lowest;
  }

  SymmetricCostMatrix out = SymmetricCostMatrix::from(m);
  if (stages) stages->nonnegative = out;
  return out;
}

GeneratedInstance generate_kalmanson(const GeneratorParams& params) {
  validate(params);
  const int n = params.n;
  Rng rng(params.seed);
  KalmansonInputs in = draw_inputs(rng, params);
  SymmetricCostMatrix kalmanson = build_kalmanson(in);

  if (!params.permute_output) {
    return GeneratedInstance{std::move(kalmanson), Permutation::identity(n),
                             std::move(in.alphas), std::move(in.betas)};
  }
  const Permutation relabel = draw_disguise(rng, n);
  SymmetricCostMatrix disguised = permute(kalmanson, relabel);
  return GeneratedInstance{std::move(disguised), relabel.inverse(), std::move(in.alphas),
                           std::move(in.betas)};
}

Generated2Tsp generate_2tsp_instance(const GeneratorParams& params, int fixed_count,
                                     bool allow_odd) {
  validate(params);
  if (fixed_count < 1 || fixed_count > params.n)
    throw std::invalid_argument("fixed_count out of range");
  if (!allow_odd && (params.n + fixed_count) % 2 != 0)
    throw std::invalid_argument("n + fixed_count must be even (or enable the odd mode)");

  // Reproduce the matrix stream, then continue drawing for the fixed set.
  Rng rng(params.seed);
  const int n = params.n;
  KalmansonInputs in = draw_inputs(rng, params);
  SymmetricCostMatrix kalmanson = build_kalmanson(in);

  Permutation relabel = Permutation::identity(n);
  if (params.permute_output) relabel = draw_disguise(rng, n);
  const Permutation hidden = relabel.inverse();

  // Uniform fixed set; the anchor node (hidden rank 1, always label 1) is in.
  std::vector<int> others;
  others.reserve(static_cast<std::size_t>(n) - 1);
  for (int v = 2; v <= n; ++v) others.push_back(v);
  rng.shuffle(others);
  std::vector<int> fixed(others.begin(), others.begin() + (fixed_count - 1));
  fixed.push_back(1);
  std::sort(fixed.begin(), fixed.end());

  // Solve on the hidden ordering, where the anchor sits at position 1. The
  // matrix in hidden order is the unpermuted construction itself; the fixed
  // set maps through hidden_order's inverse.
  const Permutation hidden_inv = hidden.inverse();
  std::vector<int> fixed_ordered;
  fixed_ordered.reserve(fixed.size());
  for (int v : fixed) fixed_ordered.push_back(hidden_inv(v));
  std::sort(fixed_ordered.begin(), fixed_ordered.end());
  TwoTspInstance ordered_inst(kalmanson, fixed_ordered, allow_odd);
  const double optimum = solve_balanced_2tsp(ordered_inst).total_length;

  SymmetricCostMatrix out_matrix =
      params.permute_output ? permute(kalmanson, relabel) : kalmanson;
  TwoTspInstance instance(std::move(out_matrix), std::move(fixed), allow_odd);
  GeneratedInstance gen{instance.matrix(), hidden, std::move(in.alphas), std::move(in.betas)};
  return Generated2Tsp{std::move(instance), optimum, std::move(gen)};
}

}  // namespace tworoute
