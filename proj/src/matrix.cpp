#include "tworoute/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace tworoute {

namespace {

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

double tolerance_for(const SymmetricCostMatrix& c) { return kCheckEps * c.max_abs(); }

}  // namespace

Permutation::Permutation(std::vector<int> mapping) : map_(std::move(mapping)) {
  const int n = static_cast<int>(map_.size());
  require(n >= 1, "permutation must be nonempty");
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  for (int v : map_) {
    require(v >= 1 && v <= n, "permutation value out of range");
    require(!seen[static_cast<std::size_t>(v)], "permutation value repeated");
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> m(static_cast<std::size_t>(n));
  std::iota(m.begin(), m.end(), 1);
  return Permutation(std::move(m));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(map_.size());
  for (int pos = 1; pos <= order(); ++pos) inv[static_cast<std::size_t>(map_[pos - 1]) - 1] = pos;
  return Permutation(std::move(inv));
}

SymmetricCostMatrix::SymmetricCostMatrix(int n, std::vector<double> entries)
    : n_(n), v_(std::move(entries)) {
  require(n >= 3, "symmetric cost matrix needs order >= 3");
  require(v_.size() == static_cast<std::size_t>(n) * n, "entry count != n*n");
  max_abs_ = 0.0;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const double x = cost(i, j);
      require(std::isfinite(x), "cost entry not finite");
      require(x >= 0.0, "cost entry negative");
      if (i == j) require(x == 0.0, "diagonal entry nonzero");
      require(x == cost(j, i), "matrix not symmetric");
      max_abs_ = std::max(max_abs_, std::abs(x));
    }
  }
}

SymmetricCostMatrix SymmetricCostMatrix::from(const RealMatrix& m) {
  return SymmetricCostMatrix(m.size(), m.data());
}

AsymmetricCostMatrix::AsymmetricCostMatrix(int n, std::vector<double> entries)
    : n_(n), v_(std::move(entries)) {
  require(n >= 1, "matrix order must be positive");
  require(v_.size() == static_cast<std::size_t>(n) * n, "entry count != n*n");
  max_finite_ = 0.0;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const double x = cost(i, j);
      if (i == j) {
        require(x == 0.0, "diagonal entry nonzero");
      } else {
        require(x >= 0.0 && !std::isnan(x), "off-diagonal entry must be >= 0 or inf");
      }
      if (std::isfinite(x)) max_finite_ = std::max(max_finite_, std::abs(x));
    }
  }
}

AsymmetricCostMatrix AsymmetricCostMatrix::from_symmetric(const SymmetricCostMatrix& m) {
  return AsymmetricCostMatrix(m.size(), m.data());
}

CheckResult check_kalmanson(const SymmetricCostMatrix& c, bool strict) {
  const int n = c.size();
  const double tol = tolerance_for(c);
  for (int i = 1; i <= n - 3; ++i) {
    for (int j = i + 1; j <= n - 2; ++j) {
      for (int l = j + 1; l <= n - 1; ++l) {
        for (int m = l + 1; m <= n; ++m) {
          const double rhs = c.cost(i, l) + c.cost(j, m);
          const double lhs1 = c.cost(i, j) + c.cost(l, m);
          const double lhs2 = c.cost(i, m) + c.cost(j, l);
          const bool ok1 = strict ? (lhs1 < rhs - tol) : (lhs1 <= rhs + tol);
          const bool ok2 = strict ? (lhs2 < rhs - tol) : (lhs2 <= rhs + tol);
          if (!ok1) return {false, KalmansonViolation{i, j, l, m, 1}};
          if (!ok2) return {false, KalmansonViolation{i, j, l, m, 2}};
        }
      }
    }
  }
  return {true, std::nullopt};
}

double alpha_value(const SymmetricCostMatrix& c, int i, int j) {
  return c.cost(i, j) + c.cost(i + 1, j + 1) - c.cost(i, j + 1) - c.cost(i + 1, j);
}

double beta_value(const SymmetricCostMatrix& c, int i) {
  const int n = c.size();
  return c.cost(i, n) + c.cost(i + 1, 1) - c.cost(i, 1) - c.cost(i + 1, n);
}

CheckResult check_kalmanson_adjacent(const SymmetricCostMatrix& c) {
  const int n = c.size();
  const double tol = tolerance_for(c);
  // Scan order mirrors the lexicographic witness of the quadruple checker:
  // beta(i) maps to quadruple (1,i,i+1,n), alpha(i,j) to (i,i+1,j,j+1).
  for (int i = 1; i <= n - 2; ++i) {
    if (i >= 2 && beta_value(c, i) < -tol)
      return {false, KalmansonViolation{1, i, i + 1, n, 1}};
    if (i <= n - 3) {
      for (int j = i + 2; j <= n - 1; ++j) {
        if (alpha_value(c, i, j) < -tol)
          return {false, KalmansonViolation{i, i + 1, j, j + 1, 2}};
      }
    }
  }
  return {true, std::nullopt};
}

CheckResult check_demidenko(const SymmetricCostMatrix& c) {
  const int n = c.size();
  const double tol = tolerance_for(c);
  for (int i = 1; i <= n - 3; ++i) {
    for (int j = i + 1; j <= n - 2; ++j) {
      for (int l = j + 1; l <= n - 1; ++l) {
        for (int m = l + 1; m <= n; ++m) {
          const double lhs = c.cost(i, j) + c.cost(l, m);
          const double rhs = c.cost(i, l) + c.cost(j, m);
          if (!(lhs <= rhs + tol)) return {false, KalmansonViolation{i, j, l, m, 1}};
        }
      }
    }
  }
  return {true, std::nullopt};
}

SymmetricCostMatrix permute(const SymmetricCostMatrix& c, const Permutation& sigma) {
  require(sigma.order() == c.size(), "permutation order != matrix order");
  const int n = c.size();
  std::vector<double> out(static_cast<std::size_t>(n) * n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      out[static_cast<std::size_t>(i - 1) * n + (j - 1)] = c.cost(sigma(i), sigma(j));
  return SymmetricCostMatrix(n, std::move(out));
}

RealMatrix zero_transform(const SymmetricCostMatrix& c) {
  const int n = c.size();
  RealMatrix out(n);
  for (int i = 2; i <= n; ++i)
    for (int j = 2; j <= n; ++j)
      if (i != j) out.at(i, j) = c.cost(i, j) - c.cost(i, 1) - c.cost(1, j);
  return out;
}

Permutation cyclic_shift(const Permutation& sigma, int k) {
  const int n = sigma.order();
  require(k >= 0 && k < n, "shift must satisfy 0 <= k < order");
  std::vector<int> out(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) out[static_cast<std::size_t>(i) - 1] = sigma(((i - 1 + k) % n) + 1);
  return Permutation(std::move(out));
}

}  // namespace tworoute
