#ifndef TWOROUTE_MATRIX_HPP
#define TWOROUTE_MATRIX_HPP

#include <limits>
#include <optional>
#include <vector>

namespace tworoute {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Tolerance for the inequality checkers, relative to the largest entry
/// magnitude of the matrix under test.
inline constexpr double kCheckEps = 1e-9;

/// Bijection {1..n} -> {1..n}, read as position -> node label.
class Permutation {
 public:
  explicit Permutation(std::vector<int> mapping);
  static Permutation identity(int n);

  int order() const { return static_cast<int>(map_.size()); }
  int operator()(int pos) const { return map_[static_cast<std::size_t>(pos) - 1]; }
  const std::vector<int>& mapping() const { return map_; }
  Permutation inverse() const;

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> map_;
};

/// Dense square matrix of reals with no sign or symmetry constraints.
/// Entries are addressed with 1-based node labels like everything else here.
class RealMatrix {
 public:
  RealMatrix() : n_(0) {}
  explicit RealMatrix(int n, double fill = 0.0)
      : n_(n), v_(static_cast<std::size_t>(n) * n, fill) {}

  int size() const { return n_; }
  double& at(int i, int j) { return v_[idx(i, j)]; }
  double at(int i, int j) const { return v_[idx(i, j)]; }
  const std::vector<double>& data() const { return v_; }
  std::vector<double>& data() { return v_; }

 private:
  std::size_t idx(int i, int j) const {
    return static_cast<std::size_t>(i - 1) * n_ + (j - 1);
  }
  int n_;
  std::vector<double> v_;
};

/// Symmetric nonnegative cost matrix with zero diagonal, order >= 3.
class SymmetricCostMatrix {
 public:
  /// Row-major entries, n*n of them. Throws std::invalid_argument if the
  /// matrix is not symmetric, has a nonzero diagonal, or has a negative or
  /// non-finite entry.
  SymmetricCostMatrix(int n, std::vector<double> entries);
  static SymmetricCostMatrix from(const RealMatrix& m);

  int size() const { return n_; }
  double cost(int i, int j) const {
    return v_[static_cast<std::size_t>(i - 1) * n_ + (j - 1)];
  }
  double max_abs() const { return max_abs_; }
  const std::vector<double>& data() const { return v_; }
  const double* row(int i) const { return v_.data() + static_cast<std::size_t>(i - 1) * n_; }

 private:
  int n_;
  std::vector<double> v_;
  double max_abs_;
};

/// Square nonnegative cost matrix, zero diagonal, off-diagonal entries may be
/// the +infinity sentinel (forbidden arc). Infinity saturates under addition,
/// so it flows through the dynamic programs without special casing.
class AsymmetricCostMatrix {
 public:
  AsymmetricCostMatrix(int n, std::vector<double> entries);
  static AsymmetricCostMatrix from_symmetric(const SymmetricCostMatrix& m);

  int size() const { return n_; }
  double cost(int i, int j) const {
    return v_[static_cast<std::size_t>(i - 1) * n_ + (j - 1)];
  }
  const std::vector<double>& data() const { return v_; }
  const double* row(int i) const { return v_.data() + static_cast<std::size_t>(i - 1) * n_; }
  double max_finite() const { return max_finite_; }

 private:
  int n_;
  std::vector<double> v_;
  double max_finite_;
};

/// Violating quadruple i<j<l<m for the structure checkers. `condition` is 1
/// for c(i,j)+c(l,m) <= c(i,l)+c(j,m) and 2 for c(i,m)+c(j,l) <= c(i,l)+c(j,m).
struct KalmansonViolation {
  int i, j, l, m;
  int condition;
};

struct CheckResult {
  bool holds;
  std::optional<KalmansonViolation> witness;
};

/// Checks the quadruple conditions directly, O(n^4). With strict=true every
/// inequality must hold strictly (by more than the tolerance). n < 4 holds
/// vacuously. The witness is the lexicographically smallest violating
/// quadruple; if both conditions fail there, condition 1 is reported.
CheckResult check_kalmanson(const SymmetricCostMatrix& c, bool strict = false);

/// Equivalent adjacent-index characterisation, O(n^2): checks the alpha and
/// beta differences of consecutive rows/columns. Witnesses are mapped back to
/// the quadruple form ((i,i+1,j,j+1) condition 2 for an alpha violation,
/// (1,i,i+1,n) condition 1 for a beta violation).
CheckResult check_kalmanson_adjacent(const SymmetricCostMatrix& c);

CheckResult check_demidenko(const SymmetricCostMatrix& c);

/// result[i][j] = c[sigma(i)][sigma(j)].
SymmetricCostMatrix permute(const SymmetricCostMatrix& c, const Permutation& sigma);

/// c'[i][j] = c[i][j] - c[i][1] - c[1][j]; zeroes the first row and column.
/// Entries may go negative, hence the plain matrix return type.
RealMatrix zero_transform(const SymmetricCostMatrix& c);

/// result(i) = sigma(((i-1+k) mod order)+1), for 0 <= k < order.
Permutation cyclic_shift(const Permutation& sigma, int k);

/// alpha(i,j) = c(i,j)+c(i+1,j+1)-c(i,j+1)-c(i+1,j), defined for
/// 1 <= i <= n-3, i+2 <= j <= n-1.
double alpha_value(const SymmetricCostMatrix& c, int i, int j);

/// beta(i) = c(i,n)+c(i+1,1)-c(i,1)-c(i+1,n), defined for 2 <= i <= n-2.
double beta_value(const SymmetricCostMatrix& c, int i);

}  // namespace tworoute

#endif
