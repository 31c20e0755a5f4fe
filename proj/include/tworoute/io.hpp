#ifndef TWOROUTE_IO_HPP
#define TWOROUTE_IO_HPP

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "tworoute/matrix.hpp"
#include "tworoute/two_tsp.hpp"
#include "tworoute/two_vrp.hpp"

namespace tworoute {

/// Shortest decimal form that parses back to the identical double; "inf" for
/// the infinity sentinel.
std::string format_number(double v);

/// Matrix text format: first line n, then n lines of n whitespace-separated
/// numbers. The `inf` token is accepted only in asymmetric matrices.
void write_matrix(const std::filesystem::path& file, const SymmetricCostMatrix& m);
SymmetricCostMatrix read_matrix(const std::filesystem::path& file);

void write_matrix_block(std::ostream& out, const AsymmetricCostMatrix& m);
AsymmetricCostMatrix read_matrix_block(std::istream& in);

/// Two-period instance bundle: `<base>.matrix` holds the cost matrix,
/// `<base>.2tsp` the companion data. Blind bundles omit the optimum and the
/// hidden ordering.
struct TwoTspBundle {
  SymmetricCostMatrix matrix;
  std::vector<int> fixed;
  std::optional<double> optimum;
  std::optional<Permutation> hidden_order;

  TwoTspBundle() : matrix(3, std::vector<double>(9, 0.0)) {}
  TwoTspInstance instance(bool near_balanced = false) const {
    return TwoTspInstance(matrix, fixed, near_balanced);
  }
};

void write_2tsp_bundle(const std::filesystem::path& base, const TwoTspBundle& bundle,
                       bool blind = false);
TwoTspBundle read_2tsp_bundle(const std::filesystem::path& base);

/// Two-period solution: one line per tour (node labels, starting and ending
/// at 1), then the total length.
void write_two_tour_solution(const std::filesystem::path& file, const TwoTourSolution& sol);
TwoTourSolution read_two_tour_solution(const std::filesystem::path& file);

/// Two-vehicle instance, one file: a header line `n W1 W2`, a depot line,
/// n customer lines `left right l1_lr l1_rl l2_lr l2_rl demand fixed`, then
/// the two matrix blocks.
void write_2vrp_instance(const std::filesystem::path& file, const TwoVrpInstance& inst);
TwoVrpInstance read_2vrp_instance(const std::filesystem::path& file);

/// Two-vehicle solution: `route1:`/`route2:` lines of `<id>L|R` stops, then
/// `cost:` and `loads:` lines.
void write_2vrp_solution(const std::filesystem::path& file, const TwoVrpSolution& sol);
TwoVrpSolution read_2vrp_solution(const std::filesystem::path& file);

}  // namespace tworoute

#endif
