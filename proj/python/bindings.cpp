#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "tworoute/errors.hpp"
#include "tworoute/generator.hpp"
#include "tworoute/io.hpp"
#include "tworoute/knn.hpp"
#include "tworoute/matrix.hpp"
#include "tworoute/pyramidal.hpp"
#include "tworoute/sliding.hpp"
#include "tworoute/stats.hpp"
#include "tworoute/two_tsp.hpp"
#include "tworoute/two_vrp.hpp"

namespace py = pybind11;
using namespace tworoute;

namespace {

std::vector<double> flatten(const std::vector<std::vector<double>>& rows) {
  std::vector<double> flat;
  for (const auto& r : rows) flat.insert(flat.end(), r.begin(), r.end());
  return flat;
}

template <typename M>
std::vector<std::vector<double>> to_rows(const M& m) {
  std::vector<std::vector<double>> rows(static_cast<std::size_t>(m.size()));
  for (int i = 1; i <= m.size(); ++i) {
    rows[static_cast<std::size_t>(i) - 1].resize(static_cast<std::size_t>(m.size()));
    for (int j = 1; j <= m.size(); ++j)
      rows[static_cast<std::size_t>(i) - 1][static_cast<std::size_t>(j) - 1] = m.cost(i, j);
  }
  return rows;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "two-vehicle routing toolkit: solvable-case generators, exact dynamic "
            "programs and the sliding-subset heuristic";

  py::register_exception<InfeasibleError>(m, "InfeasibleError");
  py::register_exception<GuardError>(m, "GuardError");
  py::register_exception<IoError>(m, "IoError");

  py::class_<Permutation>(m, "Permutation")
      .def(py::init<std::vector<int>>())
      .def_static("identity", &Permutation::identity)
      .def("__call__", &Permutation::operator())
      .def("inverse", &Permutation::inverse)
      .def_property_readonly("mapping", &Permutation::mapping)
      .def("__len__", &Permutation::order)
      .def("__eq__", [](const Permutation& a, const Permutation& b) { return a == b; });

  py::class_<SymmetricCostMatrix>(m, "SymmetricCostMatrix")
      .def(py::init([](const std::vector<std::vector<double>>& rows) {
             return SymmetricCostMatrix(static_cast<int>(rows.size()), flatten(rows));
           }),
           py::arg("rows"))
      .def("cost", &SymmetricCostMatrix::cost)
      .def_property_readonly("n", &SymmetricCostMatrix::size)
      .def("rows", [](const SymmetricCostMatrix& m_) { return to_rows(m_); });

  py::class_<AsymmetricCostMatrix>(m, "AsymmetricCostMatrix")
      .def(py::init([](const std::vector<std::vector<double>>& rows) {
             return AsymmetricCostMatrix(static_cast<int>(rows.size()), flatten(rows));
           }),
           py::arg("rows"))
      .def_static("from_symmetric", &AsymmetricCostMatrix::from_symmetric)
      .def("cost", &AsymmetricCostMatrix::cost)
      .def_property_readonly("n", &AsymmetricCostMatrix::size)
      .def("rows", [](const AsymmetricCostMatrix& m_) { return to_rows(m_); });

  py::class_<KalmansonViolation>(m, "KalmansonViolation")
      .def_readonly("i", &KalmansonViolation::i)
      .def_readonly("j", &KalmansonViolation::j)
      .def_readonly("l", &KalmansonViolation::l)
      .def_readonly("m", &KalmansonViolation::m)
      .def_readonly("condition", &KalmansonViolation::condition);

  py::class_<CheckResult>(m, "CheckResult")
      .def_readonly("holds", &CheckResult::holds)
      .def_readonly("witness", &CheckResult::witness)
      .def("__bool__", [](const CheckResult& r) { return r.holds; });

  m.def("check_kalmanson", &check_kalmanson, py::arg("matrix"), py::arg("strict") = false);
  m.def("check_kalmanson_adjacent", &check_kalmanson_adjacent);
  m.def("check_demidenko", &check_demidenko);
  m.def("permute", &permute);
  m.def("zero_transform", [](const SymmetricCostMatrix& c) {
    const RealMatrix zt = zero_transform(c);
    std::vector<std::vector<double>> rows(static_cast<std::size_t>(zt.size()));
    for (int i = 1; i <= zt.size(); ++i) {
      rows[static_cast<std::size_t>(i) - 1].resize(static_cast<std::size_t>(zt.size()));
      for (int j = 1; j <= zt.size(); ++j)
        rows[static_cast<std::size_t>(i) - 1][static_cast<std::size_t>(j) - 1] = zt.at(i, j);
    }
    return rows;
  });
  m.def("cyclic_shift", &cyclic_shift);

  py::class_<GeneratorParams>(m, "GeneratorParams")
      .def(py::init<>())
      .def_readwrite("n", &GeneratorParams::n)
      .def_readwrite("lo", &GeneratorParams::lo)
      .def_readwrite("hi", &GeneratorParams::hi)
      .def_readwrite("seed", &GeneratorParams::seed)
      .def_readwrite("permute_output", &GeneratorParams::permute_output)
      .def_readwrite("strong", &GeneratorParams::strong);

  py::class_<GeneratedInstance>(m, "GeneratedInstance")
      .def_readonly("matrix", &GeneratedInstance::matrix)
      .def_readonly("hidden_order", &GeneratedInstance::hidden_order)
      .def_readonly("alphas", &GeneratedInstance::alphas)
      .def_readonly("betas", &GeneratedInstance::betas);

  m.def("generate_kalmanson", &generate_kalmanson);

  py::class_<TwoTspInstance>(m, "TwoTspInstance")
      .def(py::init<SymmetricCostMatrix, std::vector<int>, bool>(), py::arg("matrix"),
           py::arg("fixed"), py::arg("near_balanced") = false)
      .def_property_readonly("matrix", &TwoTspInstance::matrix)
      .def_property_readonly("fixed", &TwoTspInstance::fixed)
      .def_property_readonly("n", &TwoTspInstance::n)
      .def_property_readonly("p", &TwoTspInstance::p);

  py::class_<Generated2Tsp>(m, "Generated2Tsp")
      .def_readonly("instance", &Generated2Tsp::instance)
      .def_readonly("known_optimum", &Generated2Tsp::known_optimum)
      .def_readonly("source", &Generated2Tsp::source);

  m.def("generate_2tsp_instance", &generate_2tsp_instance, py::arg("params"),
        py::arg("fixed_count"), py::arg("allow_odd") = false);

  py::class_<TwoTourSolution>(m, "TwoTourSolution")
      .def(py::init<>())
      .def_readwrite("tour1", &TwoTourSolution::tour1)
      .def_readwrite("tour2", &TwoTourSolution::tour2)
      .def_readwrite("total_length", &TwoTourSolution::total_length);

  py::class_<EvalReport>(m, "EvalReport")
      .def_readonly("feasible", &EvalReport::feasible)
      .def_readonly("total", &EvalReport::total)
      .def_readonly("violations", &EvalReport::violations);

  m.def("solve_balanced_2tsp", &solve_balanced_2tsp);
  m.def("solve_balanced_2tsp_lowmem", &solve_balanced_2tsp_lowmem, py::arg("instance"),
        py::arg("reconstruct") = false);
  m.def("oracle_2tsp", &oracle_2tsp);
  m.def("evaluate_solution", &evaluate_solution);

  py::class_<Tour>(m, "Tour")
      .def_readonly("nodes", &Tour::nodes)
      .def_readonly("length", &Tour::length);

  m.def("optimal_pyramidal", &optimal_pyramidal);
  m.def("belperm", &belperm);

  py::class_<KnnResult>(m, "KnnResult")
      .def_readonly("tour", &KnnResult::tour)
      .def_readonly("used_start", &KnnResult::used_start);

  m.def("knn", &knn);
  m.def("ks_heuristic", &ks_heuristic);
  m.def("ks_single_start", &ks_single_start);

  py::enum_<FixedTo>(m, "FixedTo")
      .value("none", FixedTo::none)
      .value("vehicle1", FixedTo::vehicle1)
      .value("vehicle2", FixedTo::vehicle2);

  py::class_<Customer>(m, "Customer")
      .def(py::init<>())
      .def_readwrite("id", &Customer::id)
      .def_readwrite("left", &Customer::left)
      .def_readwrite("right", &Customer::right)
      .def_readwrite("forward", &Customer::forward)
      .def_readwrite("reverse", &Customer::reverse)
      .def_readwrite("demand", &Customer::demand)
      .def_readwrite("fixed_to", &Customer::fixed_to);

  py::class_<TwoVrpInstance>(m, "TwoVrpInstance")
      .def(py::init<std::vector<Customer>, int, int, int, int, double, double,
                    AsymmetricCostMatrix, AsymmetricCostMatrix>(),
           py::arg("customers"), py::arg("depot1_start"), py::arg("depot1_end"),
           py::arg("depot2_start"), py::arg("depot2_end"), py::arg("capacity1"),
           py::arg("capacity2"), py::arg("cost1"), py::arg("cost2"))
      .def_property_readonly("n", &TwoVrpInstance::n)
      .def_property_readonly("customers", &TwoVrpInstance::customers)
      .def("capacity", &TwoVrpInstance::capacity)
      .def("depot_start", &TwoVrpInstance::depot_start)
      .def("depot_end", &TwoVrpInstance::depot_end)
      .def("cost", &TwoVrpInstance::cost);

  py::class_<RouteStop>(m, "RouteStop")
      .def(py::init<>())
      .def_readwrite("customer", &RouteStop::customer)
      .def_readwrite("enter_left", &RouteStop::enter_left);

  py::class_<TwoVrpSolution>(m, "TwoVrpSolution")
      .def(py::init<>())
      .def_readwrite("route1", &TwoVrpSolution::route1)
      .def_readwrite("route2", &TwoVrpSolution::route2)
      .def_readwrite("cost", &TwoVrpSolution::cost)
      .def_readwrite("load1", &TwoVrpSolution::load1)
      .def_readwrite("load2", &TwoVrpSolution::load2);

  py::class_<VrpSolveOptions>(m, "VrpSolveOptions")
      .def(py::init<>())
      .def_readwrite("max_subset_bits", &VrpSolveOptions::max_subset_bits)
      .def_readwrite("allow_empty_vehicle1", &VrpSolveOptions::allow_empty_vehicle1);

  py::class_<Vrp2EvalReport>(m, "Vrp2EvalReport")
      .def_readonly("feasible", &Vrp2EvalReport::feasible)
      .def_readonly("cost", &Vrp2EvalReport::cost)
      .def_readonly("violations", &Vrp2EvalReport::violations);

  m.def("solve_2vrp_exact", &solve_2vrp_exact, py::arg("instance"),
        py::arg("options") = VrpSolveOptions{});
  m.def("oracle_2vrp", &oracle_2vrp, py::arg("instance"), py::arg("options") = VrpSolveOptions{});
  m.def("map_2tsp_to_2vrp", &map_2tsp_to_2vrp);
  m.def("lift_two_tour_solution", &lift_two_tour_solution);
  m.def("evaluate_2vrp", &evaluate_2vrp);
  m.def("route_cost", &route_cost);

  py::class_<RandomVrpParams>(m, "RandomVrpParams")
      .def(py::init<>())
      .def_readwrite("n", &RandomVrpParams::n)
      .def_readwrite("cost_lo", &RandomVrpParams::cost_lo)
      .def_readwrite("cost_hi", &RandomVrpParams::cost_hi)
      .def_readwrite("demand_lo", &RandomVrpParams::demand_lo)
      .def_readwrite("demand_hi", &RandomVrpParams::demand_hi)
      .def_readwrite("fixed_fraction", &RandomVrpParams::fixed_fraction)
      .def_readwrite("one_way_fraction", &RandomVrpParams::one_way_fraction)
      .def_readwrite("slack", &RandomVrpParams::slack);

  m.def("random_2vrp_instance", &random_2vrp_instance, py::arg("seed"),
        py::arg("params") = RandomVrpParams{});

  py::class_<SlidingParams>(m, "SlidingParams")
      .def(py::init<int, int>(), py::arg("s") = 3, py::arg("step") = 1)
      .def_readwrite("s", &SlidingParams::s)
      .def_readwrite("step", &SlidingParams::step)
      .def_property_readonly("target_size", &SlidingParams::target_size);

  m.def("aggregate_subpath", [](const TwoVrpInstance& inst, const std::vector<RouteStop>& path) {
    return aggregate_subpath(inst, path);
  });
  m.def("sliding_subset_search", &sliding_subset_search, py::arg("instance"),
        py::arg("incumbent"), py::arg("params"), py::arg("solver_options") = VrpSolveOptions{});
  m.def("polish_routes", &polish_routes);
  m.def("random_feasible_solution", &random_feasible_solution);

  py::enum_<StartGenerator>(m, "StartGenerator")
      .value("ksh", StartGenerator::ksh)
      .value("rndh", StartGenerator::rndh);

  py::class_<HeuristicLogRow>(m, "HeuristicLogRow")
      .def_readonly("repetition", &HeuristicLogRow::repetition)
      .def_readonly("pass_index", &HeuristicLogRow::pass)
      .def_readonly("best_cost", &HeuristicLogRow::best_cost)
      .def_readonly("elapsed_ms", &HeuristicLogRow::elapsed_ms);

  py::class_<HeuristicOptions>(m, "HeuristicOptions")
      .def(py::init<>())
      .def_readwrite("solver", &HeuristicOptions::solver)
      .def_readwrite("stop_at", &HeuristicOptions::stop_at)
      .def_readwrite("time_budget_ms", &HeuristicOptions::time_budget_ms)
      .def_readwrite("validate", &HeuristicOptions::validate);

  py::class_<HeuristicResult>(m, "HeuristicResult")
      .def_readonly("best", &HeuristicResult::best)
      .def_readonly("log", &HeuristicResult::log)
      .def_readonly("validated_steps", &HeuristicResult::validated_steps);

  m.def(
      "two_vrp_heuristic",
      [](const TwoVrpInstance& inst, const SlidingParams& params, StartGenerator gen,
         int repetitions, std::uint64_t seed, const TwoTspInstance* source,
         const HeuristicOptions& opts) {
        return two_vrp_heuristic(inst, params, gen, repetitions, seed, source, opts);
      },
      py::arg("instance"), py::arg("params"), py::arg("generator"), py::arg("repetitions"),
      py::arg("seed"), py::arg("source_2tsp") = nullptr,
      py::arg("options") = HeuristicOptions{});

  m.def("gap_percent", &gap_percent);
  py::class_<BoxStats>(m, "BoxStats")
      .def_readonly("mean", &BoxStats::mean)
      .def_readonly("median", &BoxStats::median)
      .def_readonly("q1", &BoxStats::q1)
      .def_readonly("q3", &BoxStats::q3)
      .def_readonly("whisker_lo", &BoxStats::whisker_lo)
      .def_readonly("whisker_hi", &BoxStats::whisker_hi)
      .def_readonly("count_optimal", &BoxStats::count_optimal)
      .def_readonly("count", &BoxStats::count);
  m.def("box_stats", [](const std::vector<double>& gaps) { return box_stats(gaps); });

  // File formats.
  m.def("write_matrix", &write_matrix);
  m.def("read_matrix", &read_matrix);
  m.def("write_2vrp_instance", &write_2vrp_instance);
  m.def("read_2vrp_instance", &read_2vrp_instance);
  m.def("write_two_tour_solution", &write_two_tour_solution);
  m.def("read_two_tour_solution", &read_two_tour_solution);
  m.def("write_2vrp_solution", &write_2vrp_solution);
  m.def("read_2vrp_solution", &read_2vrp_solution);
}
