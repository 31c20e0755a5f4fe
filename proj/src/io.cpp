#include "tworoute/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "tworoute/errors.hpp"

namespace tworoute {

namespace {

std::ifstream open_in(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw IoError("cannot open " + file.string() + " for reading");
  return in;
}

std::ofstream open_out(const std::filesystem::path& file) {
  std::ofstream out(file);
  if (!out) throw IoError("cannot open " + file.string() + " for writing");
  return out;
}

double parse_number(const std::string& tok, bool allow_inf) {
  if (tok == "inf" || tok == "+inf" || tok == "Inf" || tok == "INF") {
    if (!allow_inf) throw IoError("inf entry not allowed here");
    return kInf;
  }
  double v = 0.0;
  const auto* last = tok.data() + tok.size();
  const auto [p, ec] = std::from_chars(tok.data(), last, v);
  if (ec != std::errc() || p != last) throw IoError("bad number: '" + tok + "'");
  return v;
}

std::vector<double> read_entries(std::istream& in, int n, bool allow_inf) {
  std::vector<double> v;
  v.reserve(static_cast<std::size_t>(n) * n);
  std::string tok;
  for (int k = 0; k < n * n; ++k) {
    if (!(in >> tok)) throw IoError("matrix block truncated");
    v.push_back(parse_number(tok, allow_inf));
  }
  return v;
}

template <typename M>
void write_rows(std::ostream& out, const M& m) {
  out << m.size() << '\n';
  for (int i = 1; i <= m.size(); ++i) {
    for (int j = 1; j <= m.size(); ++j) out << (j > 1 ? " " : "") << format_number(m.cost(i, j));
    out << '\n';
  }
}

}  // namespace

std::string format_number(double v) {
  if (std::isinf(v)) return "inf";
  char buf[64];
  const auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, p);
}

void write_matrix(const std::filesystem::path& file, const SymmetricCostMatrix& m) {
  auto out = open_out(file);
  write_rows(out, m);
  if (!out) throw IoError("write failed: " + file.string());
}

SymmetricCostMatrix read_matrix(const std::filesystem::path& file) {
  auto in = open_in(file);
  int n = 0;
  if (!(in >> n) || n < 3) throw IoError("bad matrix header in " + file.string());
  try {
    return SymmetricCostMatrix(n, read_entries(in, n, false));
  } catch (const std::invalid_argument& e) {
    throw IoError(file.string() + ": " + e.what());
  }
}

void write_matrix_block(std::ostream& out, const AsymmetricCostMatrix& m) { write_rows(out, m); }

AsymmetricCostMatrix read_matrix_block(std::istream& in) {
  int n = 0;
  if (!(in >> n) || n < 1) throw IoError("bad matrix block header");
  try {
    return AsymmetricCostMatrix(n, read_entries(in, n, true));
  } catch (const std::invalid_argument& e) {
    throw IoError(std::string("matrix block: ") + e.what());
  }
}

void write_2tsp_bundle(const std::filesystem::path& base, const TwoTspBundle& bundle,
                       bool blind) {
  std::filesystem::path mfile = base;
  mfile += ".matrix";
  write_matrix(mfile, bundle.matrix);

  std::filesystem::path cfile = base;
  cfile += ".2tsp";
  auto out = open_out(cfile);
  out << "fixed:";
  for (int v : bundle.fixed) out << ' ' << v;
  out << '\n';
  if (!blind && bundle.optimum) out << "optimum: " << format_number(*bundle.optimum) << '\n';
  if (!blind && bundle.hidden_order) {
    out << "hidden_order:";
    for (int v : bundle.hidden_order->mapping()) out << ' ' << v;
    out << '\n';
  }
  if (!out) throw IoError("write failed: " + cfile.string());
}

TwoTspBundle read_2tsp_bundle(const std::filesystem::path& base) {
  TwoTspBundle bundle;
  std::filesystem::path mfile = base;
  mfile += ".matrix";
  bundle.matrix = read_matrix(mfile);

  std::filesystem::path cfile = base;
  cfile += ".2tsp";
  auto in = open_in(cfile);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) continue;
    if (key == "fixed:") {
      int v;
      while (ls >> v) bundle.fixed.push_back(v);
    } else if (key == "optimum:") {
      std::string tok;
      ls >> tok;
      bundle.optimum = parse_number(tok, false);
    } else if (key == "hidden_order:") {
      std::vector<int> m;
      int v;
      while (ls >> v) m.push_back(v);
      bundle.hidden_order = Permutation(std::move(m));
    } else {
      throw IoError(cfile.string() + ": unknown key '" + key + "'");
    }
  }
  if (bundle.fixed.empty()) throw IoError(cfile.string() + ": missing fixed set");
  return bundle;
}

void write_two_tour_solution(const std::filesystem::path& file, const TwoTourSolution& sol) {
  auto out = open_out(file);
  for (const auto* t : {&sol.tour1, &sol.tour2}) {
    for (std::size_t i = 0; i < t->size(); ++i) out << (i ? " " : "") << (*t)[i];
    out << '\n';
  }
  out << format_number(sol.total_length) << '\n';
  if (!out) throw IoError("write failed: " + file.string());
}

TwoTourSolution read_two_tour_solution(const std::filesystem::path& file) {
  auto in = open_in(file);
  TwoTourSolution sol;
  std::string line;
  for (auto* t : {&sol.tour1, &sol.tour2}) {
    if (!std::getline(in, line)) throw IoError(file.string() + ": truncated solution");
    std::istringstream ls(line);
    int v;
    while (ls >> v) t->push_back(v);
  }
  if (!std::getline(in, line)) throw IoError(file.string() + ": missing total");
  sol.total_length = parse_number(line, false);
  return sol;
}

void write_2vrp_instance(const std::filesystem::path& file, const TwoVrpInstance& inst) {
  auto out = open_out(file);
  out << inst.n() << ' ' << format_number(inst.capacity(1)) << ' '
      << format_number(inst.capacity(2)) << '\n';
  out << inst.depot_start(1) << ' ' << inst.depot_end(1) << ' ' << inst.depot_start(2) << ' '
      << inst.depot_end(2) << '\n';
  for (const Customer& c : inst.customers()) {
    out << c.left << ' ' << c.right << ' ' << format_number(c.forward[0]) << ' '
        << format_number(c.reverse[0]) << ' ' << format_number(c.forward[1]) << ' '
        << format_number(c.reverse[1]) << ' ' << format_number(c.demand) << ' '
        << static_cast<int>(c.fixed_to) << '\n';
  }
  write_matrix_block(out, inst.cost(1));
  write_matrix_block(out, inst.cost(2));
  if (!out) throw IoError("write failed: " + file.string());
}

TwoVrpInstance read_2vrp_instance(const std::filesystem::path& file) {
  auto in = open_in(file);
  int n = 0;
  std::string tok1, tok2;
  if (!(in >> n >> tok1 >> tok2) || n < 1) throw IoError(file.string() + ": bad header");
  const double w1 = parse_number(tok1, false), w2 = parse_number(tok2, false);
  int d1s, d1e, d2s, d2e;
  if (!(in >> d1s >> d1e >> d2s >> d2e)) throw IoError(file.string() + ": bad depot line");

  std::vector<Customer> customers(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    Customer& c = customers[static_cast<std::size_t>(i) - 1];
    c.id = i;
    std::string f1, r1, f2, r2, w;
    int fixed;
    if (!(in >> c.left >> c.right >> f1 >> r1 >> f2 >> r2 >> w >> fixed))
      throw IoError(file.string() + ": bad customer line " + std::to_string(i));
    c.forward = {parse_number(f1, true), parse_number(f2, true)};
    c.reverse = {parse_number(r1, true), parse_number(r2, true)};
    c.demand = parse_number(w, false);
    if (fixed < 0 || fixed > 2) throw IoError(file.string() + ": bad fixed flag");
    c.fixed_to = static_cast<FixedTo>(fixed);
  }
  AsymmetricCostMatrix c1 = read_matrix_block(in);
  AsymmetricCostMatrix c2 = read_matrix_block(in);
  try {
    return TwoVrpInstance(std::move(customers), d1s, d1e, d2s, d2e, w1, w2, std::move(c1),
                          std::move(c2));
  } catch (const std::invalid_argument& e) {
    throw IoError(file.string() + ": " + e.what());
  }
}

void write_2vrp_solution(const std::filesystem::path& file, const TwoVrpSolution& sol) {
  auto out = open_out(file);
  for (int vehicle = 1; vehicle <= 2; ++vehicle) {
    out << "route" << vehicle << ":";
    for (const RouteStop& s : (vehicle == 1 ? sol.route1 : sol.route2))
      out << ' ' << s.customer << (s.enter_left ? 'L' : 'R');
    out << '\n';
  }
  out << "cost: " << format_number(sol.cost) << '\n';
  out << "loads: " << format_number(sol.load1) << ' ' << format_number(sol.load2) << '\n';
  if (!out) throw IoError("write failed: " + file.string());
}

TwoVrpSolution read_2vrp_solution(const std::filesystem::path& file) {
  auto in = open_in(file);
  TwoVrpSolution sol;
  std::string line;
  for (auto* route : {&sol.route1, &sol.route2}) {
    if (!std::getline(in, line)) throw IoError(file.string() + ": truncated routes");
    std::istringstream ls(line);
    std::string key, stop;
    ls >> key;
    while (ls >> stop) {
      const char side = stop.back();
      if (side != 'L' && side != 'R') throw IoError(file.string() + ": bad stop '" + stop + "'");
      route->push_back(RouteStop{std::stoi(stop.substr(0, stop.size() - 1)), side == 'L'});
    }
  }
  std::string key, tok;
  if (!(in >> key >> tok) || key != "cost:") throw IoError(file.string() + ": missing cost");
  sol.cost = parse_number(tok, false);
  std::string l1, l2;
  if (!(in >> key >> l1 >> l2) || key != "loads:") throw IoError(file.string() + ": missing loads");
  sol.load1 = parse_number(l1, false);
  sol.load2 = parse_number(l2, false);
  return sol;
}

}  // namespace tworoute
