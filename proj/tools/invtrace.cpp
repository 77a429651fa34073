// Command-line front end: root data, corner tables, derivation matrices,
// certified extrema, closed-form tables and the SU(2) asymptotics.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "invtrace/branch.hpp"
#include "invtrace/closedform.hpp"
#include "invtrace/compactcert.hpp"
#include "invtrace/errors.hpp"
#include "invtrace/su2asym.hpp"

using namespace invtrace;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitUndecided = 3;
constexpr int kExitUsage = 4;

struct Config {
  std::string type;
  int rank = 0;
  std::string format = "text";
  std::string cache_dir;
  int precision = 6;
  int rank_cap = 6;
  std::uint64_t orbit_cap = kDefaultOrbitCap;
  std::size_t pair_cap = 500000;
  bool long_running = false;

  std::string objective = "adjoint";
  bool certify_all = false;
  std::string rep = "adjoint";
  std::string polynomial_file;
  std::vector<std::string> pins;
  std::string family = "simple";
  int max_rank = 8;
  int degree = 0;
  int max_degree = 50;
  std::string s_arg, t_arg;
  long long scale = 1;
};

DatumPtr datum_of(const Config& c) {
  if (c.type.empty()) throw InvalidInput("--type is required (for example --type G2)");
  std::string name = c.type;
  if (c.rank > 0) name = std::string(1, c.type[0]) + std::to_string(c.rank);
  return build_root_datum(name);
}

InvderOptions invder_options(const Config& c) {
  InvderOptions o;
  o.scale = c.scale;
  o.cache_dir = c.cache_dir;
  o.rank_cap = c.rank_cap;
  o.long_running = c.long_running;
  return o;
}

// Table rendering shared by the text/csv/json formats.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  void print(const std::string& format, std::ostream& out) const {
    if (format == "csv") {
      auto line = [&](const std::vector<std::string>& r) {
        for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "," : "") << r[i];
        out << "\n";
      };
      line(header);
      for (const auto& r : rows) line(r);
    } else if (format == "json") {
      Json arr = Json::array();
      for (const auto& r : rows) {
        Json o;
        for (std::size_t i = 0; i < r.size(); ++i) o[header[i]] = r[i];
        arr.push_back(o);
      }
      out << arr.dump(2) << "\n";
    } else {
      std::vector<std::size_t> w(header.size());
      for (std::size_t i = 0; i < header.size(); ++i) w[i] = header[i].size();
      for (const auto& r : rows)
        for (std::size_t i = 0; i < r.size(); ++i) w[i] = std::max(w[i], r[i].size());
      auto line = [&](const std::vector<std::string>& r) {
        for (std::size_t i = 0; i < r.size(); ++i) {
          out << (i ? "  " : "");
          out << std::string(w[i] - r[i].size(), ' ') << r[i];
        }
        out << "\n";
      };
      line(header);
      for (const auto& r : rows) line(r);
    }
  }
};

std::string str(const Z& z) { return z.get_str(); }

std::string cyclotomic_text(const Cyclotomic& c, int digits) {
  if (c.is_rational()) return c.rational().get_str();
  auto z = c.to_complex();
  std::ostringstream s;
  s.precision(digits);
  s << std::fixed << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
  return s.str();
}

Polynomial objective_of(const Config& c, const DatumPtr& d) {
  const std::string& o = c.objective;
  if (o == "adjoint") return to_fundamental_polynomial(adjoint_character(d));
  if (o == "short-root") {
    if (d->simply_laced()) throw InvalidInput("short-root objective needs two root lengths");
    return to_fundamental_polynomial(irreducible_character(d, d->highest_short_root()));
  }
  bool digits = !o.empty() && o.find_first_not_of("0123456789") == std::string::npos;
  if (digits) {
    int i = std::stoi(o);
    if (i < 1 || i > d->rank()) throw InvalidInput("objective index out of range 1.." + std::to_string(d->rank()));
    return Polynomial::variable(d->rank(), i - 1);
  }
  return parse_polynomial(o, d->rank(), "f");
}

int cmd_datum(const Config& c) {
  auto d = datum_of(c);
  if (c.format == "json") {
    Json j = Json::parse(d->to_json());
    j["dimension"] = d->dimension();
    j["weyl_order"] = d->weyl_order();
    std::cout << j.dump(2) << "\n";
    return kExitOk;
  }
  std::cout << "type " << d->name() << "\n"
            << "dimension " << d->dimension() << "\n"
            << "positive roots " << d->positive_roots().size() << "\n"
            << "weyl order " << d->weyl_order() << "\n"
            << "|P/Q| " << d->fundamental_group_order() << "\n"
            << "cartan";
  for (const auto& row : d->cartan()) {
    std::cout << " [";
    for (std::size_t j = 0; j < row.size(); ++j) std::cout << (j ? " " : "") << row[j];
    std::cout << "]";
  }
  std::cout << "\nform A";
  for (const auto& row : d->form_A()) {
    std::cout << " [";
    for (std::size_t j = 0; j < row.size(); ++j) std::cout << (j ? " " : "") << row[j];
    std::cout << "]";
  }
  std::cout << "\n-w0";
  for (int i : d->minus_w0()) std::cout << " " << i + 1;
  std::cout << "\n";
  return kExitOk;
}

int cmd_corners(const Config& c) {
  auto d = datum_of(c);
  auto cs = corners(d, std::nullopt, c.orbit_cap);
  Table t;
  t.header = {"corner", "kac"};
  for (int i = 1; i <= d->rank(); ++i) t.header.push_back("f" + std::to_string(i));
  for (const auto& k : cs) {
    std::string kac;
    for (int x : k.kac) kac += std::to_string(x);
    std::vector<std::string> row{std::to_string(k.index), kac};
    for (const auto& v : k.values) row.push_back(v ? cyclotomic_text(*v, c.precision) : "");
    t.rows.push_back(std::move(row));
  }
  t.print(c.format, std::cout);
  return kExitOk;
}

int cmd_matrix(const Config& c) {
  auto d = datum_of(c);
  auto dm = derivation_matrix(d, invder_options(c));
  if (c.format == "json") {
    Json j = dm.to_json();
    j["cache_hit"] = dm.cache_hit;
    std::cout << j.dump(1) << "\n";
    return kExitOk;
  }
  if (c.format == "csv") {
    Table t;
    t.header = {"i", "j", "M"};
    for (int i = 0; i < dm.rank(); ++i)
      for (int j = i; j < dm.rank(); ++j)
        t.rows.push_back({std::to_string(i + 1), std::to_string(j + 1), dm.M[i][j].to_string("f")});
    t.print(c.format, std::cout);
  } else {
    std::cout << d->name() << " derivation matrix (upper triangle)\n";
    for (int i = 0; i < dm.rank(); ++i)
      for (int j = i; j < dm.rank(); ++j)
        std::cout << "M" << i + 1 << j + 1 << " = " << dm.M[i][j].to_string("f") << "\n";
  }
  std::cerr << "cache " << (dm.cache_hit ? "hit" : "miss") << "\n";
  return kExitOk;
}

int cmd_extremum(const Config& c, bool maximize) {
  auto d = datum_of(c);
  ExtremumOptions o;
  o.invder = invder_options(c);
  o.solve.groebner.pair_cap = c.pair_cap;
  o.orbit_cap = c.orbit_cap;
  o.certify_all = c.certify_all;
  auto rep = extremum(d, objective_of(c, d), o);
  if (c.format == "json") {
    std::cout << rep.to_json(c.precision).dump(2) << "\n";
    return kExitOk;
  }
  if (c.format == "csv") {
    Extremum& e = maximize ? rep.maximum : rep.minimum;
    std::cout << "kind,value,witness_kind,witness\n"
              << (maximize ? "max" : "min") << "," << e.value.decimal(c.precision) << ","
              << (e.witness.corner ? "corner" : "critical") << ",\""
              << rep.witness_coordinates(e.witness, c.precision) << "\"\n";
    return kExitOk;
  }
  std::string text = rep.to_text(c.precision);
  // Put the requested extremum last so it is the summary line.
  std::istringstream in(text);
  std::string line, min_line, max_line, body;
  while (std::getline(in, line)) {
    if (line.rfind("min = ", 0) == 0) min_line = line;
    else if (line.rfind("max = ", 0) == 0) max_line = line;
    else body += line + "\n";
  }
  std::cout << body << (maximize ? min_line : max_line) << "\n" << (maximize ? max_line : min_line) << "\n";
  return kExitOk;
}

int cmd_branch(const Config& c) {
  BranchProblem p;
  if (!c.polynomial_file.empty()) {
    std::ifstream in(c.polynomial_file);
    if (!in) throw InvalidInput("cannot read " + c.polynomial_file);
    p.f = polynomial_from_json(Json::parse(in));
  } else {
    auto d = datum_of(c);
    CharacterElement ch = c.rep == "short-root" ? irreducible_character(d, d->highest_short_root())
                                                : adjoint_character(d);
    if (c.rep != "adjoint" && c.rep != "short-root") throw InvalidInput("--rep must be adjoint or short-root");
    p.f = restrict_to_A1n(ch, orthogonal_roots(*d), c.orbit_cap);
  }
  for (const auto& pin : c.pins) {
    auto eq = pin.find('=');
    if (eq == std::string::npos) throw InvalidInput("pins look like 3=-2");
    p.pins[std::stoi(pin.substr(0, eq)) - 1] = std::stoi(pin.substr(eq + 1));
  }
  SolveOptions so;
  so.groebner.pair_cap = c.pair_cap;
  auto r = branch_minimize(p, so);
  std::vector<std::string> w;
  for (auto& x : r.witness) w.push_back(x.is_exact() ? x.lo().get_str() : x.decimal(c.precision));
  std::string min = r.minimum.is_exact() ? r.minimum.lo().get_str() : r.minimum.decimal(c.precision);
  if (c.format == "json") {
    Json j;
    j["schema"] = "invtrace.branch/1";
    j["polynomial"] = p.f.to_string("t");
    j["minimum"] = algebraic_real_to_json(r.minimum, c.precision);
    Json wj = Json::array();
    for (auto& x : r.witness) wj.push_back(algebraic_real_to_json(x, c.precision));
    j["witness"] = wj;
    j["critical_points"] = r.critical_points;
    j["in_box"] = r.in_box;
    std::cout << j.dump(2) << "\n";
    return kExitOk;
  }
  Table t{{"polynomial", "min", "witness"}, {}};
  std::string ws;
  for (std::size_t i = 0; i < w.size(); ++i) ws += (i ? " " : "") + w[i];
  t.rows.push_back({p.f.to_string("t"), min, ws});
  t.print(c.format, std::cout);
  return kExitOk;
}

int cmd_table(const Config& c) {
  Table t;
  if (c.family == "simple" || c.family == "outer") {
    t.header = {"type", "rank", "s", "min", "max", "provenance"};
    for (char ty : std::string("ABCDEFG"))
      for (int r = 1; r <= c.max_rank; ++r) {
        std::vector<int> orders;
        try {
          orders = outer_orders(ty, r);
        } catch (const InvalidInput&) {
          continue;
        }
        for (int s : orders) {
          if (c.family == "outer" && s == 1) continue;
          BoundEntry e = c.family == "outer" ? outer_reduction(ty, r, s) : trace_bounds(ty, r, s);
          t.rows.push_back({std::string(1, ty), std::to_string(r), std::to_string(s), str(e.min),
                            str(e.max), to_string(e.provenance)});
        }
      }
  } else if (c.family == "short-root") {
    t.header = {"type", "rank", "min", "dim"};
    for (char ty : std::string("BCFG"))
      for (int r = 1; r <= c.max_rank; ++r) {
        try {
          auto e = short_root_min(ty, r);
          t.rows.push_back({std::string(1, ty), std::to_string(r), str(e.min), str(e.dim)});
        } catch (const InvalidInput&) {
        }
      }
  } else {
    throw InvalidInput("--family must be simple, outer or short-root");
  }
  t.print(c.format, std::cout);
  return kExitOk;
}

int cmd_su2(const Config& c) {
  Table t{{"d", "min", "min_over_dim"}, {}};
  int lo = c.degree > 0 ? c.degree : 1, hi = c.degree > 0 ? c.degree : c.max_degree;
  for (int d = lo; d <= hi; ++d) {
    auto m = su2_min(d);
    std::string exact = m.value.is_exact() ? m.value.lo().get_str() : m.value.decimal(c.precision);
    AlgebraicReal ratio = m.value;
    double r = ratio.approx() / (d + 1);
    std::ostringstream rs;
    rs.precision(c.precision);
    rs << std::fixed << r;
    t.rows.push_back({std::to_string(d), exact, rs.str()});
  }
  auto lc = limit_constant();
  t.print(c.format, std::cout);
  if (c.format == "text") std::cout << "c = " << lc.c << "  theta0 = " << lc.theta0 << "\n";
  return kExitOk;
}

ComplexVector parse_complex_list(const std::string& s) {
  ComplexVector out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove(item.begin(), item.end(), ' '), item.end());
    if (item.empty()) throw InvalidInput("empty coordinate in " + s);
    double re = 0, im = 0;
    if (item.back() == 'i') {
      std::string body = item.substr(0, item.size() - 1);
      std::size_t split = body.find_last_of("+-");
      while (split != std::string::npos && split > 0 && (body[split - 1] == 'e' || body[split - 1] == 'E'))
        split = body.find_last_of("+-", split - 1);
      if (split == std::string::npos || split == 0) {
        im = body.empty() || body == "+" ? 1 : body == "-" ? -1 : std::stod(body);
      } else {
        re = std::stod(body.substr(0, split));
        std::string ip = body.substr(split);
        im = ip == "+" ? 1 : ip == "-" ? -1 : std::stod(ip);
      }
    } else {
      re = std::stod(item);
    }
    out.emplace_back(re, im);
  }
  return out;
}

int cmd_xfun(const Config& c) {
  auto d = datum_of(c);
  auto x = eval_X(*d, parse_complex_list(c.s_arg), parse_complex_list(c.t_arg));
  std::ostringstream re, im, err;
  re.precision(12);
  im.precision(12);
  re << x.value.real();
  im << x.value.imag();
  err << x.error;
  Table t{{"re", "im", "method", "error"}, {{re.str(), im.str(), to_string(x.method), err.str()}}};
  t.print(c.format, std::cout);
  return kExitOk;
}

int cmd_selfcheck(const Config& c) {
  int failures = 0;
  auto check = [&](const std::string& name, bool ok) {
    std::cout << (ok ? "ok   " : "FAIL ") << name << "\n";
    failures += !ok;
  };
  auto g2 = build_root_datum("G2");
  InvderOptions io = invder_options(c);
  auto dm = derivation_matrix(g2, io);
  check("G2 M symmetric", dm.M[0][1] == dm.M[1][0]);
  auto cs = corners(g2);
  check("G2 corner count", cs.size() == 3);
  auto ext = extremum(g2, Polynomial::variable(2, 1));
  check("G2 min Tr Ad = -2", AlgebraicReal::compare(ext.minimum.value, Q(-2)) == 0);
  check("G2 weyl_min_trace", weyl_min_trace(*g2) == -2);
  auto a1 = build_root_datum("A1");
  auto m1 = derivation_matrix(a1, io);
  auto inside = AlgebraicPoint::rational({Q(1)}), outside = AlgebraicPoint::rational({Q(3)});
  check("A1 compact at t=1", is_compact_point(m1.sigma_matrix(), inside));
  check("A1 not compact at t=3", !is_compact_point(m1.sigma_matrix(), outside));
  check("closed form E6 s=2", trace_bounds('E', 6, 2).min == -6 && outer_reduction('E', 6, 2).max == 26);
  auto lc = limit_constant();
  check("limit constant", std::abs(lc.c - 0.2172) < 1e-4);
  return failures ? kExitError : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact extrema of characters on compact simple Lie groups"};
  app.require_subcommand(1);
  Config c;
  if (const char* env = std::getenv("INVTRACE_CACHE_DIR")) c.cache_dir = env;

  auto common = [&](CLI::App* sub, bool needs_type) {
    auto* opt = sub->add_option("--type", c.type, "Type, e.g. G2 or F4 (or a letter with --rank)");
    if (needs_type) opt->required();
    sub->add_option("--rank", c.rank, "Rank when --type is a single letter")->check(CLI::PositiveNumber);
    sub->add_option("--format", c.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_option("--cache-dir", c.cache_dir, "Derivation matrix cache (default $INVTRACE_CACHE_DIR)");
    sub->add_option("--precision", c.precision, "Decimal digits")->check(CLI::Range(1, 1000));
    sub->add_option("--rank-cap", c.rank_cap, "Largest rank without --long-running")->check(CLI::PositiveNumber);
    sub->add_option("--orbit-cap", c.orbit_cap, "Largest orbit expansion")->check(CLI::PositiveNumber);
    sub->add_option("--pair-cap", c.pair_cap, "Groebner S-pair budget")->check(CLI::PositiveNumber);
    sub->add_flag("--long-running", c.long_running, "Allow computations above the rank cap");
    sub->add_option("--scale", c.scale, "Replace A by scale * A")->check(CLI::PositiveNumber);
  };

  auto* datum = app.add_subcommand("datum", "Root datum summary");
  common(datum, true);
  auto* corners_cmd = app.add_subcommand("corners", "Fundamental characters on the corners");
  common(corners_cmd, true);
  auto* matrix = app.add_subcommand("matrix", "Derivation matrix M");
  common(matrix, true);
  auto* minimize = app.add_subcommand("minimize", "Certified minimum of an objective");
  auto* maximize = app.add_subcommand("maximize", "Certified maximum of an objective");
  for (auto* sub : {minimize, maximize}) {
    common(sub, true);
    sub->add_option("--objective", c.objective,
                    "adjoint, short-root, an index i for f_i, or a polynomial like 2*f1+f2");
    sub->add_flag("--certify-all", c.certify_all, "Certify critical points outside the window too");
  }
  auto* branch = app.add_subcommand("branch-minimize", "Minimize a restriction to A1^n");
  common(branch, false);
  branch->add_option("--rep", c.rep, "adjoint or short-root");
  branch->add_option("--polynomial-file", c.polynomial_file, "Polynomial in t_i as canonical JSON");
  branch->add_option("--pin", c.pins, "Pin t_i, e.g. --pin 1=2");
  auto* table = app.add_subcommand("table", "Closed-form trace bounds");
  common(table, false);
  table->add_option("--family", c.family, "simple, outer or short-root");
  table->add_option("--max-rank", c.max_rank, "Largest rank listed")->check(CLI::PositiveNumber);
  auto* su2 = app.add_subcommand("su2", "Minima of SU(2) characters");
  common(su2, false);
  su2->add_option("--degree", c.degree, "Single degree d")->check(CLI::PositiveNumber);
  su2->add_option("--max-degree", c.max_degree, "Degrees 1..max")->check(CLI::PositiveNumber);
  auto* xfun = app.add_subcommand("xfun", "Evaluate X(s, t)");
  common(xfun, true);
  xfun->add_option("--s", c.s_arg, "Comma-separated complex coordinates")->required();
  xfun->add_option("--t", c.t_arg, "Comma-separated complex coordinates")->required();
  auto* selfcheck = app.add_subcommand("selfcheck", "Quick consistency checks");
  common(selfcheck, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*datum) return cmd_datum(c);
    if (*corners_cmd) return cmd_corners(c);
    if (*matrix) return cmd_matrix(c);
    if (*minimize) return cmd_extremum(c, false);
    if (*maximize) return cmd_extremum(c, true);
    if (*branch) return cmd_branch(c);
    if (*table) return cmd_table(c);
    if (*su2) return cmd_su2(c);
    if (*xfun) return cmd_xfun(c);
    if (*selfcheck) return cmd_selfcheck(c);
  } catch (const Infeasible& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const Undecided& e) {
    std::cerr << "undecided: " << e.what() << "\n";
    return kExitUndecided;
  } catch (const InvalidInput& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitUsage;
}
