#include "invtrace/branch.hpp"

#include <optional>

#include "invtrace/errors.hpp"

namespace invtrace {

namespace {

std::vector<int> free_variables(const BranchProblem& p) {
  std::vector<int> out;
  for (int i = 0; i < p.f.nvars(); ++i)
    if (!p.pins.count(i)) out.push_back(i);
  return out;
}

Polynomial pinned_objective(const BranchProblem& p) {
  Polynomial f = p.f;
  for (const auto& [i, v] : p.pins) {
    if (i < 0 || i >= f.nvars()) throw InvalidInput("pinned variable out of range");
    if (v != 2 && v != -2) throw InvalidInput("pins must be +2 or -2");
    f = f.substitute(i, Q(v));
  }
  return f.permute(free_variables(p));
}

}  // namespace

Ideal branch_critical_ideal(const BranchProblem& p) {
  Polynomial f = pinned_objective(p);
  const int n = f.nvars();
  Ideal out{n, {}, MonomialOrder::DegRevLex};
  for (int i = 0; i < n; ++i) {
    Polynomial t = Polynomial::variable(n, i);
    out.gens.push_back((t * t - Polynomial::constant(n, Q(4))) * f.derivative(i));
  }
  return out;
}

BranchResult branch_minimize(const BranchProblem& p, const SolveOptions& options) {
  const std::vector<int> vars = free_variables(p);
  Polynomial f = pinned_objective(p);
  const int n = f.nvars();
  BranchResult out;
  if (f.is_constant()) {
    out.minimum = AlgebraicReal(f.constant_term());
    out.witness.assign(p.f.nvars(), AlgebraicReal(Q(2)));
    for (const auto& [i, v] : p.pins) out.witness[i] = AlgebraicReal(Q(v));
    return out;
  }

  // V((t_i^2 - 4) df/dt_i : i) is the union, over each free variable's choice
  // of t_i = 2, t_i = -2 or df/dt_i = 0, of much smaller systems.
  std::optional<AlgebraicReal> best;
  std::vector<int> choice(n, 0);
  for (;;) {
    BranchProblem sub{p.f, p.pins};
    for (int k = 0; k < n; ++k)
      if (choice[k]) sub.pins[vars[k]] = choice[k] == 1 ? 2 : -2;
    const std::vector<int> sub_vars = free_variables(sub);
    Polynomial g = pinned_objective(sub);
    const int m = g.nvars();
    std::vector<AlgebraicPoint> points;
    if (m == 0) {
      points.push_back(AlgebraicPoint::rational({}));
    } else {
      Ideal I{m, {}, MonomialOrder::DegRevLex};
      for (int i = 0; i < m; ++i) I.gens.push_back(g.derivative(i));
      points = solve_zero_dim(I, options);
    }
    out.critical_points += points.size();
    for (auto& x : points) {
      bool inside = true;
      for (int i = 0; i < m && inside; ++i) {
        Polynomial t = Polynomial::variable(m, i);
        inside = sign_of(t * t - Polynomial::constant(m, Q(4)), x) < 0;
      }
      if (!inside) continue;
      ++out.in_box;
      AlgebraicReal v = m == 0 ? AlgebraicReal(g.constant_term()) : value_of(g, x);
      if (!best || AlgebraicReal::compare(v, *best) < 0) {
        best = v;
        out.witness.assign(p.f.nvars(), AlgebraicReal());
        for (const auto& [i, val] : sub.pins) out.witness[i] = AlgebraicReal(Q(val));
        for (int i = 0; i < m; ++i) out.witness[sub_vars[i]] = x.coordinate(i);
      }
    }
    int k = 0;
    while (k < n && choice[k] == 2) choice[k++] = 0;
    if (k == n) break;
    ++choice[k];
  }
  if (!best) throw Error("no critical point lies in the box; internal error");
  out.minimum = *best;
  return out;
}

}  // namespace invtrace
