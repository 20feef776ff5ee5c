#include "lcs/solver.hpp"

#include <algorithm>
#include <stdexcept>

#include "lcs/parse.hpp"

namespace lcs {

namespace {

const VarId kD = VarId::partial();
const VarId kL = VarId::lambda();

}  // namespace

std::vector<std::vector<Rational>> rational_nullspace(const QMatrix& m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  QMatrix a = m;
  std::vector<int> pivot_of_col(cols, -1);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rank]);
    const Rational inv = 1 / a[rank][c];
    for (std::size_t j = c; j < cols; ++j) a[rank][j] *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || a[r][c] == 0) continue;
      const Rational f = a[r][c];
      for (std::size_t j = c; j < cols; ++j) a[r][j] -= f * a[rank][j];
    }
    pivot_of_col[c] = static_cast<int>(rank);
    ++rank;
  }
  std::vector<std::vector<Rational>> basis;
  for (std::size_t c = 0; c < cols; ++c) {
    if (pivot_of_col[c] >= 0) continue;
    std::vector<Rational> v(cols, 0);
    v[c] = 1;
    for (std::size_t c2 = 0; c2 < cols; ++c2)
      if (pivot_of_col[c2] >= 0)
        v[c2] = -a[static_cast<std::size_t>(pivot_of_col[c2])][c];
    basis.push_back(std::move(v));
  }
  return basis;
}

namespace {

// Splits a residual into one coefficient polynomial (over parameters and
// unknown symbols) per monomial in (d, l, m).
std::vector<MultiPoly> coefficient_equations(const MultiPoly& residual) {
  std::map<Monomial, MultiPoly> grouped;
  for (const auto& [mono, coeff] : residual.terms()) {
    Monomial xy, rest;
    for (const auto& [v, e] : mono)
      (v.kind == VarKind::Param ? rest : xy).push_back({v, e});
    MultiPoly t;
    t.add_term(std::move(rest), coeff);
    grouped[xy] += t;
  }
  std::vector<MultiPoly> out;
  for (auto& [mono, poly] : grouped) {
    (void)mono;
    if (!poly.is_zero()) out.push_back(std::move(poly));
  }
  return out;
}

struct StagedOutcome {
  bool consistent = true;
  bool resolved = true;
  std::vector<MultiPoly> conditions;
  std::map<std::string, MultiPoly> solved;  // unknowns and eliminated params
};

// Staged affine elimination: equations are affine in the unknown symbols.
// Unknowns with rational coefficients are solved first; pure parameter
// equations become recorded conditions, eliminating one parameter each when
// affine. Deterministic by construction.
StagedOutcome staged_affine_solve(std::vector<MultiPoly> eqs,
                                  std::vector<std::string> unknowns,
                                  std::vector<std::string> param_priority) {
  StagedOutcome out;
  auto substitute_everywhere = [&](const VarId& v, const MultiPoly& image) {
    for (auto& e : eqs) e = e.substitute(v, image);
    for (auto& [name, expr] : out.solved) expr = expr.substitute(v, image);
  };

  for (;;) {
    eqs.erase(std::remove_if(eqs.begin(), eqs.end(),
                             [](const MultiPoly& e) { return e.is_zero(); }),
              eqs.end());
    if (eqs.empty()) return out;

    // Inconsistency: a nonzero rational equation.
    for (const auto& e : eqs)
      if (e.is_constant() && !e.is_zero()) {
        out.consistent = false;
        return out;
      }

    bool progressed = false;

    // Solve an unknown with a rational coefficient.
    for (std::size_t ei = 0; ei < eqs.size() && !progressed; ++ei) {
      for (const auto& u : unknowns) {
        const VarId uv = VarId::param(u);
        if (eqs[ei].degree_in(uv) != 1) continue;
        const MultiPoly cu = eqs[ei].coeff_in_var(uv, 1);
        if (!cu.is_constant() || cu.is_zero()) continue;
        const MultiPoly rest = eqs[ei].coeff_in_var(uv, 0);
        const MultiPoly image = rest.scaled(-1 / cu.constant_value());
        out.solved[u] = image;
        substitute_everywhere(uv, image);
        unknowns.erase(std::find(unknowns.begin(), unknowns.end(), u));
        progressed = true;
        break;
      }
    }
    if (progressed) continue;

    // Pure parameter equations become conditions.
    for (std::size_t ei = 0; ei < eqs.size() && !progressed; ++ei) {
      bool has_unknown = false;
      for (const auto& u : unknowns)
        if (eqs[ei].mentions(VarId::param(u))) {
          has_unknown = true;
          break;
        }
      if (has_unknown) continue;
      const MultiPoly eq = eqs[ei];
      bool eliminated = false;
      for (const auto& p : param_priority) {
        const VarId pv = VarId::param(p);
        if (eq.degree_in(pv) != 1) continue;
        const MultiPoly cp = eq.coeff_in_var(pv, 1);
        if (!cp.is_constant() || cp.is_zero()) continue;
        const Rational c = cp.constant_value();
        out.conditions.push_back(eq.scaled(1 / c));
        const MultiPoly image = eq.coeff_in_var(pv, 0).scaled(-1 / c);
        out.solved[p] = image;
        substitute_everywhere(pv, image);
        param_priority.erase(std::find(param_priority.begin(), param_priority.end(), p));
        eliminated = true;
        break;
      }
      if (!eliminated) {
        // Non-affine condition; record and drop.
        out.conditions.push_back(eq);
        eqs.erase(eqs.begin() + static_cast<long>(ei));
      }
      progressed = true;
    }
    if (progressed) continue;

    out.resolved = false;  // equations with parameter-coupled unknowns remain
    return out;
  }
}

MultiPoly unknown_poly(const std::string& prefix, const VarId& v, int D,
                       std::vector<std::string>& names) {
  MultiPoly p;
  for (int i = 0; i <= D; ++i) {
    const std::string n = prefix + std::to_string(i);
    names.push_back(n);
    p += pparam(n) * MultiPoly::var(v, static_cast<unsigned>(i));
  }
  return p;
}

// Kernel basis of residuals that are linear in the unknown symbols with
// rational coefficients.
std::vector<std::map<std::string, Rational>> linear_solve(
    const std::vector<MultiPoly>& residuals, const std::vector<std::string>& unknowns) {
  std::vector<std::vector<Rational>> rows;
  for (const auto& r : residuals) {
    for (const auto& eq : coefficient_equations(r)) {
      std::vector<Rational> row(unknowns.size(), 0);
      MultiPoly check = eq;
      for (std::size_t u = 0; u < unknowns.size(); ++u) {
        const VarId uv = VarId::param(unknowns[u]);
        if (eq.degree_in(uv) > 1)
          throw std::logic_error("linear_solve: residual is not linear in the unknowns");
        const MultiPoly cu = eq.coeff_in_var(uv, 1);
        if (cu.is_zero()) continue;
        if (!cu.is_constant())
          throw std::logic_error("linear_solve: unknown has a non-rational coefficient");
        row[u] = cu.constant_value();
        check = check.substitute(uv, pc(0));
      }
      if (!check.is_zero())
        throw std::logic_error("linear_solve: inhomogeneous residual");
      rows.push_back(std::move(row));
    }
  }
  if (rows.empty()) {
    // No constraints: every unknown is free.
    std::vector<std::map<std::string, Rational>> full;
    for (const auto& u : unknowns) full.push_back({{u, rat(1)}});
    return full;
  }
  std::vector<std::map<std::string, Rational>> out;
  for (const auto& v : rational_nullspace(rows)) {
    std::map<std::string, Rational> assign;
    for (std::size_t u = 0; u < unknowns.size(); ++u)
      if (v[u] != 0) assign[unknowns[u]] = v[u];
    out.push_back(std::move(assign));
  }
  return out;
}

MultiPoly shift_x_plus_y(const MultiPoly& f) { return f.substitute(kD, pd() + pl()); }

}  // namespace

SolutionSpace solve_shift(const Rational& a, const Rational& b, const Rational& al,
                          const Rational& be, int D) {
  std::vector<std::string> names;
  const MultiPoly f = unknown_poly("uf", kD, D, names);
  const MultiPoly left = (pd() + pl().scaled(a) + MultiPoly::constant(b)) * shift_x_plus_y(f);
  const MultiPoly right =
      (pd() + pl().scaled(2 * al - 1) + MultiPoly::constant(2 * be)) * f;
  const auto kernel = linear_solve({left - right}, names);
  SolutionSpace out;
  for (const auto& assign : kernel) {
    std::vector<Rational> vec(names.size(), 0);
    MultiPoly poly;
    for (std::size_t i = 0; i < names.size(); ++i) {
      auto it = assign.find(names[i]);
      if (it != assign.end()) {
        vec[i] = it->second;
        poly += MultiPoly::var(kD, static_cast<unsigned>(i)).scaled(it->second);
      }
    }
    out.basis.push_back(std::move(vec));
    out.polys.push_back(std::move(poly));
  }
  return out;
}

std::vector<ShiftBranch> solve_shift_parametric(int D,
                                                const std::map<std::string, Rational>& fixed) {
  std::vector<ShiftBranch> out;
  auto param_or_fixed = [&](const std::string& n) {
    auto it = fixed.find(n);
    return it == fixed.end() ? pparam(n) : MultiPoly::constant(it->second);
  };
  const MultiPoly a = param_or_fixed("a"), b = param_or_fixed("b");
  const MultiPoly al = param_or_fixed("al"), be = param_or_fixed("be");

  for (int k = 0; k <= D; ++k) {
    std::vector<std::string> names;
    MultiPoly f = MultiPoly::var(kD, static_cast<unsigned>(k));
    for (int i = 0; i < k; ++i) {
      const std::string n = "uf" + std::to_string(i);
      names.push_back(n);
      f += pparam(n) * MultiPoly::var(kD, static_cast<unsigned>(i));
    }
    const MultiPoly residual =
        (pd() + a * pl() + b) * shift_x_plus_y(f) -
        (pd() + (pc(2) * al - pc(1)) * pl() + pc(2) * be) * f;

    std::vector<std::string> priority;
    for (const auto& n : {"a", "al", "b", "be"})
      if (!fixed.count(n)) priority.push_back(n);

    StagedOutcome res =
        staged_affine_solve(coefficient_equations(residual), names, priority);

    ShiftBranch branch;
    branch.degree = k;
    branch.exists = res.consistent;
    if (res.consistent) {
      branch.conditions = res.conditions;
      MultiPoly shape = MultiPoly::var(kD, static_cast<unsigned>(k));
      for (int i = 0; i < k; ++i) {
        const std::string n = "uf" + std::to_string(i);
        auto it = res.solved.find(n);
        const MultiPoly coeff = it == res.solved.end() ? pparam(n) : it->second;
        shape += coeff * MultiPoly::var(kD, static_cast<unsigned>(i));
      }
      branch.f_shape = shape;
      if (!res.resolved) {
        branch.exists = false;
        branch.conditions.clear();
      }
    }
    out.push_back(std::move(branch));
  }
  return out;
}

SolutionSpace solve_fgh(const MultiPoly& known, bool f_is_known, int D) {
  if (known.is_zero()) throw std::invalid_argument("solve_fgh: known side must be nonzero");
  std::vector<std::string> names;
  MultiPoly g, f, h;
  if (f_is_known) {
    f = known;
    for (int i = 0; i <= D; ++i)
      for (int j = 0; i + j <= D; ++j) {
        const std::string n = "ug" + std::to_string(i) + "_" + std::to_string(j);
        names.push_back(n);
        g += pparam(n) * MultiPoly::var(kD, static_cast<unsigned>(i)) *
             MultiPoly::var(kL, static_cast<unsigned>(j));
      }
  } else {
    g = known;
    for (int i = 0; i <= D; ++i) {
      const std::string n = "uf" + std::to_string(i);
      names.push_back(n);
      f += pparam(n) * MultiPoly::var(kD, static_cast<unsigned>(i));
    }
  }
  const std::size_t first_h = names.size();
  for (int j = 0; j <= D; ++j) {
    const std::string n = "uh" + std::to_string(j);
    names.push_back(n);
    h += pparam(n) * MultiPoly::var(kL, static_cast<unsigned>(j));
  }
  const MultiPoly residual = shift_x_plus_y(f) * g - f * h;
  const auto kernel = linear_solve({residual}, names);

  SolutionSpace out;
  for (const auto& assign : kernel) {
    std::vector<Rational> vec(names.size(), 0);
    for (std::size_t i = 0; i < names.size(); ++i) {
      auto it = assign.find(names[i]);
      if (it != assign.end()) vec[i] = it->second;
    }
    // Reconstruct the unknown pair for reporting.
    MultiPoly first_poly, h_poly;
    std::size_t idx = 0;
    if (f_is_known) {
      for (int i = 0; i <= D; ++i)
        for (int j = 0; i + j <= D; ++j, ++idx)
          first_poly += MultiPoly::var(kD, static_cast<unsigned>(i))
                            .scaled(vec[idx]) *
                        MultiPoly::var(kL, static_cast<unsigned>(j));
    } else {
      for (int i = 0; i <= D; ++i, ++idx)
        first_poly += MultiPoly::var(kD, static_cast<unsigned>(i)).scaled(vec[idx]);
    }
    for (int j = 0; j <= D; ++j)
      h_poly += MultiPoly::var(kL, static_cast<unsigned>(j)).scaled(vec[first_h + j]);
    out.basis.push_back(std::move(vec));
    out.polys.push_back(std::move(first_poly));
    out.polys.push_back(std::move(h_poly));
  }
  return out;
}

namespace {

MultiPoly generic_lambda(const std::string& prefix) {
  return pparam(prefix + "0") + pparam(prefix + "1") * pl() +
         pparam(prefix + "2") * pl().pow(2);
}

MultiPoly generic_d(const std::string& prefix) {
  return pparam(prefix + "0") + pparam(prefix + "1") * pd() +
         pparam(prefix + "2") * pd().pow(2);
}

// Verifies that the only bounded-degree solution of the residual system is
// zero; residuals are linear in the unknown prefix-polynomials.
bool only_zero_solution(const std::vector<MultiPoly>& residuals,
                        const std::vector<std::string>& unknowns) {
  return linear_solve(residuals, unknowns).empty();
}

}  // namespace

std::vector<OddFamily> derive_odd_structure(EvenType type, const EvenParams& params, int D) {
  std::vector<OddFamily> out;
  const std::vector<MultiPoly> lambda_probes = {pc(1), pl(), pl() * pl(), pc(1) + pl()};

  auto kill_psi1_against = [&](const MultiPoly& multiplier) {
    // psi1(d+l) * multiplier == 0 forces psi1 = 0 at degree <= D.
    std::vector<std::string> names;
    const MultiPoly psi1 = unknown_poly("up", kD, D, names);
    if (!only_zero_solution({shift_x_plus_y(psi1) * multiplier}, names))
      throw std::logic_error("derive_odd_structure: psi1 unexpectedly unconstrained");
  };

  switch (type) {
    case EvenType::ANilpotent: {
      if (params.f.is_zero())
        throw std::invalid_argument("type A nilpotent requires a nonzero skew-symmetric f");
      // psi1 dies against Q1 = f; then phi and psi2 cannot both survive.
      kill_psi1_against(params.f);
      for (const auto& phi : lambda_probes) {
        std::vector<std::string> names;
        const MultiPoly psi1 = unknown_poly("up", kD, D, names);
        const MultiPoly psi2 = unknown_poly("uq", kD, D, names);
        const std::vector<MultiPoly> residuals = {
            pc(2) * phi * psi1,
            pc(2) * phi * psi2 - shift_x_plus_y(psi1) * params.f};
        if (!only_zero_solution(residuals, names))
          throw std::logic_error("type A nilpotent: nonzero odd square with phi nonzero");
      }
      OddFamily a1{"A1",
                   {{"f1", params.f}, {"phi1", generic_lambda("u")}},
                   {},
                   "phi free; psi1 = psi2 = 0"};
      OddFamily a2{"A2",
                   {{"f2", params.f}, {"psi", generic_d("u")}},
                   {},
                   "phi = 0; psi free"};
      out.push_back(std::move(a1));
      out.push_back(std::move(a2));
      break;
    }
    case EvenType::ASolvableNotNilpotent: {
      if (params.p.is_zero())
        throw std::invalid_argument("type A solvable requires a nonzero p(l)");
      // psi1(d+l) p(-d-l) = 0 forces psi1 = 0.
      kill_psi1_against(params.p.substitute(kL, -pd() - pl()));
      // With phi = p/2 the equation 2 phi psi2 = psi2(d+l) p admits exactly
      // the constants.
      const MultiPoly half_p = params.p.scaled(rat(1, 2));
      {
        std::vector<std::string> names;
        const MultiPoly psi2 = unknown_poly("uq", kD, D, names);
        const auto kernel = linear_solve(
            {pc(2) * half_p * psi2 - shift_x_plus_y(psi2) * params.p}, names);
        if (kernel.size() != 1 || kernel[0].size() != 1 || !kernel[0].count("uq0"))
          throw std::logic_error("type A solvable: psi2 solution space is not the constants");
      }
      // Any phi != p/2 kills psi2.
      for (const MultiPoly& phi :
           {params.p, half_p + pc(1), half_p * pl(), half_p + pl()}) {
        if ((phi - half_p).is_zero()) continue;
        std::vector<std::string> names;
        const MultiPoly psi2 = unknown_poly("uq", kD, D, names);
        if (!only_zero_solution(
                {pc(2) * phi * psi2 - shift_x_plus_y(psi2) * params.p}, names))
          throw std::logic_error("type A solvable: psi2 survives a phi != p/2");
      }
      OddFamily a3{"A3", {{"phi3", half_p}}, {}, "psi2 normalized to 2"};
      OddFamily a4{"A4",
                   {{"p", params.p}, {"phi4", generic_lambda("v")}},
                   {},
                   "psi2 = 0; phi free"};
      out.push_back(std::move(a3));
      out.push_back(std::move(a4));
      break;
    }
    case EvenType::B:
    case EvenType::C: {
      const bool is_b = type == EvenType::B;
      // psi2 dies: against (d+2l) for type B, against the generic weight
      // multiplier for type C.
      if (is_b) {
        std::vector<std::string> names;
        const MultiPoly psi2 = unknown_poly("uq", kD, D, names);
        if (!only_zero_solution({(pd() + pc(2) * pl()) * shift_x_plus_y(psi2)}, names))
          throw std::logic_error("type B: psi2 unexpectedly unconstrained");
      } else {
        std::vector<std::string> names;
        const MultiPoly psi2 = unknown_poly("uq", kD, D, names);
        const MultiPoly mult =
            pd() + (pc(2) * pparam("al") - pc(1)) * pl() + pc(2) * pparam("be");
        StagedOutcome res = staged_affine_solve(
            coefficient_equations(mult * psi2), names, {"al", "be"});
        bool all_zero = res.consistent && res.resolved && res.conditions.empty();
        for (const auto& [n, v] : res.solved) {
          (void)n;
          all_zero = all_zero && v.is_zero();
        }
        if (!all_zero) throw std::logic_error("type C: psi2 unexpectedly unconstrained");
      }
      // psi1 satisfies the shifted equation with (a, b) = (2, 0).
      const auto branches = solve_shift_parametric(D, {{"a", rat(2)}, {"b", rat(0)}});
      for (const auto& br : branches) {
        if (!br.exists) continue;
        if (br.degree == 0) {
          OddFamily fam{is_b ? "B2" : "C2", {}, br.conditions,
                        "al = 3/2, be = 0; psi1 normalized to 2"};
          out.push_back(std::move(fam));
        } else {
          throw std::logic_error("type B/C: unexpected shift branch of positive degree");
        }
      }
      out.push_back({is_b ? "B1" : "C1",
                     {{"al", pparam("al")}, {"be", pparam("be")}},
                     {},
                     "psi1 = psi2 = 0; al, be free"});
      if (!is_b) {
        // Second module branch: B acts as phi(l), A trivially; the odd
        // square dies for every nonzero phi probe.
        for (const auto& phi : lambda_probes) {
          std::vector<std::string> names;
          const MultiPoly psi1 = unknown_poly("up", kD, D, names);
          const MultiPoly psi2 = unknown_poly("uq", kD, D, names);
          if (!only_zero_solution({pc(2) * phi * psi1, pc(2) * phi * psi2}, names))
            throw std::logic_error("type C: odd square survives a nonzero B-action");
        }
        out.push_back({"C3", {{"phi", generic_lambda("u")}}, {}, "psi1 = psi2 = 0"});
      }
      out.push_back({is_b ? "B0" : "C0", {}, {}, "trivial odd action"});
      break;
    }
    case EvenType::D: {
      const Rational a = params.a, b = params.b;
      const MultiPoly& Q = params.Q;
      validate_condition1(MultiPoly::constant(a), MultiPoly::constant(b), Q);
      const bool is_hv = (a == 1 && b == 0 && Q.is_zero());

      // gamma: [B_l X] = ga X survives the Jacobi constraints only over the
      // Heisenberg-Virasoro even part.
      {
        const std::vector<std::string> names = {"uga"};
        const MultiPoly ga = pparam("uga");
        const std::vector<MultiPoly> residuals = {
            ga * (pl().scaled(a - 1) + MultiPoly::constant(b)),
            ga * Q.substitute({{kD, -pl() - pm()}})};
        const auto kernel = linear_solve(residuals, names);
        if (is_hv ? kernel.size() != 1 : !kernel.empty())
          throw std::logic_error("type D: gamma constraint disagrees with the even part");
      }
      // psi1 dies against (1-a)d - a l + b.
      kill_psi1_against(pd().scaled(1 - a) - pl().scaled(a) + MultiPoly::constant(b));

      // psi2 branches from the shifted equation at the algebra's (a, b).
      const auto branches = solve_shift_parametric(D, {{"a", a}, {"b", b}});
      for (const auto& br : branches) {
        if (!br.exists) continue;
        if (br.degree == 0) {
          OddFamily fam{"D2",
                        {{"a", MultiPoly::constant(a)},
                         {"b", MultiPoly::constant(b)},
                         {"q", Q}},
                        br.conditions,
                        "al = (a+1)/2, be = b/2; psi2 normalized to 2"};
          out.push_back(std::move(fam));
        } else if (br.degree == 1) {
          OddFamily fam{"D3",
                        {{"b", MultiPoly::constant(b)}, {"q", Q}},
                        br.conditions,
                        "a = 0; al = 1, be = b/2; psi2 = d + b"};
          out.push_back(std::move(fam));
        } else {
          throw std::logic_error("type D: unexpected shift branch of degree >= 2");
        }
      }
      if (is_hv) {
        out.push_back({"D4",
                       {{"al", pparam("al")}, {"be", pparam("be")}, {"ga", pparam("ga")}},
                       {},
                       "psi2 = 0; al, be, ga free"});
      } else {
        out.push_back({"D1",
                       {{"a", MultiPoly::constant(a)},
                        {"b", MultiPoly::constant(b)},
                        {"q", Q},
                        {"al", pparam("al")},
                        {"be", pparam("be")}},
                       {},
                       "psi2 = 0; al, be free"});
      }
      out.push_back({"D0",
                     {{"a", MultiPoly::constant(a)},
                      {"b", MultiPoly::constant(b)},
                      {"q", Q}},
                     {},
                     "trivial odd action"});
      break;
    }
  }
  return out;
}

}  // namespace lcs
