#include "lcs/catalog.hpp"

#include <algorithm>

#include "lcs/parse.hpp"

namespace lcs {

namespace {

const VarId kL = VarId::lambda();
const VarId kD = VarId::partial();

std::set<std::string> collect_params(std::initializer_list<const MultiPoly*> polys) {
  std::set<std::string> out;
  for (const MultiPoly* p : polys)
    for (const auto& v : p->vars())
      if (v.kind == VarKind::Param) out.insert(v.name);
  return out;
}

MultiPoly slot_or(const SlotMap& slots, const std::string& name, const MultiPoly& fallback) {
  auto it = slots.find(name);
  return it == slots.end() ? fallback : it->second;
}

MultiPoly sym(const std::string& name) { return pparam(name); }

void require_nonzero(const MultiPoly& p, const std::string& slot, const std::string& tag) {
  if (p.is_zero())
    throw CatalogError("family " + tag + ": slot '" + slot + "' must be nonzero");
}

void require_in_var(const MultiPoly& p, const VarId& v, const std::string& slot,
                    const std::string& tag) {
  for (const auto& w : p.vars())
    if (w.kind != VarKind::Param && w != v)
      throw CatalogError("family " + tag + ": slot '" + slot + "' must be a polynomial in " +
                         v.name + " only");
}

bool is_skew_symmetric(const MultiPoly& f) {
  const MultiPoly image = f.substitute(kL, -pd() - pl());
  return (f + image).is_zero();
}

ConformalSuperAlgebra make_abx(const std::set<std::string>& params) {
  return ConformalSuperAlgebra(
      {{"A", Parity::Even}, {"B", Parity::Even}, {"X", Parity::Odd}}, params);
}

MultiPoly vir_q() { return pd() + pc(2) * pl(); }  // d + 2l

}  // namespace

MultiPoly condition1_Q(const Rational& a, const MultiPoly& c, const MultiPoly& e) {
  const MultiPoly dl = pd() * pl() + pl() * pl();  // d*l + l^2
  const MultiPoly base = vir_q();
  if (a == 1) {
    if (!e.is_zero()) throw CatalogError("Condition 1: a=1 admits no second constant");
    return c * base;
  }
  if (a == 0) return base * (c * dl + e * pd());
  if (a == -1) return base * (c * pd() * pd() + e * dl * pd());
  if (a == -4) {
    if (!e.is_zero()) throw CatalogError("Condition 1: a=-4 admits no second constant");
    return c * base * dl.pow(3);
  }
  if (a == -6) {
    if (!e.is_zero()) throw CatalogError("Condition 1: a=-6 admits no second constant");
    return c * base * (pc(11) * dl.pow(4) + pc(2) * dl.pow(3) * pd() * pd());
  }
  throw CatalogError("Condition 1: a outside {1, 0, -1, -4, -6}");
}

void validate_condition1(const MultiPoly& a, const MultiPoly& b, const MultiPoly& Q) {
  if (Q.is_zero()) return;
  if (!b.is_zero())
    throw CatalogError("Condition 1: Q must vanish when b != 0");
  if (!a.is_constant())
    throw CatalogError("Condition 1: nonzero Q requires a rational a from the table");
  const Rational av = a.constant_value();
  const std::vector<Rational> admissible = {rat(1), rat(0), rat(-1), rat(-4), rat(-6)};
  if (std::find(admissible.begin(), admissible.end(), av) == admissible.end())
    throw CatalogError("Condition 1: a outside {1, 0, -1, -4, -6} with nonzero Q");

  // Match Q = c*T_c + e*T_e for some constants c, e (rational or symbolic):
  // extract each constant from a (d,l)-monomial unique to its template, then
  // verify the decomposition exactly.
  const bool has_e = (av == 0 || av == -1);
  const MultiPoly t_c = condition1_Q(av, pc(1), has_e ? pc(0) : MultiPoly{});
  const MultiPoly t_e = has_e ? condition1_Q(av, pc(0), pc(1)) : MultiPoly{};

  auto dl_coeff = [](const MultiPoly& p, const Monomial& mono) {
    unsigned pd_exp = 0, pl_exp = 0;
    for (const auto& [v, ex] : mono) {
      if (v.kind == VarKind::Partial) pd_exp = ex;
      if (v.kind == VarKind::Lambda) pl_exp = ex;
    }
    return p.coeff_in_var(VarId::partial(), pd_exp).coeff_in_var(VarId::lambda(), pl_exp);
  };
  auto extract = [&](const MultiPoly& templ, const MultiPoly& other) {
    for (const auto& [mono, coeff] : templ.terms())
      if (dl_coeff(other, mono).is_zero())
        return dl_coeff(Q, mono).scaled(1 / coeff);
    return MultiPoly{};
  };
  const MultiPoly c = extract(t_c, t_e);
  const MultiPoly e = has_e ? extract(t_e, t_c) : MultiPoly{};
  if (!(Q - c * t_c - e * t_e).is_zero())
    throw CatalogError("Condition 1: Q does not match the table template for a=" +
                       to_string(av));
}

ConformalSuperAlgebra dbar_shape(const MultiPoly& a, const MultiPoly& b, const MultiPoly& Q,
                                 const MultiPoly& alpha, const MultiPoly& beta,
                                 const MultiPoly& gamma) {
  auto params = collect_params({&a, &b, &Q, &alpha, &beta, &gamma});
  ConformalSuperAlgebra alg = make_abx(params);
  alg.set_bracket("A", "A", "A", vir_q());
  alg.set_bracket("A", "A", "B", Q);
  alg.set_bracket("A", "B", "B", pd() + a * pl() + b);
  alg.set_bracket("A", "X", "X", pd() + alpha * pl() + beta);
  alg.set_bracket("B", "X", "X", gamma);
  alg.complete_by_skew();
  return alg;
}

namespace {

BuiltFamily build_vir(const SlotMap&) {
  ConformalSuperAlgebra alg({{"L", Parity::Even}}, {});
  alg.set_bracket(0, 0, 0, vir_q());
  return {"Vir", {}, std::move(alg)};
}

BuiltFamily build_ns(const SlotMap&) {
  ConformalSuperAlgebra alg({{"L", Parity::Even}, {"G", Parity::Odd}}, {});
  alg.set_bracket("L", "L", "L", vir_q());
  alg.set_bracket("L", "G", "G", pd() + pc(3, 2) * pl());
  alg.set_bracket("G", "G", "L", pc(2));
  alg.complete_by_skew();
  return {"NS", {}, std::move(alg)};
}

BuiltFamily build_hv(const SlotMap&) {
  ConformalSuperAlgebra alg({{"L", Parity::Even}, {"H", Parity::Even}}, {});
  alg.set_bracket("L", "L", "L", vir_q());
  alg.set_bracket("L", "H", "H", pd() + pl());
  alg.complete_by_skew();
  return {"HV", {}, std::move(alg)};
}

BuiltFamily build_hvs(const SlotMap&) {
  ConformalSuperAlgebra alg = make_abx({});
  alg.set_bracket("A", "A", "A", vir_q());
  alg.set_bracket("A", "B", "B", pd() + pl());
  alg.set_bracket("A", "X", "X", pd() + pl());
  alg.set_bracket("X", "X", "B", pc(2));
  alg.complete_by_skew();
  return {"HVS", {}, std::move(alg)};
}

// Generic polynomial slot defaults for the symbolic identity sweep: fresh
// coefficient symbols so the axiom checks quantify over the slot too.
MultiPoly generic_lambda_poly(const std::string& prefix) {
  return sym(prefix + "0") + sym(prefix + "1") * pl() + sym(prefix + "2") * pl().pow(2);
}

MultiPoly generic_d_poly(const std::string& prefix) {
  return sym(prefix + "0") + sym(prefix + "1") * pd() + sym(prefix + "2") * pd().pow(2);
}

MultiPoly generic_skew_poly(const std::string& prefix) {
  const MultiPoly dl = pd() * pl() + pl() * pl();
  return vir_q() * (sym(prefix + "0") + sym(prefix + "1") * pd() + sym(prefix + "2") * dl);
}

BuiltFamily build_o1(const SlotMap& slots) {
  const MultiPoly phi = slot_or(slots, "phi", generic_lambda_poly("u"));
  const MultiPoly phb = slot_or(slots, "phib", generic_lambda_poly("v"));
  require_in_var(phi, kL, "phi", "O1");
  require_in_var(phb, kL, "phib", "O1");
  ConformalSuperAlgebra alg = make_abx(collect_params({&phi, &phb}));
  alg.set_bracket("A", "X", "X", phi);
  alg.set_bracket("B", "X", "X", phb);
  alg.complete_by_skew();
  return {"O1", {{"phi", phi}, {"phib", phb}}, std::move(alg)};
}

BuiltFamily build_o2(const SlotMap& slots) {
  const MultiPoly psi1 = slot_or(slots, "psi1", generic_d_poly("u"));
  const MultiPoly psi2 = slot_or(slots, "psi2", generic_d_poly("v"));
  require_in_var(psi1, kD, "psi1", "O2");
  require_in_var(psi2, kD, "psi2", "O2");
  ConformalSuperAlgebra alg = make_abx(collect_params({&psi1, &psi2}));
  alg.set_bracket("X", "X", "A", psi1);
  alg.set_bracket("X", "X", "B", psi2);
  alg.complete_by_skew();
  return {"O2", {{"psi1", psi1}, {"psi2", psi2}}, std::move(alg)};
}

BuiltFamily build_a1(const SlotMap& slots) {
  const MultiPoly f1 = slot_or(slots, "f1", generic_skew_poly("s"));
  const MultiPoly phi1 = slot_or(slots, "phi1", generic_lambda_poly("u"));
  require_nonzero(f1, "f1", "A1");
  require_in_var(phi1, kL, "phi1", "A1");
  if (!is_skew_symmetric(f1))
    throw CatalogError("family A1: f1 must satisfy f(d,l) = -f(d,-d-l)");
  ConformalSuperAlgebra alg = make_abx(collect_params({&f1, &phi1}));
  alg.set_bracket("A", "A", "B", f1);
  alg.set_bracket("A", "X", "X", phi1);
  alg.complete_by_skew();
  return {"A1", {{"f1", f1}, {"phi1", phi1}}, std::move(alg)};
}

BuiltFamily build_a2(const SlotMap& slots) {
  const MultiPoly f2 = slot_or(slots, "f2", generic_skew_poly("s"));
  const MultiPoly psi = slot_or(slots, "psi", generic_d_poly("u"));
  require_nonzero(f2, "f2", "A2");
  require_in_var(psi, kD, "psi", "A2");
  if (!is_skew_symmetric(f2))
    throw CatalogError("family A2: f2 must satisfy f(d,l) = -f(d,-d-l)");
  ConformalSuperAlgebra alg = make_abx(collect_params({&f2, &psi}));
  alg.set_bracket("A", "A", "B", f2);
  alg.set_bracket("X", "X", "B", psi);
  alg.complete_by_skew();
  return {"A2", {{"f2", f2}, {"psi", psi}}, std::move(alg)};
}

BuiltFamily build_a3(const SlotMap& slots) {
  const MultiPoly phi3 = slot_or(slots, "phi3", generic_lambda_poly("u"));
  require_nonzero(phi3, "phi3", "A3");
  require_in_var(phi3, kL, "phi3", "A3");
  ConformalSuperAlgebra alg = make_abx(collect_params({&phi3}));
  alg.set_bracket("A", "B", "B", pc(2) * phi3);
  alg.set_bracket("A", "X", "X", phi3);
  alg.set_bracket("X", "X", "B", pc(2));
  alg.complete_by_skew();
  return {"A3", {{"phi3", phi3}}, std::move(alg)};
}

BuiltFamily build_a4(const SlotMap& slots) {
  const MultiPoly p = slot_or(slots, "p", generic_lambda_poly("u"));
  const MultiPoly phi4 = slot_or(slots, "phi4", generic_lambda_poly("v"));
  require_nonzero(p, "p", "A4");
  require_in_var(p, kL, "p", "A4");
  require_in_var(phi4, kL, "phi4", "A4");
  ConformalSuperAlgebra alg = make_abx(collect_params({&p, &phi4}));
  alg.set_bracket("A", "B", "B", p);
  alg.set_bracket("A", "X", "X", phi4);
  alg.complete_by_skew();
  return {"A4", {{"p", p}, {"phi4", phi4}}, std::move(alg)};
}

BuiltFamily build_b(int variant, const SlotMap& slots) {
  const std::string tag = "B" + std::to_string(variant);
  MultiPoly alpha, beta;
  if (variant == 1) {
    alpha = slot_or(slots, "al", sym("al"));
    beta = slot_or(slots, "be", sym("be"));
  } else if (variant == 2) {
    alpha = pc(3, 2);
    beta = pc(0);
  }
  ConformalSuperAlgebra alg = make_abx(collect_params({&alpha, &beta}));
  alg.set_bracket("A", "A", "A", vir_q());
  alg.set_bracket("B", "B", "B", vir_q());
  if (variant >= 1) alg.set_bracket("A", "X", "X", pd() + alpha * pl() + beta);
  if (variant == 2) alg.set_bracket("X", "X", "A", pc(2));
  alg.complete_by_skew();
  SlotMap used;
  if (variant == 1) used = {{"al", alpha}, {"be", beta}};
  return {tag, std::move(used), std::move(alg)};
}

BuiltFamily build_c(int variant, const SlotMap& slots) {
  const std::string tag = "C" + std::to_string(variant);
  ConformalSuperAlgebra alg = make_abx({});
  SlotMap used;
  if (variant == 1) {
    const MultiPoly alpha = slot_or(slots, "al", sym("al"));
    const MultiPoly beta = slot_or(slots, "be", sym("be"));
    alg = make_abx(collect_params({&alpha, &beta}));
    alg.set_bracket("A", "A", "A", vir_q());
    alg.set_bracket("A", "X", "X", pd() + alpha * pl() + beta);
    used = {{"al", alpha}, {"be", beta}};
  } else if (variant == 2) {
    alg.set_bracket("A", "A", "A", vir_q());
    alg.set_bracket("A", "X", "X", pd() + pc(3, 2) * pl());
    alg.set_bracket("X", "X", "A", pc(2));
  } else if (variant == 3) {
    const MultiPoly phi = slot_or(slots, "phi", generic_lambda_poly("u"));
    require_nonzero(phi, "phi", tag);
    require_in_var(phi, kL, "phi", tag);
    alg = make_abx(collect_params({&phi}));
    alg.set_bracket("A", "A", "A", vir_q());
    alg.set_bracket("B", "X", "X", phi);
    used = {{"phi", phi}};
  } else {
    alg.set_bracket("A", "A", "A", vir_q());
  }
  alg.complete_by_skew();
  return {tag, std::move(used), std::move(alg)};
}

BuiltFamily build_d(int variant, const SlotMap& slots) {
  const std::string tag = "D" + std::to_string(variant);
  MultiPoly a = slot_or(slots, "a", sym("a"));
  MultiPoly b = slot_or(slots, "b", sym("b"));
  MultiPoly Q = slot_or(slots, "q", MultiPoly{});
  if (variant == 3) a = pc(0);
  if (variant == 4 || variant == 5) {
    a = pc(1);
    b = pc(0);
    Q = MultiPoly{};
  }
  validate_condition1(a, b, Q);

  ConformalSuperAlgebra alg = make_abx({});
  SlotMap used = {{"a", a}, {"b", b}, {"q", Q}};
  MultiPoly alpha, beta, gamma;
  switch (variant) {
    case 0:
      break;
    case 1:
    case 4:
      alpha = slot_or(slots, "al", sym("al"));
      beta = slot_or(slots, "be", sym("be"));
      used["al"] = alpha;
      used["be"] = beta;
      if (variant == 4) {
        gamma = slot_or(slots, "ga", sym("ga"));
        used["ga"] = gamma;
      }
      break;
    case 2:
    case 5:
      alpha = (a + pc(1)).scaled(rat(1, 2));
      beta = b.scaled(rat(1, 2));
      break;
    case 3:
      alpha = pc(1);
      beta = b.scaled(rat(1, 2));
      break;
    default:
      throw CatalogError("unknown D variant");
  }

  alg = make_abx(collect_params({&a, &b, &Q, &alpha, &beta, &gamma}));
  alg.set_bracket("A", "A", "A", vir_q());
  alg.set_bracket("A", "A", "B", Q);
  alg.set_bracket("A", "B", "B", pd() + a * pl() + b);
  if (variant != 0) alg.set_bracket("A", "X", "X", pd() + alpha * pl() + beta);
  if (variant == 2 || variant == 5) alg.set_bracket("X", "X", "B", pc(2));
  if (variant == 3) alg.set_bracket("X", "X", "B", pd() + b);
  if (variant == 4) alg.set_bracket("B", "X", "X", gamma);
  alg.complete_by_skew();
  return {tag, std::move(used), std::move(alg)};
}

BuiltFamily build_dbar(const SlotMap& slots) {
  const MultiPoly a = slot_or(slots, "a", sym("a"));
  const MultiPoly b = slot_or(slots, "b", sym("b"));
  const MultiPoly Q = slot_or(slots, "q", MultiPoly{});
  const MultiPoly alpha = slot_or(slots, "al", sym("al"));
  const MultiPoly beta = slot_or(slots, "be", sym("be"));
  const MultiPoly gamma = slot_or(slots, "ga", MultiPoly{});
  validate_condition1(a, b, Q);
  // Validity bullets: a nonzero gamma forces the Heisenberg-Virasoro even
  // part, as exact identities gamma*(a-1) = gamma*b = gamma*Q = 0.
  if (!(gamma * (a - pc(1))).is_zero() || !(gamma * b).is_zero() || !(gamma * Q).is_zero())
    throw CatalogError("family Dbar: nonzero gamma requires (a, b, Q) = (1, 0, 0)");
  ConformalSuperAlgebra alg = dbar_shape(a, b, Q, alpha, beta, gamma);
  return {"Dbar",
          {{"a", a}, {"b", b}, {"q", Q}, {"al", alpha}, {"be", beta}, {"ga", gamma}},
          std::move(alg)};
}

BuiltFamily build_o_general(const std::string& tag, const SlotMap& slots) {
  const int variant = tag == "O1n" ? 1 : 2;
  int n = 3;
  auto it = slots.find("n");
  if (it != slots.end()) {
    if (!it->second.is_constant() || !is_integer(it->second.constant_value()))
      throw CatalogError("family " + tag + ": n must be a positive integer");
    n = static_cast<int>(it->second.constant_value().get_num().get_si());
  }
  std::vector<MultiPoly> polys;
  for (int i = 1; i <= n; ++i) {
    const std::string key = (variant == 1 ? "phi" : "psi") + std::to_string(i);
    const std::string prefix = (variant == 1 ? "u" : "w") + std::to_string(i);
    MultiPoly dflt = variant == 1 ? sym(prefix + "0") + sym(prefix + "1") * pl()
                                  : sym(prefix + "0") + sym(prefix + "1") * pd();
    polys.push_back(slot_or(slots, key, dflt));
  }
  ConformalSuperAlgebra alg = build_general_O(variant, n, polys);
  SlotMap used;
  for (int i = 1; i <= n; ++i)
    used[(variant == 1 ? "phi" : "psi") + std::to_string(i)] =
        polys[static_cast<std::size_t>(i - 1)];
  used["n"] = pc(n);
  return {tag, std::move(used), std::move(alg)};
}

}  // namespace

ConformalSuperAlgebra build_general_O(int variant, int n,
                                      const std::vector<MultiPoly>& polys) {
  if (variant != 1 && variant != 2) throw CatalogError("build_general_O: variant must be 1 or 2");
  if (n < 1) throw CatalogError("build_general_O: n must be positive");
  if (static_cast<int>(polys.size()) != n)
    throw CatalogError("build_general_O: expected one polynomial per even generator");
  std::vector<BasisElement> basis;
  for (int i = 1; i <= n; ++i) basis.push_back({"A" + std::to_string(i), Parity::Even});
  basis.push_back({"X", Parity::Odd});

  std::set<std::string> params;
  for (const auto& p : polys) {
    require_in_var(p, variant == 1 ? kL : kD,
                   variant == 1 ? "phi_i" : "psi_i", "general O");
    for (const auto& v : p.vars())
      if (v.kind == VarKind::Param) params.insert(v.name);
  }
  ConformalSuperAlgebra alg(std::move(basis), std::move(params));
  const int x = n;
  for (int i = 0; i < n; ++i) {
    const MultiPoly& p = polys[static_cast<std::size_t>(i)];
    if (p.is_zero()) continue;
    if (variant == 1)
      alg.set_bracket(i, x, x, p);
    else
      alg.set_bracket(x, x, i, p);
  }
  alg.complete_by_skew();
  return alg;
}

ConformalSuperAlgebra super_deform(const ConformalSuperAlgebra& alg, const std::string& x) {
  const int xi = alg.index_of(x);
  if (xi < 0) throw CatalogError("super_deform: unknown generator " + x);
  if (alg.parity(xi) != Parity::Even)
    throw CatalogError("super_deform: generator already odd");
  if (!alg.bracket_row(xi, xi).empty())
    throw CatalogError("super_deform: [x_l x] must vanish");
  std::vector<BasisElement> basis = alg.basis();
  basis[static_cast<std::size_t>(xi)].parity = Parity::Odd;
  ConformalSuperAlgebra out(std::move(basis), alg.params());
  for (int i = 0; i < alg.rank(); ++i)
    for (int j = 0; j < alg.rank(); ++j)
      for (const auto& [k, qk] : alg.bracket_row(i, j)) out.set_bracket(i, j, k, qk);
  return out;
}

BuiltFamily build(const std::string& tag, const SlotMap& slots) {
  if (tag == "Vir") return build_vir(slots);
  if (tag == "NS") return build_ns(slots);
  if (tag == "HV") return build_hv(slots);
  if (tag == "HVS") return build_hvs(slots);
  if (tag == "O1") return build_o1(slots);
  if (tag == "O2") return build_o2(slots);
  if (tag == "O1n" || tag == "O2n") return build_o_general(tag, slots);
  if (tag == "A1") return build_a1(slots);
  if (tag == "A2") return build_a2(slots);
  if (tag == "A3") return build_a3(slots);
  if (tag == "A4") return build_a4(slots);
  if (tag == "B0") return build_b(0, slots);
  if (tag == "B1") return build_b(1, slots);
  if (tag == "B2") return build_b(2, slots);
  if (tag == "C0") return build_c(0, slots);
  if (tag == "C1") return build_c(1, slots);
  if (tag == "C2") return build_c(2, slots);
  if (tag == "C3") return build_c(3, slots);
  if (tag == "D0") return build_d(0, slots);
  if (tag == "D1") return build_d(1, slots);
  if (tag == "D2") return build_d(2, slots);
  if (tag == "D3") return build_d(3, slots);
  if (tag == "D4") return build_d(4, slots);
  if (tag == "D5") return build_d(5, slots);
  if (tag == "Dbar") return build_dbar(slots);
  throw CatalogError("unknown family tag: " + tag);
}

const std::vector<std::string>& family_tags() {
  static const std::vector<std::string> tags = {
      "Vir", "NS", "HV", "HVS", "O1n", "O2n", "O1", "O2", "A1", "A2", "A3", "A4",
      "B0",  "B1", "B2", "C0",  "C1",  "C2",  "C3", "D0", "D1", "D2", "D3", "D4",
      "D5",  "Dbar"};
  return tags;
}

std::vector<BuiltFamily> catalog_all_symbolic() {
  std::vector<BuiltFamily> out;
  for (const auto& tag : family_tags()) {
    SlotMap slots;
    if (tag == "D0" || tag == "D1" || tag == "D2") {
      // Symbolic a, b and the a = -4 Condition-1 template with symbolic c as
      // a second instance exercising a nonzero Q.
      out.push_back(build(tag, slots));
      SlotMap with_q = {{"a", pc(-4)}, {"b", pc(0)},
                        {"q", condition1_Q(rat(-4), sym("c"), MultiPoly{})}};
      BuiltFamily f = build(tag, with_q);
      f.tag = tag + "(a=-4,Q!=0)";
      out.push_back(std::move(f));
      continue;
    }
    if (tag == "D3") {
      out.push_back(build(tag, slots));
      SlotMap with_q = {{"b", pc(0)},
                        {"q", condition1_Q(rat(0), sym("c"), sym("e"))}};
      BuiltFamily f = build(tag, with_q);
      f.tag = "D3(Q!=0)";
      out.push_back(std::move(f));
      continue;
    }
    out.push_back(build(tag, slots));
  }
  return out;
}

}  // namespace lcs
