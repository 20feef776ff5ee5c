#include "lcs/conformal_module.hpp"

#include <algorithm>

#include "lcs/parallel.hpp"
#include "lcs/parse.hpp"

namespace lcs {

namespace {
const VarId kD = VarId::partial();
const VarId kL = VarId::lambda();
const VarId kM = VarId::mu();
}  // namespace

ConformalModule::ConformalModule(ConformalSuperAlgebra alg,
                                 std::vector<BasisElement> gens)
    : alg_(std::move(alg)), gens_(std::move(gens)) {
  action_.assign(static_cast<std::size_t>(alg.rank()),
                 std::vector<std::map<int, MultiPoly>>(gens_.size()));
}

int ConformalModule::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < gens_.size(); ++i)
    if (gens_[i].name == name) return static_cast<int>(i);
  return -1;
}

void ConformalModule::set_action(int a, int u, int w, MultiPoly p) {
  auto& row = action_[static_cast<std::size_t>(a)][static_cast<std::size_t>(u)];
  if (p.is_zero()) {
    row.erase(w);
    return;
  }
  if (p.mentions(kM)) throw ModuleError("action polynomial mentions the variable m");
  if (alg_.parity(a) + parity(u) != parity(w))
    throw ModuleError("action " + alg_.name_of(a) + " on " + gens_[static_cast<std::size_t>(u)].name +
                      " -> " + gens_[static_cast<std::size_t>(w)].name + " violates the grading");
  row[w] = std::move(p);
}

void ConformalModule::set_action(const std::string& a, const std::string& u,
                                 const std::string& w, const MultiPoly& p) {
  const int ai = alg_.index_of(a);
  const int ui = index_of(u), wi = index_of(w);
  if (ai < 0 || ui < 0 || wi < 0) throw ModuleError("unknown generator name");
  set_action(ai, ui, wi, p);
}

const MultiPoly& ConformalModule::action(int a, int u, int w) const {
  static const MultiPoly zero;
  const auto& row = action_[static_cast<std::size_t>(a)][static_cast<std::size_t>(u)];
  auto it = row.find(w);
  return it == row.end() ? zero : it->second;
}

const std::map<int, MultiPoly>& ConformalModule::action_row(int a, int u) const {
  return action_[static_cast<std::size_t>(a)][static_cast<std::size_t>(u)];
}

std::vector<MultiPoly> ConformalModule::action_eval(const Element& x, const PolyRow& u) const {
  const std::map<VarId, MultiPoly> to_minus_l{{kD, -pl()}};
  const std::map<VarId, MultiPoly> to_d_plus_l{{kD, pd() + pl()}};
  std::vector<MultiPoly> out(gens_.size());
  for (int a = 0; a < alg_.rank(); ++a) {
    const auto& xa = x.coords[static_cast<std::size_t>(a)];
    if (xa.is_zero()) continue;
    const MultiPoly left = xa.substitute(to_minus_l);
    for (int v = 0; v < rank(); ++v) {
      const auto& uv = u[static_cast<std::size_t>(v)];
      if (uv.is_zero()) continue;
      const MultiPoly factor = left * uv.substitute(to_d_plus_l);
      for (const auto& [w, p] : action_row(a, v))
        out[static_cast<std::size_t>(w)] += factor * p;
    }
  }
  return out;
}

std::map<int, MultiPoly> ConformalModule::module_residuals(int a, int b, int v) const {
  const std::map<VarId, MultiPoly> l_to_lm{{kL, pl() + pm()}};      // act at l+m
  const std::map<VarId, MultiPoly> d_to_neg_lm{{kD, -pl() - pm()}};  // bracket coeff
  const std::map<VarId, MultiPoly> l_to_m{{kL, pm()}};
  const std::map<VarId, MultiPoly> d_shift_l{{kD, pd() + pl()}};
  const std::map<VarId, MultiPoly> d_shift_m{{kD, pd() + pm()}};

  std::map<int, MultiPoly> res;
  auto acc = [&](int w, MultiPoly p) {
    if (p.is_zero()) return;
    auto it = res.find(w);
    if (it == res.end())
      res.emplace(w, std::move(p));
    else {
      it->second += p;
      if (it->second.is_zero()) res.erase(it);
    }
  };

  // [a_l b]_{l+m} v: coordinate q(d) of the bracket contributes q(-l-m),
  // action polynomials evaluated at l+m.
  for (const auto& [c, q_ab] : alg_.bracket_row(a, b)) {
    const MultiPoly coeff = q_ab.substitute(d_to_neg_lm);
    for (const auto& [w, p] : action_row(c, v)) acc(w, coeff * p.substitute(l_to_lm));
  }
  // - a_l (b_m v)
  for (const auto& [u, p_bv] : action_row(b, v)) {
    const MultiPoly inner = p_bv.substitute(l_to_m).substitute(d_shift_l);
    for (const auto& [w, p_au] : action_row(a, u)) acc(w, -(inner * p_au));
  }
  // + (-1)^{|a||b|} b_m (a_l v)
  const bool both_odd =
      alg_.parity(a) == Parity::Odd && alg_.parity(b) == Parity::Odd;
  for (const auto& [u, p_av] : action_row(a, v)) {
    const MultiPoly inner = p_av.substitute(d_shift_m);
    for (const auto& [w, p_bu] : action_row(b, u)) {
      MultiPoly t = inner * p_bu.substitute(l_to_m);
      acc(w, both_odd ? -t : std::move(t));
    }
  }
  return res;
}

std::vector<ModuleViolation> ConformalModule::check_module(ExecMode mode) const {
  const int na = alg_.rank(), nv = rank();
  const std::size_t total =
      static_cast<std::size_t>(na) * static_cast<std::size_t>(na) * static_cast<std::size_t>(nv);
  std::vector<std::vector<ModuleViolation>> per(total);
  parallel_for_index(total, mode == ExecMode::Parallel, [&](std::size_t idx) {
    const int a = static_cast<int>(idx / (static_cast<std::size_t>(na) * nv));
    const int b = static_cast<int>((idx / nv) % static_cast<std::size_t>(na));
    const int v = static_cast<int>(idx % static_cast<std::size_t>(nv));
    for (auto& [w, r] : module_residuals(a, b, v)) per[idx].push_back({a, b, v, w, std::move(r)});
  });
  std::vector<ModuleViolation> out;
  for (auto& chunk : per)
    for (auto& rec : chunk) out.push_back(std::move(rec));
  return out;
}

bool ConformalModule::has_symbolic_params() const {
  if (alg_.has_symbolic_params()) return true;
  for (int a = 0; a < alg_.rank(); ++a)
    for (int u = 0; u < rank(); ++u)
      for (const auto& [w, p] : action_row(a, u)) {
        (void)w;
        if (p.mentions_kind(VarKind::Param)) return true;
      }
  return false;
}

// residual of [a_l b]_{l+m} v - a_l(b_m v) + (-1)^{|a||b|} b_m(a_l v) == 0.

namespace {

MultiPoly slot_or(const SlotMap& slots, const std::string& name, const MultiPoly& dflt) {
  auto it = slots.find(name);
  return it == slots.end() ? dflt : it->second;
}

MultiPoly sym(const std::string& n) { return pparam(n); }

void require_shape(bool ok, const std::string& tag, const std::string& what) {
  if (!ok) throw ModuleError("module " + tag + ": algebra lacks the required shape (" + what + ")");
}

// a_l v = (d + delta*l + eta) v helper
MultiPoly weight_action(const MultiPoly& delta, const MultiPoly& eta) {
  return pd() + delta * pl() + eta;
}

}  // namespace

BuiltModule build_module(const ConformalSuperAlgebra& alg, const std::string& tag,
                         const SlotMap& slots) {
  auto one_gen = [&](Parity par) {
    return ConformalModule(alg, {{"v", par}});
  };
  auto two_gen = [&]() {
    return ConformalModule(alg, {{"v0", Parity::Even}, {"v1", Parity::Odd}});
  };

  if (tag == "V") {  // rank-one module over Vir
    require_shape(alg.rank() == 1 && alg.parity(0) == Parity::Even, tag, "Vir");
    const MultiPoly delta = slot_or(slots, "delta", sym("delta"));
    const MultiPoly eta = slot_or(slots, "eta", sym("eta"));
    ConformalModule m = one_gen(Parity::Even);
    m.set_action(0, 0, 0, weight_action(delta, eta));
    return {tag, {{"delta", delta}, {"eta", eta}}, std::move(m)};
  }

  if (tag == "NSbar" || tag == "NSbarP") {
    const int L = alg.index_of("L"), G = alg.index_of("G");
    require_shape(L >= 0 && G >= 0 && alg.parity(G) == Parity::Odd, tag, "NS");
    const MultiPoly delta = slot_or(slots, "delta", sym("delta"));
    const MultiPoly eta = slot_or(slots, "eta", sym("eta"));
    if (tag == "NSbarP" && delta.is_constant() && delta.constant_value() == rat(1, 2))
      throw ModuleError("module NSbarP: delta = 1/2 is excluded");
    ConformalModule m = two_gen();
    if (tag == "NSbar") {
      m.set_action(L, 0, 0, weight_action(delta, eta));
      m.set_action(L, 1, 1, weight_action(delta + pc(1, 2), eta));
      m.set_action(G, 0, 1, pc(1));
      m.set_action(G, 1, 0, weight_action(pc(2) * delta, eta));
    } else {
      m.set_action(L, 0, 0, weight_action(delta, eta));
      m.set_action(L, 1, 1, weight_action(delta - pc(1, 2), eta));
      m.set_action(G, 0, 1, weight_action(pc(2) * delta - pc(1), eta));
      m.set_action(G, 1, 0, pc(1));
    }
    return {tag, {{"delta", delta}, {"eta", eta}}, std::move(m)};
  }

  const int A = alg.index_of("A"), B = alg.index_of("B"), X = alg.index_of("X");

  if (tag == "N") {
    require_shape(A >= 0 && B >= 0, tag, "generators A, B");
    const MultiPoly f = slot_or(slots, "f", MultiPoly{});
    const MultiPoly g = slot_or(slots, "g", MultiPoly{});
    if (f.is_zero() && g.is_zero())
      throw ModuleError("module N: f and g must not vanish simultaneously");
    for (const auto& v : (f + g).vars())
      if (v.kind != VarKind::Lambda && v.kind != VarKind::Param)
        throw ModuleError("module N: f, g must be polynomials in l only");
    ConformalModule m = one_gen(Parity::Even);
    if (!f.is_zero()) m.set_action(A, 0, 0, f);
    if (!g.is_zero()) m.set_action(B, 0, 0, g);
    return {tag, {{"f", f}, {"g", g}}, std::move(m)};
  }

  require_shape(A >= 0 && B >= 0 && X >= 0, tag, "generators A, B, X");

  if (tag == "M_A" || tag == "M_B") {
    const MultiPoly delta = slot_or(slots, "delta", sym("delta"));
    const MultiPoly eta = slot_or(slots, "eta", sym("eta"));
    ConformalModule m = one_gen(Parity::Even);
    m.set_action(tag == "M_A" ? A : B, 0, 0, weight_action(delta, eta));
    return {tag, {{"delta", delta}, {"eta", eta}}, std::move(m)};
  }

  if (tag == "M_plus" || tag == "M_minus") {
    // requires [X_l X] = 2 A_vir for a generator acting as Virasoro on X
    const MultiPoly delta = slot_or(slots, "delta", sym("delta"));
    const MultiPoly eta = slot_or(slots, "eta", sym("eta"));
    if (tag == "M_minus" && delta.is_constant() && delta.constant_value() == rat(1, 2))
      throw ModuleError("module M_minus: delta = 1/2 is excluded");
    ConformalModule m = two_gen();
    if (tag == "M_plus") {
      m.set_action(A, 0, 0, weight_action(delta, eta));
      m.set_action(A, 1, 1, weight_action(delta + pc(1, 2), eta));
      m.set_action(X, 0, 1, pc(1));
      m.set_action(X, 1, 0, weight_action(pc(2) * delta, eta));
    } else {
      m.set_action(A, 0, 0, weight_action(delta, eta));
      m.set_action(A, 1, 1, weight_action(delta - pc(1, 2), eta));
      m.set_action(X, 0, 1, weight_action(pc(2) * delta - pc(1), eta));
      m.set_action(X, 1, 0, pc(1));
    }
    return {tag, {{"delta", delta}, {"eta", eta}}, std::move(m)};
  }

  if (tag == "M_om") {
    const MultiPoly delta = slot_or(slots, "delta", sym("delta"));
    const MultiPoly eta = slot_or(slots, "eta", sym("eta"));
    const MultiPoly om = slot_or(slots, "om", MultiPoly{});
    // omega must vanish unless the even part is Heisenberg-Virasoro.
    const MultiPoly q_ab = alg.q(A, B, B);
    const MultiPoly hv = pd() + pl();
    const bool is_hv = (q_ab == hv) && alg.q(A, A, B).is_zero();
    if (!om.is_zero() && !is_hv)
      throw ModuleError("module M_om: nonzero omega requires the Heisenberg-Virasoro even part");
    ConformalModule m = one_gen(Parity::Even);
    m.set_action(A, 0, 0, weight_action(delta, eta));
    if (!om.is_zero()) m.set_action(B, 0, 0, om);
    return {tag, {{"delta", delta}, {"eta", eta}, {"om", om}}, std::move(m)};
  }

  if (tag == "M_ze") {
    const MultiPoly delta = slot_or(slots, "delta", sym("delta"));
    const MultiPoly zeta = slot_or(slots, "zeta", sym("zeta"));
    const MultiPoly c = slot_or(slots, "c", sym("c"));
    const MultiPoly eps = slot_or(slots, "eps", sym("eps"));
    if (c.is_zero() || eps.is_zero())
      throw ModuleError("module M_ze: c and eps must be nonzero");
    ConformalModule m = two_gen();
    m.set_action(A, 0, 0, weight_action(delta, zeta));
    m.set_action(A, 1, 1, weight_action(delta, zeta));
    m.set_action(B, 0, 0, c * eps);
    m.set_action(B, 1, 1, c * eps);
    m.set_action(X, 0, 1, c);
    m.set_action(X, 1, 0, eps);
    return {tag, {{"delta", delta}, {"zeta", zeta}, {"c", c}, {"eps", eps}}, std::move(m)};
  }

  if (tag.size() == 4 && tag.rfind("HVS", 0) == 0) {
    const int i = tag[3] - '0';
    if (i < 1 || i > 6) throw ModuleError("unknown HVS module index");
    const MultiPoly eta = slot_or(slots, "eta", sym("eta"));
    MultiPoly delta0, delta1, h;
    switch (i) {
      case 1:
        delta0 = slot_or(slots, "delta0", sym("delta0"));
        delta1 = delta0;
        h = pc(1);
        break;
      case 2:
        delta0 = slot_or(slots, "delta0", sym("delta0"));
        delta1 = delta0 - pc(1);
        h = pl();
        break;
      case 3:
        delta0 = slot_or(slots, "delta0", sym("delta0"));
        delta1 = delta0 - pc(2);
        h = pl() * (pd() - delta1 * pl() + eta);
        break;
      case 4:
        delta0 = pc(1);
        delta1 = pc(0);
        h = pd() + slot_or(slots, "k", sym("k")) * pl() + eta;
        break;
      case 5:
        delta0 = pc(1);
        delta1 = pc(-2);
        h = pl() * (pd() + pl() + eta) * (pd() + pc(2) * pl() + eta);
        break;
      case 6:
        delta0 = pc(3);
        delta1 = pc(0);
        h = pl() * (pd() + eta) * (pd() - pl() + eta);
        break;
    }
    ConformalModule m = two_gen();
    m.set_action(A, 0, 0, weight_action(delta0, eta));
    m.set_action(A, 1, 1, weight_action(delta1, eta));
    m.set_action(X, 0, 1, h);
    SlotMap used = {{"delta0", delta0}, {"delta1", delta1}, {"eta", eta}, {"h", h}};
    if (i == 4) used["k"] = slot_or(slots, "k", sym("k"));
    return {tag, std::move(used), std::move(m)};
  }

  throw ModuleError("unknown module family tag: " + tag);
}

int locality_bound(const ConformalModule& mod) {
  int bound = -1;
  for (int a = 0; a < mod.algebra().rank(); ++a)
    for (int u = 0; u < mod.rank(); ++u)
      for (const auto& [w, p] : mod.action_row(a, u)) {
        (void)w;
        bound = std::max(bound, p.degree_in(kL));
      }
  return bound;
}

bool locality_check(const ConformalModule& mod, int level) {
  const int bound = locality_bound(mod);
  for (int a = 0; a < mod.algebra().rank(); ++a)
    for (int u = 0; u < mod.rank(); ++u)
      for (int n = bound + 1; n <= level; ++n) {
        Rational factorial = 1;
        for (int t = 2; t <= n; ++t) factorial *= t;
        for (const auto& [w, p] : mod.action_row(a, u)) {
          (void)w;
          if (!p.coeff_in_var(kL, static_cast<unsigned>(n)).is_zero()) return false;
        }
      }
  return true;
}

bool rank1_closure_test(const MultiPoly& p, const ConformalModule& mod) {
  if (p.is_zero()) throw ModuleError("rank1_closure_test: p must be nonzero");
  if (mod.rank() != 1) throw ModuleError("rank1_closure_test: module must have one generator");
  if (mod.has_symbolic_params())
    throw ModuleError("rank1_closure_test: instantiate parameters first");
  if (p.is_constant()) return true;
  const MultiPoly shifted = p.substitute(kD, pd() + pl());
  for (int a = 0; a < mod.algebra().rank(); ++a) {
    const MultiPoly& act = mod.action(a, 0, 0);
    if (act.is_zero()) continue;
    auto [quot, rem] = MultiPoly::divide(shifted * act, p, kD);
    (void)quot;
    if (!rem.is_zero()) return false;
  }
  return true;
}

PolySubmodule submodule_closure(const ConformalModule& mod, std::vector<PolyRow> generators) {
  if (mod.has_symbolic_params())
    throw ModuleError("submodule_closure: instantiate parameters first");
  PolySubmodule cur = hermite_normal_form(std::move(generators));
  for (;;) {
    std::vector<PolyRow> rows = cur.basis;
    for (const auto& u : cur.basis) {
      for (int a = 0; a < mod.algebra().rank(); ++a) {
        const Element g = mod.algebra().basis_element(a);
        const std::vector<MultiPoly> image = mod.action_eval(g, u);
        int max_deg = -1;
        for (const auto& q : image) max_deg = std::max(max_deg, q.degree_in(kL));
        for (int n = 0; n <= max_deg; ++n) {
          PolyRow row(image.size());
          bool nonzero = false;
          for (std::size_t w = 0; w < image.size(); ++w) {
            row[w] = image[w].coeff_in_var(kL, static_cast<unsigned>(n));
            nonzero = nonzero || !row[w].is_zero();
          }
          if (nonzero) rows.push_back(std::move(row));
        }
      }
    }
    PolySubmodule next = hermite_normal_form(std::move(rows));
    if (next == cur) return cur;
    cur = std::move(next);
  }
}

bool is_proper(const ConformalModule& mod, const PolySubmodule& sub) {
  for (int u = 0; u < mod.rank(); ++u) {
    PolyRow unit(static_cast<std::size_t>(mod.rank()));
    unit[static_cast<std::size_t>(u)] = pc(1);
    if (!reduces_to_zero(sub, unit)) return true;
  }
  return false;
}

namespace {

// Rational roots of a univariate polynomial in d, via the rational root
// theorem on the integer-cleared form.
std::vector<Rational> rational_roots(const MultiPoly& p) {
  std::vector<Rational> roots;
  const int deg = p.degree_in(kD);
  if (deg <= 0) return roots;
  // clear denominators
  mpz_class scale = 1;
  for (int i = 0; i <= deg; ++i) {
    const MultiPoly c = p.coeff_in_var(kD, static_cast<unsigned>(i));
    if (!c.is_zero()) {
      mpz_class den = c.constant_value().get_den();
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), scale.get_mpz_t(), den.get_mpz_t());
      scale = scale / g * den;
    }
  }
  std::vector<mpz_class> coeffs(static_cast<std::size_t>(deg) + 1);
  for (int i = 0; i <= deg; ++i) {
    const MultiPoly c = p.coeff_in_var(kD, static_cast<unsigned>(i));
    coeffs[static_cast<std::size_t>(i)] =
        c.is_zero() ? mpz_class(0) : mpz_class(c.constant_value() * scale);
  }
  int low = 0;
  while (low <= deg && coeffs[static_cast<std::size_t>(low)] == 0) ++low;
  if (low > 0) roots.push_back(rat(0));
  if (low > deg) return roots;
  const mpz_class a0 = abs(coeffs[static_cast<std::size_t>(low)]);
  const mpz_class an = abs(coeffs[static_cast<std::size_t>(deg)]);
  auto divisors = [](const mpz_class& n) {
    std::vector<mpz_class> out;
    for (mpz_class k = 1; k * k <= n; ++k)
      if (n % k == 0) {
        out.push_back(k);
        if (k * k != n) out.push_back(n / k);
      }
    return out;
  };
  for (const auto& num : divisors(a0))
    for (const auto& den : divisors(an))
      for (int sign : {1, -1}) {
        Rational r(sign * num, den);
        r.canonicalize();
        Rational value = 0, power = 1;
        for (int i = 0; i <= deg; ++i) {
          value += Rational(coeffs[static_cast<std::size_t>(i)]) * power;
          power *= r;
        }
        if (value == 0 && std::find(roots.begin(), roots.end(), r) == roots.end())
          roots.push_back(r);
      }
  std::sort(roots.begin(), roots.end());
  return roots;
}

void root_products(const std::vector<Rational>& roots, int degree_bound, std::size_t idx,
                   const MultiPoly& acc, int deg, std::vector<MultiPoly>& out) {
  if (deg > 0) out.push_back(acc);
  if (deg == degree_bound || idx >= roots.size()) return;
  for (std::size_t i = idx; i < roots.size(); ++i)
    root_products(roots, degree_bound, i,
                  acc * (pd() - MultiPoly::constant(roots[i])), deg + 1, out);
}

}  // namespace

ProbeResult irreducibility_probe(const ConformalModule& mod, int degree_bound,
                                 const std::vector<PolyRow>& extra_candidates) {
  if (mod.rank() > 2) throw ModuleError("irreducibility_probe: rank must be <= 2");
  if (mod.has_symbolic_params())
    throw ModuleError("irreducibility_probe: instantiate parameters first");

  ProbeResult result;

  // Root set: rational roots of the lambda-free parts of all action
  // polynomials.
  std::set<Rational> root_set;
  for (int a = 0; a < mod.algebra().rank(); ++a)
    for (int u = 0; u < mod.rank(); ++u)
      for (const auto& [w, p] : mod.action_row(a, u)) {
        (void)w;
        for (const auto& r : rational_roots(p.coeff_in_var(kL, 0))) root_set.insert(r);
      }

  std::vector<std::pair<std::string, PolyRow>> candidates;
  for (int u = 0; u < mod.rank(); ++u) {
    PolyRow unit(static_cast<std::size_t>(mod.rank()));
    unit[static_cast<std::size_t>(u)] = pc(1);
    candidates.emplace_back(mod.generators()[static_cast<std::size_t>(u)].name,
                            std::move(unit));
  }
  std::vector<MultiPoly> polys;
  root_products(std::vector<Rational>(root_set.begin(), root_set.end()), degree_bound, 0,
                pc(1), 0, polys);
  std::sort(polys.begin(), polys.end(), [](const MultiPoly& x, const MultiPoly& y) {
    if (x.degree_in(kD) != y.degree_in(kD)) return x.degree_in(kD) < y.degree_in(kD);
    return format_poly(x) < format_poly(y);
  });
  for (const auto& p : polys)
    for (int u = 0; u < mod.rank(); ++u) {
      PolyRow row(static_cast<std::size_t>(mod.rank()));
      row[static_cast<std::size_t>(u)] = p;
      std::string desc = "(" + format_poly(p) + ")*" +
                         mod.generators()[static_cast<std::size_t>(u)].name;
      candidates.emplace_back(std::move(desc), std::move(row));
    }
  for (const auto& row : extra_candidates) {
    std::string desc = "user(";
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) desc += ", ";
      desc += format_poly(row[i]);
    }
    desc += ")";
    candidates.emplace_back(std::move(desc), row);
  }

  for (auto& [desc, row] : candidates) {
    ++result.candidates_tried;
    bool zero = true;
    for (const auto& e : row) zero = zero && e.is_zero();
    if (zero) continue;
    PolySubmodule closure = submodule_closure(mod, {row});
    if (closure.is_zero() || !is_proper(mod, closure)) continue;
    bool duplicate = false;
    for (const auto& w : result.witnesses)
      if (w.submodule == closure) {
        duplicate = true;
        break;
      }
    if (duplicate) continue;
    result.reducible = true;
    result.witnesses.push_back({desc, row, std::move(closure)});
  }
  return result;
}

}  // namespace lcs
