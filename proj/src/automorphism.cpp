#include "lcs/automorphism.hpp"

#include <random>

#include "lcs/parse.hpp"

namespace lcs {

namespace {

const VarId kD = VarId::partial();

void validate_constant_slot(const MultiPoly& k, const std::string& name) {
  if (k.is_zero()) throw AutError("automorphism slot " + name + " must be nonzero");
  for (const auto& v : k.vars())
    if (v.kind != VarKind::Param)
      throw AutError("automorphism slot " + name + " must be a constant");
}

}  // namespace

GradedAutomorphism GradedAutomorphism::identity() {
  return {pc(1), pc(1), pc(1), MultiPoly{}};
}

GradedAutomorphism GradedAutomorphism::make(MultiPoly k1, MultiPoly k2, MultiPoly k3,
                                            MultiPoly g) {
  validate_constant_slot(k1, "k1");
  validate_constant_slot(k2, "k2");
  validate_constant_slot(k3, "k3");
  for (const auto& v : g.vars())
    if (v.kind != VarKind::Param && v != kD)
      throw AutError("automorphism slot g must be a polynomial in d");
  return {std::move(k1), std::move(k2), std::move(k3), std::move(g)};
}

AutCheck is_automorphism(const ConformalSuperAlgebra& alg, const GradedAutomorphism& s) {
  if (alg.rank() != 3 || alg.parity(0) != Parity::Even || alg.parity(1) != Parity::Even ||
      alg.parity(2) != Parity::Odd)
    throw AutError("is_automorphism expects the rank (2+1) basis (A, B, X)");

  // sigma as coordinate images of the generators
  std::vector<Element> image(3, alg.zero_element());
  image[0].coords[0] = s.k1;
  image[0].coords[1] = s.g;
  image[1].coords[1] = s.k2;
  image[2].coords[2] = s.k3;

  AutCheck out;
  for (int u = 0; u < 3; ++u) {
    for (int v = 0; v < 3; ++v) {
      // sigma([u_l v]): apply sigma to each target coordinate
      std::vector<MultiPoly> lhs(3);
      for (const auto& [k, q] : alg.bracket_row(u, v))
        for (int w = 0; w < 3; ++w) {
          const MultiPoly& m = image[static_cast<std::size_t>(k)].coords[static_cast<std::size_t>(w)];
          if (!m.is_zero()) lhs[static_cast<std::size_t>(w)] += q * m;
        }
      const std::vector<MultiPoly> rhs =
          alg.bracket_eval(image[static_cast<std::size_t>(u)], image[static_cast<std::size_t>(v)]);
      for (int w = 0; w < 3; ++w) {
        MultiPoly residual = lhs[static_cast<std::size_t>(w)] - rhs[static_cast<std::size_t>(w)];
        if (!residual.is_zero()) {
          out.ok = false;
          out.violations.push_back({u, v, w, std::move(residual)});
        }
      }
    }
  }
  return out;
}

GradedAutomorphism compose(const GradedAutomorphism& s, const GradedAutomorphism& t) {
  GradedAutomorphism r;
  r.k1 = s.k1 * t.k1;
  r.k2 = s.k2 * t.k2;
  r.k3 = s.k3 * t.k3;
  r.g = t.k1 * s.g + s.k2 * t.g;
  return r;
}

GradedAutomorphism invert(const GradedAutomorphism& s) {
  for (const MultiPoly* k : {&s.k1, &s.k2, &s.k3})
    if (!k->is_constant() || k->is_zero())
      throw AutError("invert requires nonzero rational diagonal constants");
  const Rational k1 = s.k1.constant_value(), k2 = s.k2.constant_value(),
                 k3 = s.k3.constant_value();
  GradedAutomorphism r;
  r.k1 = pc(1).scaled(1 / k1);
  r.k2 = pc(1).scaled(1 / k2);
  r.k3 = pc(1).scaled(1 / k3);
  r.g = s.g.scaled(-1 / (k1 * k2));
  return r;
}

namespace {

Rational require_rational(const SlotMap& slots, const std::string& name,
                          const std::string& tag) {
  auto it = slots.find(name);
  if (it == slots.end() || !it->second.is_constant())
    throw AutError("check_family(" + tag + "): slot " + name +
                   " must be an instantiated rational");
  return it->second.constant_value();
}

bool is_one(const MultiPoly& p) { return p.is_constant() && !p.is_zero() && p.constant_value() == 1; }

bool square_equals(const MultiPoly& x, const MultiPoly& y) { return (x * x - y).is_zero(); }

// g == c * h for some constant c (h nonzero), or g == 0.
bool is_multiple_of(const MultiPoly& g, const MultiPoly& h) {
  if (g.is_zero()) return true;
  if (h.is_zero()) return false;
  const auto& [mono, coeff] = *h.terms().begin();
  MultiPoly gc;
  for (const auto& [gm, gco] : g.terms())
    if (gm == mono) gc = MultiPoly::constant(gco);
  if (gc.is_zero()) return false;
  return (g - h.scaled(gc.constant_value() / coeff)).is_zero();
}

// g supported on the monomial degrees allowed by the a-indexed shape
// a1 d + [a=1] a0 + [a=0] a2 d^2 + [a=-1] a3 d^3.
bool g_shape_allowed(const MultiPoly& g, const Rational& a) {
  std::set<int> allowed = {1};
  if (a == 1) allowed.insert(0);
  if (a == 0) allowed.insert(2);
  if (a == -1) allowed.insert(3);
  const int deg = g.degree_in(kD);
  for (int i = 0; i <= std::max(deg, 0); ++i) {
    if (g.coeff_in_var(kD, static_cast<unsigned>(i)).is_zero()) continue;
    if (!allowed.count(i)) return false;
  }
  return true;
}

FamilyVerdict fail(const std::string& reason) { return {false, reason}; }
FamilyVerdict pass() { return {true, ""}; }

// Even-block membership for the type-D even part, by (a, b, Q) sub-case.
FamilyVerdict check_d_even_block(const Rational& a, const Rational& b, const MultiPoly& Q,
                                 const GradedAutomorphism& s) {
  if (!is_one(s.k1)) return fail("k1 must be 1");
  if (b != 0) {
    // g = k (1 - (a-1)/b d)
    const MultiPoly shape = pc(1) - pd().scaled((a - 1) / b);
    if (!is_multiple_of(s.g, shape)) return fail("g must be a multiple of 1 - (a-1)/b d");
    return pass();
  }
  const bool small_a = (a == 1 || a == 0 || a == -1);
  if (!small_a) {
    if (!is_multiple_of(s.g, pd())) return fail("g must be a multiple of d");
  } else {
    if (!g_shape_allowed(s.g, a)) return fail("g has a monomial outside the a-indexed shape");
  }
  if (!Q.is_zero() && !is_one(s.k2)) return fail("k2 must be 1 when Q is nonzero");
  return pass();
}

}  // namespace

FamilyVerdict check_family(const BuiltFamily& fam, const GradedAutomorphism& s) {
  const std::string& tag = fam.tag;
  auto slot = [&](const std::string& n) {
    auto it = fam.slots.find(n);
    return it == fam.slots.end() ? MultiPoly{} : it->second;
  };

  if (tag == "A1" || tag == "A2") {
    if (!square_equals(s.k1, s.k2)) return fail("k2 must equal k1^2");
    if (tag == "A1" && !slot("phi1").is_zero() && !is_one(s.k1))
      return fail("k1 must be 1 when phi1 is nonzero");
    if (tag == "A2" && !slot("psi").is_zero() && !square_equals(s.k3, s.k1 * s.k1))
      return fail("k3^2 must equal k1^2 when psi is nonzero");
    return pass();
  }
  if (tag == "A3") {
    if (!is_one(s.k1)) return fail("k1 must be 1");
    const MultiPoly shape = slot("phi3").substitute(VarId::lambda(), -pd());
    if (!is_multiple_of(s.g, shape)) return fail("g must be a multiple of phi3(-d)");
    if (!square_equals(s.k3, s.k2)) return fail("k3^2 must equal k2");
    return pass();
  }
  if (tag == "A4") {
    if (!is_one(s.k1)) return fail("k1 must be 1");
    const MultiPoly shape = slot("p").substitute(VarId::lambda(), -pd());
    if (!is_multiple_of(s.g, shape)) return fail("g must be a multiple of p(-d)");
    return pass();
  }
  if (tag == "B1" || tag == "B2") {
    if (!is_one(s.k1) || !is_one(s.k2)) return fail("even block must be the identity");
    if (!s.g.is_zero()) return fail("g must vanish");
    if (tag == "B2" && !square_equals(s.k3, pc(1))) return fail("k3^2 must be 1");
    return pass();
  }
  if (tag == "C1" || tag == "C2" || tag == "C3") {
    if (!is_one(s.k1)) return fail("k1 must be 1");
    if (!s.g.is_zero()) return fail("g must vanish");
    if (tag == "C2" && !square_equals(s.k3, pc(1))) return fail("k3^2 must be 1");
    if (tag == "C3" && !is_one(s.k2)) return fail("k2 must be 1");
    return pass();
  }
  if (tag == "D1" || tag == "D2" || tag == "D3" || tag.rfind("D1(", 0) == 0 ||
      tag.rfind("D2(", 0) == 0 || tag.rfind("D3(", 0) == 0) {
    const Rational a = tag[1] == '3' ? rat(0) : require_rational(fam.slots, "a", tag);
    const Rational b = require_rational(fam.slots, "b", tag);
    FamilyVerdict even = check_d_even_block(a, b, slot("q"), s);
    if (!even.member) return even;
    if (tag[1] != '1' && !square_equals(s.k3, s.k2)) return fail("k3^2 must equal k2");
    return pass();
  }
  if (tag == "D4") {
    const MultiPoly gamma = slot("ga");
    if (!gamma.is_zero()) {
      if (!is_one(s.k1) || !is_one(s.k2)) return fail("even block must be the identity");
      if (!s.g.is_zero()) return fail("g must vanish when gamma is nonzero");
      return pass();
    }
    return check_d_even_block(rat(1), rat(0), MultiPoly{}, s);
  }
  if (tag == "D5" || tag == "HVS") {
    FamilyVerdict even = check_d_even_block(rat(1), rat(0), MultiPoly{}, s);
    if (!even.member) return even;
    if (!square_equals(s.k3, s.k2)) return fail("k3^2 must equal k2");
    return pass();
  }
  throw AutError("check_family: no automorphism-group description for family " + tag);
}

namespace {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  Rational nonzero_constant() {
    static const std::vector<Rational> pool = {rat(1),  rat(-1), rat(2),    rat(-2),
                                               rat(3),  rat(-3), rat(1, 2), rat(-1, 2)};
    return pool[next(pool.size())];
  }
  Rational any_constant() {
    static const std::vector<Rational> pool = {rat(0),  rat(1),  rat(-1),   rat(2),
                                               rat(-2), rat(3),  rat(1, 2), rat(-1, 2)};
    return pool[next(pool.size())];
  }
  MultiPoly poly_deg3() {
    MultiPoly g;
    for (unsigned i = 0; i <= 3; ++i)
      g += MultiPoly::var(kD, i).scaled(any_constant());
    return g;
  }
  std::size_t next(std::size_t bound) {
    return static_cast<std::size_t>(rng_() % bound);
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace

GradedAutomorphism sample_member(const BuiltFamily& fam, std::uint64_t seed) {
  Sampler s(seed);
  const std::string& tag = fam.tag;
  auto slot = [&](const std::string& n) {
    auto it = fam.slots.find(n);
    return it == fam.slots.end() ? MultiPoly{} : it->second;
  };

  MultiPoly k1 = pc(1), k2 = pc(1), k3 = MultiPoly::constant(s.nonzero_constant());
  MultiPoly g;

  if (tag == "A1" || tag == "A2") {
    const bool pinned = tag == "A1" && !slot("phi1").is_zero();
    k1 = pinned ? pc(1) : MultiPoly::constant(s.nonzero_constant());
    k2 = k1 * k1;
    g = s.poly_deg3();
    if (tag == "A2" && !slot("psi").is_zero())
      k3 = s.next(2) == 0 ? k1 : -k1;
  } else if (tag == "A3") {
    g = slot("phi3").substitute(VarId::lambda(), -pd()).scaled(s.any_constant());
    k2 = k3 * k3;
  } else if (tag == "A4") {
    g = slot("p").substitute(VarId::lambda(), -pd()).scaled(s.any_constant());
    k2 = MultiPoly::constant(s.nonzero_constant());
  } else if (tag == "B1") {
    // identity even block
  } else if (tag == "B2") {
    k3 = s.next(2) == 0 ? pc(1) : pc(-1);
  } else if (tag == "C1") {
    k2 = MultiPoly::constant(s.nonzero_constant());
  } else if (tag == "C2") {
    k2 = MultiPoly::constant(s.nonzero_constant());
    k3 = s.next(2) == 0 ? pc(1) : pc(-1);
  } else if (tag == "C3") {
    // k1 = k2 = 1
  } else if (tag[0] == 'D') {
    const Rational a = tag[1] == '3' ? rat(0)
                       : tag[1] == '4' || tag[1] == '5'
                           ? rat(1)
                           : slot("a").constant_value();
    const Rational b = tag[1] == '4' || tag[1] == '5' ? rat(0) : slot("b").constant_value();
    const MultiPoly Q = slot("q");
    const MultiPoly gamma = tag[1] == '4' ? slot("ga") : MultiPoly{};

    if (tag[1] == '4' && !gamma.is_zero()) {
      // diag(1, 1, k3)
    } else {
      if (b != 0) {
        g = (pc(1) - pd().scaled((a - 1) / b)).scaled(s.any_constant());
      } else if (a == 1 || a == 0 || a == -1) {
        g = pd().scaled(s.any_constant());
        if (a == 1) g += MultiPoly::constant(s.any_constant());
        if (a == 0) g += MultiPoly::var(kD, 2).scaled(s.any_constant());
        if (a == -1) g += MultiPoly::var(kD, 3).scaled(s.any_constant());
      } else {
        g = pd().scaled(s.any_constant());
      }
      if (!Q.is_zero())
        k2 = pc(1);
      else
        k2 = MultiPoly::constant(s.nonzero_constant());
      if (tag[1] == '2' || tag[1] == '3' || tag[1] == '5') {
        // k3^2 = k2: draw k3 first
        k2 = k3 * k3;
        if (!Q.is_zero()) {
          k3 = s.next(2) == 0 ? pc(1) : pc(-1);
          k2 = pc(1);
        }
      }
    }
  } else {
    throw AutError("sample_member: no sampler for family " + tag);
  }
  return GradedAutomorphism::make(k1, k2, k3, g);
}

SampleReport group_axiom_sample(const BuiltFamily& fam, int count, std::uint64_t seed) {
  SampleReport report;
  std::vector<GradedAutomorphism> members;
  for (int i = 0; i < count; ++i) {
    GradedAutomorphism m = sample_member(fam, seed + static_cast<std::uint64_t>(i) * 7919u);
    ++report.samples;
    const AutCheck chk = is_automorphism(fam.algebra, m);
    if (!chk.ok) {
      ++report.membership_failures;
      report.details.push_back("sample " + std::to_string(i) + " failed is_automorphism");
    }
    if (!check_family(fam, m).member) {
      ++report.membership_failures;
      report.details.push_back("sample " + std::to_string(i) + " rejected by check_family");
    }
    members.push_back(std::move(m));
  }
  for (std::size_t i = 0; i + 1 < members.size(); ++i) {
    const GradedAutomorphism c = compose(members[i], members[i + 1]);
    if (!is_automorphism(fam.algebra, c).ok || !check_family(fam, c).member) {
      ++report.closure_failures;
      report.details.push_back("composition " + std::to_string(i) + " left the group");
    }
  }
  for (std::size_t i = 0; i < members.size(); ++i) {
    const GradedAutomorphism inv = invert(members[i]);
    if (!is_automorphism(fam.algebra, inv).ok || !check_family(fam, inv).member) {
      ++report.closure_failures;
      report.details.push_back("inverse " + std::to_string(i) + " left the group");
    }
    const GradedAutomorphism unit = compose(inv, members[i]);
    if (!(unit.k1 == pc(1) && unit.k2 == pc(1) && unit.k3 == pc(1) && unit.g.is_zero())) {
      ++report.closure_failures;
      report.details.push_back("inverse " + std::to_string(i) + " is not a two-sided inverse");
    }
  }
  return report;
}

}  // namespace lcs
