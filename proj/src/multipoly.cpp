#include "lcs/multipoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace lcs {

bool valid_var_name(const std::string& name) {
  if (name.empty()) return false;
  if (name[0] < 'a' || name[0] > 'z') return false;
  for (char c : name) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
    if (!ok) return false;
  }
  return true;
}

VarId VarId::param(std::string n) {
  if (!valid_var_name(n))
    throw std::invalid_argument("invalid variable name: " + n);
  if (n == "d" || n == "l" || n == "m")
    throw std::invalid_argument("variable name '" + n + "' is reserved");
  return {VarKind::Param, std::move(n)};
}

MultiPoly MultiPoly::constant(const Rational& c) {
  MultiPoly p;
  if (c != 0) p.terms_.emplace(Monomial{}, c);
  return p;
}

MultiPoly MultiPoly::var(const VarId& v, unsigned exp) {
  if (exp == 0) return constant(1);
  MultiPoly p;
  p.terms_.emplace(Monomial{{v, exp}}, rat(1));
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rational MultiPoly::constant_value() const {
  if (terms_.empty()) return rat(0);
  if (!is_constant()) throw std::logic_error("constant_value on non-constant polynomial");
  return terms_.begin()->second;
}

void MultiPoly::add_term(Monomial m, const Rational& c) {
  if (c == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(std::move(m), c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly MultiPoly::operator+(const MultiPoly& q) const {
  MultiPoly r = *this;
  r += q;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& q) {
  for (const auto& [m, c] : q.terms_) add_term(m, c);
  return *this;
}

MultiPoly MultiPoly::operator-(const MultiPoly& q) const {
  MultiPoly r = *this;
  r -= q;
  return r;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& q) {
  for (const auto& [m, c] : q.terms_) add_term(m, -c);
  return *this;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

namespace {

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial r;
  r.reserve(a.size() + b.size());
  auto ia = a.begin(), ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (ia->first < ib->first) {
      r.push_back(*ia++);
    } else if (ib->first < ia->first) {
      r.push_back(*ib++);
    } else {
      r.emplace_back(ia->first, ia->second + ib->second);
      ++ia;
      ++ib;
    }
  }
  r.insert(r.end(), ia, a.end());
  r.insert(r.end(), ib, b.end());
  return r;
}

}  // namespace

MultiPoly MultiPoly::operator*(const MultiPoly& q) const {
  MultiPoly r;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : q.terms_) r.add_term(mono_mul(ma, mb), ca * cb);
  return r;
}

MultiPoly MultiPoly::scaled(const Rational& c) const {
  MultiPoly r;
  if (c == 0) return r;
  for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
  return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly r = constant(1);
  MultiPoly base = *this;
  while (e > 0) {
    if (e & 1u) r = r * base;
    base = base * base;
    e >>= 1u;
  }
  return r;
}

MultiPoly MultiPoly::substitute(const std::map<VarId, MultiPoly>& images) const {
  MultiPoly result;
  // Cache of image powers, grown on demand.
  std::map<VarId, std::vector<MultiPoly>> powers;
  for (const auto& [v, img] : images) powers[v] = {MultiPoly::constant(1), img};

  for (const auto& [m, c] : terms_) {
    MultiPoly term = MultiPoly::constant(c);
    for (const auto& [v, e] : m) {
      auto it = powers.find(v);
      if (it == powers.end()) {
        term = term * MultiPoly::var(v, e);
      } else {
        auto& pw = it->second;
        while (pw.size() <= e) pw.push_back(pw.back() * pw[1]);
        term = term * pw[e];
      }
    }
    result += term;
  }
  return result;
}

MultiPoly MultiPoly::substitute(const VarId& v, const MultiPoly& image) const {
  return substitute(std::map<VarId, MultiPoly>{{v, image}});
}

MultiPoly MultiPoly::coeff_in_var(const VarId& v, unsigned k) const {
  MultiPoly r;
  for (const auto& [m, c] : terms_) {
    unsigned ev = 0;
    Monomial rest;
    rest.reserve(m.size());
    for (const auto& [w, e] : m) {
      if (w == v)
        ev = e;
      else
        rest.push_back({w, e});
    }
    if (ev == k) r.add_term(std::move(rest), c);
  }
  return r;
}

int MultiPoly::degree_in(const VarId& v) const {
  int deg = -1;
  for (const auto& [m, c] : terms_) {
    (void)c;
    int ev = 0;
    for (const auto& [w, e] : m)
      if (w == v) ev = static_cast<int>(e);
    deg = std::max(deg, ev);
  }
  return terms_.empty() ? -1 : deg;
}

int MultiPoly::total_degree() const {
  if (terms_.empty()) return -1;
  int deg = 0;
  for (const auto& [m, c] : terms_) {
    (void)c;
    int t = 0;
    for (const auto& [w, e] : m) {
      (void)w;
      t += static_cast<int>(e);
    }
    deg = std::max(deg, t);
  }
  return deg;
}

std::set<VarId> MultiPoly::vars() const {
  std::set<VarId> s;
  for (const auto& [m, c] : terms_) {
    (void)c;
    for (const auto& [v, e] : m) {
      (void)e;
      s.insert(v);
    }
  }
  return s;
}

bool MultiPoly::mentions(const VarId& v) const {
  for (const auto& [m, c] : terms_) {
    (void)c;
    for (const auto& [w, e] : m) {
      (void)e;
      if (w == v) return true;
    }
  }
  return false;
}

bool MultiPoly::mentions_kind(VarKind k) const {
  for (const auto& [m, c] : terms_) {
    (void)c;
    for (const auto& [w, e] : m) {
      (void)e;
      if (w.kind == k) return true;
    }
  }
  return false;
}

Rational MultiPoly::eval(const std::map<VarId, Rational>& point) const {
  Rational total = 0;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (const auto& [v, e] : m) {
      auto it = point.find(v);
      if (it == point.end())
        throw std::invalid_argument("eval: no value for variable " + v.name);
      for (unsigned i = 0; i < e; ++i) t *= it->second;
    }
    total += t;
  }
  return total;
}

std::pair<MultiPoly, MultiPoly> MultiPoly::divide(const MultiPoly& p, const MultiPoly& q,
                                                  const VarId& v) {
  const int dq = q.degree_in(v);
  if (dq < 1)
    throw DivisionError("divisor must have positive degree in the division variable");
  const MultiPoly lead = q.coeff_in_var(v, static_cast<unsigned>(dq));
  if (!lead.is_constant() || lead.is_zero())
    throw DivisionError("divisor leading coefficient is not a nonzero rational constant");
  const Rational lc = lead.constant_value();

  MultiPoly quotient;
  MultiPoly rem = p;
  int dr = rem.degree_in(v);
  while (dr >= dq) {
    const MultiPoly top = rem.coeff_in_var(v, static_cast<unsigned>(dr));
    const MultiPoly t =
        top.scaled(1 / lc) * MultiPoly::var(v, static_cast<unsigned>(dr - dq));
    quotient += t;
    rem -= t * q;
    const int next = rem.degree_in(v);
    // Degree strictly decreases because the leading v-coefficient cancels.
    if (next >= dr && !rem.is_zero())
      throw DivisionError("division failed to reduce degree");
    dr = next;
  }
  return {quotient, rem};
}

}  // namespace lcs
