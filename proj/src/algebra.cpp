#include "lcs/algebra.hpp"

#include <stdexcept>

#include "lcs/parallel.hpp"

namespace lcs {

bool Element::is_zero() const {
  for (const auto& c : coords)
    if (!c.is_zero()) return false;
  return true;
}

ConformalSuperAlgebra::ConformalSuperAlgebra(std::vector<BasisElement> basis,
                                             std::set<std::string> params)
    : basis_(std::move(basis)), params_(std::move(params)) {
  std::set<std::string> seen;
  for (const auto& b : basis_) {
    if (!seen.insert(b.name).second)
      throw std::invalid_argument("duplicate basis name: " + b.name);
  }
  for (const auto& p : params_) VarId::param(p);  // validates names
  structure_.assign(basis_.size(), std::vector<std::map<int, MultiPoly>>(basis_.size()));
}

int ConformalSuperAlgebra::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (basis_[i].name == name) return static_cast<int>(i);
  return -1;
}

void ConformalSuperAlgebra::validate_poly(const MultiPoly& q) const {
  for (const auto& v : q.vars()) {
    if (v.kind == VarKind::Mu)
      throw std::invalid_argument("structure polynomial mentions the variable m");
    if (v.kind == VarKind::Param && !params_.count(v.name))
      throw std::invalid_argument("undeclared parameter '" + v.name + "'");
  }
}

void ConformalSuperAlgebra::set_bracket(int i, int j, int k, MultiPoly q) {
  auto& row = structure_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  if (q.is_zero()) {
    row.erase(k);
    return;
  }
  validate_poly(q);
  if (parity(i) + parity(j) != parity(k))
    throw std::invalid_argument("bracket [" + name_of(i) + "," + name_of(j) +
                                "] -> " + name_of(k) + " violates the grading");
  row[k] = std::move(q);
}

void ConformalSuperAlgebra::set_bracket(const std::string& i, const std::string& j,
                                        const std::string& k, const MultiPoly& q) {
  const int ii = index_of(i), jj = index_of(j), kk = index_of(k);
  if (ii < 0 || jj < 0 || kk < 0) throw std::invalid_argument("unknown basis name");
  set_bracket(ii, jj, kk, q);
}

void ConformalSuperAlgebra::complete_by_skew() {
  const std::map<VarId, MultiPoly> flip{{VarId::lambda(), -pd() - pl()}};
  for (int i = 0; i < rank(); ++i) {
    for (int j = 0; j < rank(); ++j) {
      if (i == j) continue;
      auto& ij = structure_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      auto& ji = structure_[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
      if (!ij.empty() && ji.empty()) {
        const bool both_odd = parity(i) == Parity::Odd && parity(j) == Parity::Odd;
        for (const auto& [k, q] : ij) {
          MultiPoly image = q.substitute(flip);
          ji[k] = both_odd ? image : -image;
        }
      }
    }
  }
}

const MultiPoly& ConformalSuperAlgebra::q(int i, int j, int k) const {
  static const MultiPoly zero;
  const auto& row = structure_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  auto it = row.find(k);
  return it == row.end() ? zero : it->second;
}

const std::map<int, MultiPoly>& ConformalSuperAlgebra::bracket_row(int i, int j) const {
  return structure_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
}

Element ConformalSuperAlgebra::zero_element() const {
  Element e;
  e.coords.assign(basis_.size(), MultiPoly{});
  return e;
}

Element ConformalSuperAlgebra::basis_element(int i) const {
  Element e = zero_element();
  e.coords[static_cast<std::size_t>(i)] = pc(1);
  return e;
}

std::optional<Parity> ConformalSuperAlgebra::element_parity(const Element& x) const {
  std::optional<Parity> p;
  for (int i = 0; i < rank(); ++i) {
    if (x.coords[static_cast<std::size_t>(i)].is_zero()) continue;
    if (!p)
      p = parity(i);
    else if (*p != parity(i))
      return std::nullopt;
  }
  return p;
}

std::vector<MultiPoly> ConformalSuperAlgebra::bracket_eval(const Element& x,
                                                           const Element& y) const {
  if (!element_parity(x) && !x.is_zero())
    throw std::invalid_argument("bracket_eval: left operand has mixed parity");
  if (!element_parity(y) && !y.is_zero())
    throw std::invalid_argument("bracket_eval: right operand has mixed parity");
  const std::map<VarId, MultiPoly> to_minus_l{{VarId::partial(), -pl()}};
  const std::map<VarId, MultiPoly> to_d_plus_l{{VarId::partial(), pd() + pl()}};

  std::vector<MultiPoly> out(basis_.size());
  for (int i = 0; i < rank(); ++i) {
    const auto& xi = x.coords[static_cast<std::size_t>(i)];
    if (xi.is_zero()) continue;
    const MultiPoly left = xi.substitute(to_minus_l);
    for (int j = 0; j < rank(); ++j) {
      const auto& yj = y.coords[static_cast<std::size_t>(j)];
      if (yj.is_zero()) continue;
      const MultiPoly factor = left * yj.substitute(to_d_plus_l);
      for (const auto& [k, qk] : bracket_row(i, j))
        out[static_cast<std::size_t>(k)] += factor * qk;
    }
  }
  return out;
}

std::vector<Element> ConformalSuperAlgebra::jth_products(int i, int j) const {
  int max_deg = -1;
  for (const auto& [k, qk] : bracket_row(i, j))
    max_deg = std::max(max_deg, qk.degree_in(VarId::lambda()));
  std::vector<Element> out;
  Rational factorial = 1;
  for (int n = 0; n <= max_deg; ++n) {
    if (n > 0) factorial *= n;
    Element e = zero_element();
    for (const auto& [k, qk] : bracket_row(i, j))
      e.coords[static_cast<std::size_t>(k)] =
          qk.coeff_in_var(VarId::lambda(), static_cast<unsigned>(n)).scaled(factorial);
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<SkewViolation> ConformalSuperAlgebra::check_skew() const {
  const std::map<VarId, MultiPoly> flip{{VarId::lambda(), -pd() - pl()}};
  std::vector<SkewViolation> out;
  for (int i = 0; i < rank(); ++i) {
    for (int j = 0; j < rank(); ++j) {
      const bool both_odd = parity(i) == Parity::Odd && parity(j) == Parity::Odd;
      for (int k = 0; k < rank(); ++k) {
        MultiPoly residual = q(i, j, k);
        const MultiPoly& other = q(j, i, k);
        if (!other.is_zero()) {
          MultiPoly image = other.substitute(flip);
          residual += both_odd ? -image : image;
        }
        if (!residual.is_zero()) out.push_back({i, j, k, std::move(residual)});
      }
    }
  }
  return out;
}

std::map<int, MultiPoly> ConformalSuperAlgebra::jacobi_residuals(int i, int j, int k) const {
  const VarId d = VarId::partial(), l = VarId::lambda(), m = VarId::mu();
  const std::map<VarId, MultiPoly> shift_jk{{d, pd() + pl()}, {l, pm()}};
  const std::map<VarId, MultiPoly> shift_ik{{d, pd() + pm()}};
  const std::map<VarId, MultiPoly> shift_js{{l, pm()}};
  const std::map<VarId, MultiPoly> shift_ij{{d, -pl() - pm()}};
  const std::map<VarId, MultiPoly> shift_sk{{l, pl() + pm()}};

  const bool sign_flip = parity(i) == Parity::Odd && parity(j) == Parity::Odd;

  std::map<int, MultiPoly> res;
  auto acc = [&](int t, MultiPoly p) {
    if (p.is_zero()) return;
    auto it = res.find(t);
    if (it == res.end())
      res.emplace(t, std::move(p));
    else {
      it->second += p;
      if (it->second.is_zero()) res.erase(it);
    }
  };

  for (const auto& [s, q_jk] : bracket_row(j, k)) {
    const MultiPoly left = q_jk.substitute(shift_jk);
    for (const auto& [t, q_is] : bracket_row(i, s)) acc(t, left * q_is);
  }
  for (const auto& [s, q_ik] : bracket_row(i, k)) {
    const MultiPoly left = q_ik.substitute(shift_ik);
    for (const auto& [t, q_js] : bracket_row(j, s)) {
      MultiPoly p = left * q_js.substitute(shift_js);
      acc(t, sign_flip ? std::move(p) : -p);
    }
  }
  for (const auto& [s, q_ij] : bracket_row(i, j)) {
    const MultiPoly left = q_ij.substitute(shift_ij);
    for (const auto& [t, q_sk] : bracket_row(s, k)) acc(t, -(left * q_sk.substitute(shift_sk)));
  }
  return res;
}

std::vector<JacobiViolation> ConformalSuperAlgebra::check_jacobi(ExecMode mode) const {
  const int n = rank();
  const std::size_t total = static_cast<std::size_t>(n) * static_cast<std::size_t>(n) *
                            static_cast<std::size_t>(n);
  std::vector<std::vector<JacobiViolation>> per(total);
  parallel_for_index(total, mode == ExecMode::Parallel, [&](std::size_t idx) {
    const int i = static_cast<int>(idx / (static_cast<std::size_t>(n) * n));
    const int j = static_cast<int>((idx / n) % static_cast<std::size_t>(n));
    const int k = static_cast<int>(idx % static_cast<std::size_t>(n));
    for (auto& [t, r] : jacobi_residuals(i, j, k))
      per[idx].push_back({i, j, k, t, std::move(r)});
  });
  std::vector<JacobiViolation> out;
  for (auto& chunk : per)
    for (auto& v : chunk) out.push_back(std::move(v));
  return out;
}

std::vector<int> ConformalSuperAlgebra::even_indices() const {
  std::vector<int> idx;
  for (int i = 0; i < rank(); ++i)
    if (parity(i) == Parity::Even) idx.push_back(i);
  return idx;
}

ConformalSuperAlgebra ConformalSuperAlgebra::even_subalgebra() const {
  const std::vector<int> idx = even_indices();
  std::vector<BasisElement> sub;
  for (int i : idx) sub.push_back(basis_[static_cast<std::size_t>(i)]);
  ConformalSuperAlgebra alg(std::move(sub), params_);
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = 0; b < idx.size(); ++b)
      for (const auto& [k, qk] : bracket_row(idx[a], idx[b])) {
        // Parity forces even targets here.
        for (std::size_t c = 0; c < idx.size(); ++c)
          if (idx[c] == k) alg.set_bracket(static_cast<int>(a), static_cast<int>(b),
                                           static_cast<int>(c), qk);
      }
  return alg;
}

bool ConformalSuperAlgebra::has_symbolic_params() const {
  for (int i = 0; i < rank(); ++i)
    for (int j = 0; j < rank(); ++j)
      for (const auto& [k, qk] : bracket_row(i, j)) {
        (void)k;
        if (qk.mentions_kind(VarKind::Param)) return true;
      }
  return false;
}

}  // namespace lcs
