#include "lcs/annihilation.hpp"

#include <algorithm>
#include <stdexcept>

#include "lcs/parallel.hpp"
#include "lcs/parse.hpp"

namespace lcs {

namespace {

const VarId kD = VarId::partial();
const VarId kL = VarId::lambda();

void acc(AnnElement& e, const AnnGenerator& g, const MultiPoly& c) {
  if (c.is_zero()) return;
  auto it = e.find(g);
  if (it == e.end())
    e.emplace(g, c);
  else {
    it->second += c;
    if (it->second.is_zero()) e.erase(it);
  }
}

// (p(d) x)_(k) = sum_i p_i (-1)^i k!/(k-i)! x_(k-i); terms with i > k vanish.
// Returns false when a nonzero term lands above the cap.
bool linearize(const MultiPoly& p, int base, int k, int cap, AnnElement& out) {
  const int deg = p.degree_in(kD);
  for (int i = 0; i <= std::max(deg, 0); ++i) {
    const MultiPoly ci = p.coeff_in_var(kD, static_cast<unsigned>(i));
    if (ci.is_zero()) continue;
    if (i > k) continue;  // falling factorial vanishes
    if (k - i > cap) return false;
    Rational fall = 1;
    for (int t = 0; t < i; ++t) fall *= (k - t);
    const Rational sign = (i % 2 == 0) ? rat(1) : rat(-1);
    acc(out, {base, k - i}, ci.scaled(sign * fall));
  }
  return true;
}

}  // namespace

TruncatedLieSuper::TruncatedLieSuper(const ConformalSuperAlgebra& alg, int cap, bool extended)
    : alg_(&alg), cap_(cap), extended_(extended) {
  const std::size_t n = static_cast<std::size_t>(alg.rank()) * (static_cast<std::size_t>(cap) + 1) +
                        (extended ? 1 : 0);
  table_.assign(n, std::vector<std::optional<AnnElement>>(n));
}

std::size_t TruncatedLieSuper::encode(const AnnGenerator& g) const {
  if (g.base < 0)
    return static_cast<std::size_t>(alg_->rank()) * (static_cast<std::size_t>(cap_) + 1);
  return static_cast<std::size_t>(g.base) * (static_cast<std::size_t>(cap_) + 1) +
         static_cast<std::size_t>(g.level);
}

std::vector<AnnGenerator> TruncatedLieSuper::generators() const {
  std::vector<AnnGenerator> out;
  for (int b = 0; b < alg_->rank(); ++b)
    for (int n = 0; n <= cap_; ++n) out.push_back({b, n});
  if (extended_) out.push_back({-1, 0});
  return out;
}

Parity TruncatedLieSuper::parity(const AnnGenerator& g) const {
  return g.base < 0 ? Parity::Even : alg_->parity(g.base);
}

std::string TruncatedLieSuper::name(const AnnGenerator& g) const {
  if (g.base < 0) return "der";
  return alg_->name_of(g.base) + "_(" + std::to_string(g.level) + ")";
}

const std::optional<AnnElement>& TruncatedLieSuper::bracket(const AnnGenerator& x,
                                                            const AnnGenerator& y) const {
  return table_[encode(x)][encode(y)];
}

std::optional<AnnElement> TruncatedLieSuper::bracket(const AnnGenerator& x,
                                                     const AnnElement& y) const {
  AnnElement out;
  for (const auto& [g, c] : y) {
    const auto& b = bracket(x, g);
    if (!b) return std::nullopt;
    for (const auto& [h, d] : *b) acc(out, h, c * d);
  }
  return out;
}

void TruncatedLieSuper::set_bracket(const AnnGenerator& x, const AnnGenerator& y,
                                    AnnElement value) {
  table_[encode(x)][encode(y)] = std::move(value);
}

TruncatedLieSuper build_annihilation(const ConformalSuperAlgebra& alg, int cap, bool extended) {
  if (cap < 0) throw std::invalid_argument("build_annihilation: cap must be nonnegative");
  TruncatedLieSuper L(alg, cap, extended);

  // j-th products once per generator pair.
  std::vector<std::vector<std::vector<Element>>> products(
      static_cast<std::size_t>(alg.rank()),
      std::vector<std::vector<Element>>(static_cast<std::size_t>(alg.rank())));
  for (int i = 0; i < alg.rank(); ++i)
    for (int j = 0; j < alg.rank(); ++j)
      products[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          alg.jth_products(i, j);

  for (int i = 0; i < alg.rank(); ++i) {
    for (int j = 0; j < alg.rank(); ++j) {
      const auto& prods = products[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      for (int m = 0; m <= cap; ++m) {
        for (int n = 0; n <= cap; ++n) {
          AnnElement value;
          bool ok = true;
          Rational binom = 1;  // C(m, j)
          for (int jj = 0; jj < static_cast<int>(prods.size()) && ok; ++jj) {
            if (jj > 0) binom = binom * (m - jj + 1) / jj;
            if (jj > m) break;  // C(m,j) = 0 beyond m
            const Element& e = prods[static_cast<std::size_t>(jj)];
            for (int k = 0; k < alg.rank() && ok; ++k) {
              const MultiPoly scaled = e.coords[static_cast<std::size_t>(k)].scaled(binom);
              ok = linearize(scaled, k, m + n - jj, cap, value);
            }
          }
          if (ok)
            L.set_bracket({i, m}, {j, n}, std::move(value));
          else
            ++L.overflow_;
        }
      }
    }
  }

  if (extended) {
    const AnnGenerator der{-1, 0};
    L.set_bracket(der, der, {});
    for (int b = 0; b < alg.rank(); ++b)
      for (int n = 0; n <= cap; ++n) {
        AnnElement down;
        if (n > 0) acc(down, {b, n - 1}, pc(-n));
        AnnElement up;
        if (n > 0) acc(up, {b, n - 1}, pc(n));
        L.set_bracket(der, {b, n}, std::move(down));
        L.set_bracket({b, n}, der, std::move(up));
      }
  }
  return L;
}

SuperJacobiReport check_super_jacobi_filtered(const TruncatedLieSuper& L, ExecMode mode) {
  const std::vector<AnnGenerator> gens = L.generators();
  const std::size_t g = gens.size();
  const std::size_t total = g * g * g;

  struct Slot {
    int state = 0;  // 0 skipped, 1 ok, 2 violation
    AnnElement residual;
  };
  std::vector<Slot> slots(total);

  parallel_for_index(total, mode == ExecMode::Parallel, [&](std::size_t idx) {
    const AnnGenerator x = gens[idx / (g * g)];
    const AnnGenerator y = gens[(idx / g) % g];
    const AnnGenerator z = gens[idx % g];

    const auto& yz = L.bracket(y, z);
    const auto& xy = L.bracket(x, y);
    const auto& xz = L.bracket(x, z);
    if (!yz || !xy || !xz) return;
    const auto t1 = L.bracket(x, *yz);
    if (!t1) return;
    std::optional<AnnElement> t2;  // [[x,y],z] = -(-1)^{|[x,y]||z|}[z,[x,y]]
    {
      AnnElement out;
      bool ok = true;
      for (const auto& [h, c] : *xy) {
        const auto& hz = L.bracket(h, z);
        if (!hz) {
          ok = false;
          break;
        }
        for (const auto& [w, d] : *hz) acc(out, w, c * d);
      }
      if (ok) t2 = std::move(out);
    }
    if (!t2) return;
    const auto t3 = L.bracket(y, *xz);
    if (!t3) return;

    AnnElement residual = *t1;
    for (const auto& [h, c] : *t2) acc(residual, h, -c);
    const bool flip = L.parity(x) == Parity::Odd && L.parity(y) == Parity::Odd;
    for (const auto& [h, c] : *t3) acc(residual, h, flip ? c : -c);

    slots[idx].state = residual.empty() ? 1 : 2;
    slots[idx].residual = std::move(residual);
  });

  SuperJacobiReport report;
  for (std::size_t idx = 0; idx < total; ++idx) {
    const auto& s = slots[idx];
    if (s.state == 0) {
      ++report.skipped;
      continue;
    }
    ++report.checked;
    if (s.state == 2) {
      const AnnGenerator x = gens[idx / (g * g)];
      const AnnGenerator y = gens[(idx / g) % g];
      const AnnGenerator z = gens[idx % g];
      report.violations.push_back({x, y, z, s.residual});
    }
  }
  return report;
}

namespace {

struct DShape {
  int A, B, X;
  MultiPoly a, b, Q, alpha, beta, gamma;
  bool odd_square;  // true when [X_l X] = 2B
};

DShape detect_d_shape(const ConformalSuperAlgebra& alg) {
  if (alg.rank() != 3) throw std::invalid_argument("match_closed_form: rank-three algebra required");
  DShape s{-1, -1, -1, {}, {}, {}, {}, {}, {}, false};
  for (int i = 0; i < alg.rank(); ++i)
    if (alg.parity(i) == Parity::Odd) s.X = i;
  if (s.X < 0) throw std::invalid_argument("match_closed_form: no odd generator");
  // A is the even generator with [A_l A] = (d+2l)A (+ Q B).
  for (int i = 0; i < alg.rank(); ++i) {
    if (i == s.X) continue;
    if (alg.q(i, i, i) == pd() + pc(2) * pl()) s.A = i;
  }
  for (int i = 0; i < alg.rank(); ++i)
    if (i != s.X && i != s.A) s.B = i;
  if (s.A < 0 || s.B < 0)
    throw std::invalid_argument("match_closed_form: even part is not of type D");

  s.Q = alg.q(s.A, s.A, s.B);
  const MultiPoly q_ab = alg.q(s.A, s.B, s.B);
  // shape: d + a l + b
  const MultiPoly d_coeff = q_ab.coeff_in_var(kL, 0).coeff_in_var(kD, 1);
  s.a = q_ab.coeff_in_var(kL, 1);
  s.b = q_ab.coeff_in_var(kL, 0).coeff_in_var(kD, 0);
  if (!(q_ab - (pd() + s.a * pl() + s.b)).is_zero() || d_coeff != pc(1) ||
      s.a.mentions(kD) || !alg.q(s.B, s.B, s.B).is_zero())
    throw std::invalid_argument("match_closed_form: [A_l B] is not of the form (d+al+b)B");

  const MultiPoly q_ax = alg.q(s.A, s.X, s.X);
  s.alpha = q_ax.coeff_in_var(kL, 1);
  s.beta = q_ax.coeff_in_var(kL, 0).coeff_in_var(kD, 0);
  if (!(q_ax - (pd() + s.alpha * pl() + s.beta)).is_zero() || s.alpha.mentions(kD))
    throw std::invalid_argument("match_closed_form: [A_l X] is not of the form (d+al+be)X");

  const MultiPoly q_xx = alg.q(s.X, s.X, s.B);
  if (q_xx.is_zero() && alg.q(s.X, s.X, s.A).is_zero()) {
    s.odd_square = false;
    s.gamma = alg.q(s.B, s.X, s.X);
    if (s.gamma.mentions(kD) || s.gamma.mentions(kL))
      throw std::invalid_argument("match_closed_form: [B_l X] must be a constant multiple of X");
  } else if (q_xx == pc(2) && alg.q(s.X, s.X, s.A).is_zero()) {
    s.odd_square = true;
    if (!alg.q(s.B, s.X, s.X).is_zero())
      throw std::invalid_argument("match_closed_form: [B_l X] must vanish in the 2B variant");
  } else {
    throw std::invalid_argument("match_closed_form: [X_l X] must be 0 or 2B");
  }
  return s;
}

MultiPoly element_coeff(const AnnElement& e, const AnnGenerator& g) {
  auto it = e.find(g);
  return it == e.end() ? MultiPoly{} : it->second;
}

}  // namespace

ClosedFormReport match_closed_form(const ConformalSuperAlgebra& alg, int cap) {
  const DShape s = detect_d_shape(alg);
  TruncatedLieSuper L = build_annihilation(alg, cap, false);
  ClosedFormReport report;

  auto mismatch = [&](const std::string& pair, int m, int n, const std::string& what) {
    report.matched = false;
    report.mismatches.push_back({pair, m, n, what});
  };
  auto expect = [&](const std::string& pair, int m, int n, const AnnElement& actual,
                    const AnnElement& wanted) {
    ++report.compared;
    AnnElement diff = actual;
    for (const auto& [g, c] : wanted) acc(diff, g, -c);
    if (!diff.empty()) {
      std::string what;
      for (const auto& [g, c] : diff) {
        if (!what.empty()) what += ", ";
        what += L.name(g) + ": " + format_poly(c);
      }
      mismatch(pair, m, n, "residual " + what);
    }
  };

  // [A_m, A_n], shifted indices m, n >= -1; raw (m+1, n+1).
  for (int m = -1; m + 1 <= cap; ++m) {
    for (int n = -1; n + 1 <= cap; ++n) {
      const auto& raw = L.bracket({s.A, m + 1}, {s.A, n + 1});
      if (!raw) continue;
      AnnElement wanted;
      if (m + n >= -1 && m + n + 1 <= cap)
        acc(wanted, {s.A, m + n + 1}, pc(m - n));
      // B-part from the binomial expansion of Q = sum_j Q_j(d) l^j:
      //   sum_j C(m+1, j) (j! Q_j(d) B)_(m+n+2-j)
      bool in_range = true;
      Rational binom = 1;  // C(m+1, j)
      Rational fact = 1;   // j!
      const int qdeg = std::max(s.Q.degree_in(kL), 0);
      for (int j = 0; j <= qdeg; ++j) {
        if (j > 0) {
          binom = binom * (m + 1 - j + 1) / j;
          fact *= j;
        }
        if (j > m + 1) break;
        const MultiPoly qj = s.Q.coeff_in_var(kL, static_cast<unsigned>(j));
        if (!linearize(qj.scaled(binom * fact), s.B, m + n + 2 - j, cap, wanted))
          in_range = false;
      }
      if (!in_range) continue;  // expected B-term above the cap; pair not comparable
      expect("[A,A]", m, n, *raw, wanted);
      for (const auto& [g, c] : wanted)
        if (g.base == s.B)
          report.c_coefficients.push_back({m, n, m + n + 2 - g.level, c});
    }
  }

  // [A_m, B_n] and [A_m, X_s]
  for (int m = -1; m + 1 <= cap; ++m) {
    for (int n = 0; n <= cap; ++n) {
      {
        const auto& raw = L.bracket({s.A, m + 1}, {s.B, n});
        if (raw) {
          AnnElement wanted;
          if (m + n + 1 <= cap) {
            acc(wanted, {s.B, m + n + 1}, s.b);
            if (m + n >= 0)
              acc(wanted, {s.B, m + n}, (s.a - pc(1)).scaled(rat(m + 1)) - pc(n));
            expect("[A,B]", m, n, *raw, wanted);
          }
        }
      }
      {
        const auto& raw = L.bracket({s.A, m + 1}, {s.X, n});
        if (raw) {
          AnnElement wanted;
          if (m + n + 1 <= cap) {
            if (s.odd_square) {
              acc(wanted, {s.X, m + n + 1}, s.b.scaled(rat(1, 2)));
              if (m + n >= 0)
                acc(wanted, {s.X, m + n},
                    ((s.a - pc(1)).scaled(rat(m + 1)) - pc(2 * n)).scaled(rat(1, 2)));
            } else {
              acc(wanted, {s.X, m + n + 1}, s.beta);
              if (m + n >= 0)
                acc(wanted, {s.X, m + n}, (s.alpha - pc(1)).scaled(rat(m + 1)) - pc(n));
            }
            expect("[A,X]", m, n, *raw, wanted);
          }
        }
      }
    }
  }

  // [B_n, X_s], [X_r, X_s], [B_m, B_n]
  for (int n = 0; n <= cap; ++n) {
    for (int sidx = 0; sidx <= cap; ++sidx) {
      {
        const auto& raw = L.bracket({s.B, n}, {s.X, sidx});
        if (raw && n + sidx <= cap) {
          AnnElement wanted;
          if (!s.odd_square) acc(wanted, {s.X, n + sidx}, s.gamma);
          expect("[B,X]", n, sidx, *raw, wanted);
        }
      }
      {
        const auto& raw = L.bracket({s.X, n}, {s.X, sidx});
        if (raw && n + sidx <= cap) {
          AnnElement wanted;
          if (s.odd_square) acc(wanted, {s.B, n + sidx}, pc(2));
          expect("[X,X]", n, sidx, *raw, wanted);
        }
      }
      {
        const auto& raw = L.bracket({s.B, n}, {s.B, sidx});
        if (raw) expect("[B,B]", n, sidx, *raw, {});
      }
    }
  }
  return report;
}

PolyRow ann_action(const ConformalModule& mod, const AnnGenerator& g, const PolyRow& v) {
  // a_(n) (q(d) u) = n! [l^n] (q(d+l) a_l u); the derivation acts as d.
  if (g.base < 0) {
    PolyRow r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = pd() * v[i];
    return r;
  }
  const Element x = mod.algebra().basis_element(g.base);
  const std::vector<MultiPoly> image = mod.action_eval(x, v);
  Rational fact = 1;
  for (int t = 2; t <= g.level; ++t) fact *= t;
  PolyRow r(image.size());
  for (std::size_t i = 0; i < image.size(); ++i)
    r[i] = image[i].coeff_in_var(kL, static_cast<unsigned>(g.level)).scaled(fact);
  return r;
}

}  // namespace lcs
