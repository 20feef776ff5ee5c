#include "lcs/series.hpp"

#include <stdexcept>

namespace lcs {

namespace {

constexpr int kSeriesCap = 10;

void require_instantiated(const ConformalSuperAlgebra& alg) {
  if (alg.has_symbolic_params())
    throw std::invalid_argument(
        "structural series require instantiated parameters (symbolic entries present)");
}

Element row_to_element(const ConformalSuperAlgebra& alg, const PolyRow& row) {
  Element e = alg.zero_element();
  e.coords = row;
  return e;
}

// lambda-coefficient rows of [u_l v]; these span the C[d]-module of products.
void append_product_rows(const ConformalSuperAlgebra& alg, const PolyRow& u, const PolyRow& v,
                         std::vector<PolyRow>& out) {
  // Split u into homogeneous parts; bracket_eval requires homogeneity.
  auto split = [&](const PolyRow& r) {
    PolyRow even(r.size()), odd(r.size());
    for (int i = 0; i < alg.rank(); ++i) {
      if (alg.parity(i) == Parity::Even)
        even[static_cast<std::size_t>(i)] = r[static_cast<std::size_t>(i)];
      else
        odd[static_cast<std::size_t>(i)] = r[static_cast<std::size_t>(i)];
    }
    return std::pair{even, odd};
  };
  auto [ue, uo] = split(u);
  auto [ve, vo] = split(v);
  for (const PolyRow* pu : {&ue, &uo}) {
    for (const PolyRow* pv : {&ve, &vo}) {
      const Element x = row_to_element(alg, *pu);
      const Element y = row_to_element(alg, *pv);
      if (x.is_zero() || y.is_zero()) continue;
      const std::vector<MultiPoly> bracket = alg.bracket_eval(x, y);
      int max_deg = -1;
      for (const auto& p : bracket) max_deg = std::max(max_deg, p.degree_in(VarId::lambda()));
      for (int n = 0; n <= max_deg; ++n) {
        PolyRow row(bracket.size());
        bool nonzero = false;
        for (std::size_t k = 0; k < bracket.size(); ++k) {
          row[k] = bracket[k].coeff_in_var(VarId::lambda(), static_cast<unsigned>(n));
          nonzero = nonzero || !row[k].is_zero();
        }
        if (nonzero) out.push_back(std::move(row));
      }
    }
  }
}

}  // namespace

PolySubmodule whole_module(const ConformalSuperAlgebra& alg) {
  std::vector<PolyRow> rows;
  for (int i = 0; i < alg.rank(); ++i) {
    PolyRow r(static_cast<std::size_t>(alg.rank()));
    r[static_cast<std::size_t>(i)] = pc(1);
    rows.push_back(std::move(r));
  }
  return hermite_normal_form(std::move(rows));
}

PolySubmodule product_span(const ConformalSuperAlgebra& alg,
                           const std::vector<PolyRow>& gens_left,
                           const std::vector<PolyRow>& gens_right) {
  require_instantiated(alg);
  std::vector<PolyRow> rows;
  for (const auto& u : gens_left)
    for (const auto& v : gens_right) append_product_rows(alg, u, v, rows);
  return hermite_normal_form(std::move(rows));
}

namespace {

SeriesResult run_series(const ConformalSuperAlgebra& alg, bool derived) {
  require_instantiated(alg);
  SeriesResult res;
  res.steps.push_back(whole_module(alg));
  for (int step = 0; step < kSeriesCap; ++step) {
    const PolySubmodule& cur = res.steps.back();
    if (cur.is_zero()) {
      res.reached_zero = true;
      return res;
    }
    PolySubmodule next = derived ? product_span(alg, cur.basis, cur.basis)
                                 : product_span(alg, whole_module(alg).basis, cur.basis);
    if (next.is_zero()) {
      res.steps.push_back(std::move(next));
      res.reached_zero = true;
      return res;
    }
    if (next == cur) {
      res.stabilized = true;
      return res;
    }
    res.steps.push_back(std::move(next));
  }
  res.hit_cap = true;
  return res;
}

}  // namespace

SeriesResult derived_series(const ConformalSuperAlgebra& alg) { return run_series(alg, true); }

SeriesResult lower_central_series(const ConformalSuperAlgebra& alg) {
  return run_series(alg, false);
}

bool is_solvable(const ConformalSuperAlgebra& alg) { return derived_series(alg).reached_zero; }

bool is_nilpotent(const ConformalSuperAlgebra& alg) {
  return lower_central_series(alg).reached_zero;
}

bool check_ideal(const ConformalSuperAlgebra& alg, const PolySubmodule& sub) {
  require_instantiated(alg);
  std::vector<PolyRow> rows;
  for (int i = 0; i < alg.rank(); ++i) {
    PolyRow gen(static_cast<std::size_t>(alg.rank()));
    gen[static_cast<std::size_t>(i)] = pc(1);
    for (const auto& u : sub.basis) append_product_rows(alg, gen, u, rows);
  }
  for (auto& r : rows)
    if (!reduces_to_zero(sub, r)) return false;
  return true;
}

}  // namespace lcs
