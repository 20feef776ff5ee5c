#include "lcs/hnf.hpp"

#include <algorithm>

namespace lcs {

namespace {

const VarId kD = VarId::partial();

void validate_row(const PolyRow& row) {
  for (const auto& p : row)
    for (const auto& v : p.vars())
      if (v != kD)
        throw HnfError("matrix entries must be univariate in d; instantiate parameters first");
}

int leading_col(const PolyRow& row) {
  for (std::size_t c = 0; c < row.size(); ++c)
    if (!row[c].is_zero()) return static_cast<int>(c);
  return -1;
}

void subtract_multiple(PolyRow& r, const MultiPoly& q, const PolyRow& p) {
  for (std::size_t c = 0; c < r.size(); ++c) r[c] -= q * p[c];
}

}  // namespace

PolySubmodule hermite_normal_form(std::vector<PolyRow> rows) {
  PolySubmodule out;
  out.generators = rows;
  if (rows.empty()) return out;
  const std::size_t ncols = rows[0].size();
  for (const auto& r : rows) {
    if (r.size() != ncols) throw HnfError("ragged matrix");
    validate_row(r);
  }

  std::vector<PolyRow> work;
  for (auto& r : rows)
    if (leading_col(r) >= 0) work.push_back(std::move(r));

  for (std::size_t col = 0; col < ncols && !work.empty(); ++col) {
    // Euclidean elimination of the entries in this column among the rows whose
    // leading column is exactly col.
    for (;;) {
      int pivot = -1;
      int pivot_deg = 0;
      int count = 0;
      for (std::size_t r = 0; r < work.size(); ++r) {
        if (leading_col(work[r]) != static_cast<int>(col)) continue;
        ++count;
        const int deg = work[r][col].degree_in(kD);
        if (pivot < 0 || deg < pivot_deg) {
          pivot = static_cast<int>(r);
          pivot_deg = deg;
        }
      }
      if (count == 0) break;
      if (count == 1) {
        out.basis.push_back(std::move(work[static_cast<std::size_t>(pivot)]));
        out.pivot_cols.push_back(static_cast<int>(col));
        work.erase(work.begin() + pivot);
        break;
      }
      const PolyRow p = work[static_cast<std::size_t>(pivot)];
      for (std::size_t r = 0; r < work.size(); ++r) {
        if (static_cast<int>(r) == pivot) continue;
        if (leading_col(work[r]) != static_cast<int>(col)) continue;
        if (work[r][col].degree_in(kD) < pivot_deg) continue;
        auto [quot, rem] = p[col].degree_in(kD) == 0
                               ? std::pair<MultiPoly, MultiPoly>{work[r][col].scaled(
                                                                     1 / p[col].constant_value()),
                                                                 MultiPoly{}}
                               : MultiPoly::divide(work[r][col], p[col], kD);
        (void)rem;
        subtract_multiple(work[r], quot, p);
      }
      work.erase(std::remove_if(work.begin(), work.end(),
                                [](const PolyRow& r) { return leading_col(r) < 0; }),
                 work.end());
    }
  }

  // Normalize pivots monic.
  for (std::size_t r = 0; r < out.basis.size(); ++r) {
    const int c = out.pivot_cols[r];
    auto& row = out.basis[r];
    const int deg = row[static_cast<std::size_t>(c)].degree_in(kD);
    const MultiPoly lead =
        row[static_cast<std::size_t>(c)].coeff_in_var(kD, static_cast<unsigned>(deg));
    const Rational lc = lead.constant_value();
    if (lc != 1)
      for (auto& e : row) e = e.scaled(1 / lc);
  }

  // Reduce entries above each pivot to degree < pivot degree.
  for (std::size_t r = 0; r < out.basis.size(); ++r) {
    const int c = out.pivot_cols[r];
    const MultiPoly& piv = out.basis[r][static_cast<std::size_t>(c)];
    const int pdeg = piv.degree_in(kD);
    for (std::size_t e = 0; e < r; ++e) {
      MultiPoly& entry = out.basis[e][static_cast<std::size_t>(c)];
      if (entry.is_zero()) continue;
      if (pdeg == 0) {
        subtract_multiple(out.basis[e], entry, out.basis[r]);
      } else if (entry.degree_in(kD) >= pdeg) {
        auto [quot, rem] = MultiPoly::divide(entry, piv, kD);
        (void)rem;
        subtract_multiple(out.basis[e], quot, out.basis[r]);
      }
    }
  }
  return out;
}

bool reduces_to_zero(const PolySubmodule& sub, PolyRow v) {
  validate_row(v);
  for (std::size_t r = 0; r < sub.basis.size(); ++r) {
    const int c = sub.pivot_cols[r];
    MultiPoly& entry = v[static_cast<std::size_t>(c)];
    if (entry.is_zero()) continue;
    const MultiPoly& piv = sub.basis[r][static_cast<std::size_t>(c)];
    if (piv.degree_in(kD) == 0) {
      subtract_multiple(v, entry.scaled(1 / piv.constant_value()), sub.basis[r]);
    } else {
      auto [quot, rem] = MultiPoly::divide(entry, piv, kD);
      if (!rem.is_zero()) return false;
      subtract_multiple(v, quot, sub.basis[r]);
    }
  }
  return leading_col(v) < 0;
}

}  // namespace lcs
