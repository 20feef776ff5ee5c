#ifndef LCS_ALGEBRA_HPP
#define LCS_ALGEBRA_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lcs/multipoly.hpp"

namespace lcs {

enum class Parity : std::uint8_t { Even = 0, Odd = 1 };

inline Parity operator+(Parity a, Parity b) {
  return static_cast<Parity>((static_cast<int>(a) + static_cast<int>(b)) % 2);
}

struct BasisElement {
  std::string name;
  Parity parity;
};

// Element of the free module: coordinates over the basis, each a polynomial
// in the derivation d (and parameters). Never mentions l or m.
struct Element {
  std::vector<MultiPoly> coords;

  bool is_zero() const;
};

// Execution mode for the residual sweeps. Parallel uses OpenMP when compiled
// in and degrades to the serial path otherwise; results are identical.
enum class ExecMode { Serial, Parallel };

struct SkewViolation {
  int i, j, k;
  MultiPoly residual;  // in (d, l) and parameters
};

struct JacobiViolation {
  int i, j, k, t;
  MultiPoly residual;  // in (d, l, m) and parameters
};

// Z2-graded free conformal superalgebra with a lambda-bracket structure
// table: [X^i_l X^j] = sum_k Q_ij^k(d, l) X^k.
class ConformalSuperAlgebra {
 public:
  ConformalSuperAlgebra(std::vector<BasisElement> basis, std::set<std::string> params);

  int rank() const { return static_cast<int>(basis_.size()); }
  const std::vector<BasisElement>& basis() const { return basis_; }
  Parity parity(int i) const { return basis_[static_cast<std::size_t>(i)].parity; }
  const std::string& name_of(int i) const { return basis_[static_cast<std::size_t>(i)].name; }
  int index_of(const std::string& name) const;  // -1 if absent
  const std::set<std::string>& params() const { return params_; }

  // Validates variables (only d, l and declared parameters) and parity
  // compatibility. A zero polynomial clears the entry.
  void set_bracket(int i, int j, int k, MultiPoly q);
  void set_bracket(const std::string& i, const std::string& j, const std::string& k,
                   const MultiPoly& q);

  // Fills every absent (j,i) entry from the (i,j) entry via skew-symmetry:
  // Q_ji^k(d,l) = -(-1)^{|i||j|} Q_ij^k(d, -d-l).
  void complete_by_skew();

  const MultiPoly& q(int i, int j, int k) const;  // zero when absent
  const std::map<int, MultiPoly>& bracket_row(int i, int j) const;

  Element zero_element() const;
  Element basis_element(int i) const;

  // Parity of a homogeneous element; nullopt for zero or mixed.
  std::optional<Parity> element_parity(const Element& x) const;

  // [x_l y] extended from the table by conformal sesquilinearity: coordinate
  // p(d) contributes p(-l) on the left and p(d+l) on the right. Entries are
  // polynomials in (d, l) and parameters.
  std::vector<MultiPoly> bracket_eval(const Element& x, const Element& y) const;

  // n-th products X^i_(n) X^j = n! [l^n] [X^i_l X^j]; index = n.
  std::vector<Element> jth_products(int i, int j) const;

  // Residuals of the skew-symmetry axiom, one per (i,j,k) with nonzero
  // residual Q_ij^k(d,l) + (-1)^{|i||j|} Q_ji^k(d,-d-l).
  std::vector<SkewViolation> check_skew() const;

  // Residuals of the Jacobi axiom, one per (i,j,k,t) with nonzero residual
  //   sum_s [ Q_jk^s(d+l,m) Q_is^t(d,l) - (-1)^{|i||j|} Q_ik^s(d+m,l) Q_js^t(d,m) ]
  //   - sum_s Q_ij^s(-l-m,l) Q_sk^t(d,l+m),
  // identically in parameters.
  std::vector<JacobiViolation> check_jacobi(ExecMode mode = ExecMode::Parallel) const;

  // Subalgebra spanned by the even generators (index map returned via
  // even_indices).
  ConformalSuperAlgebra even_subalgebra() const;
  std::vector<int> even_indices() const;

  bool has_symbolic_params() const;

 private:
  std::vector<BasisElement> basis_;
  std::set<std::string> params_;
  // structure_[i][j]: target index -> Q_ij^k
  std::vector<std::vector<std::map<int, MultiPoly>>> structure_;

  void validate_poly(const MultiPoly& q) const;
  std::map<int, MultiPoly> jacobi_residuals(int i, int j, int k) const;
};

}  // namespace lcs

#endif
