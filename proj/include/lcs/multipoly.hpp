#ifndef LCS_MULTIPOLY_HPP
#define LCS_MULTIPOLY_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lcs/rational.hpp"

namespace lcs {

// Global variable order: d < l < m < parameters (lexicographic by name).
enum class VarKind : std::uint8_t { Partial = 0, Lambda = 1, Mu = 2, Param = 3 };

struct VarId {
  VarKind kind;
  std::string name;

  auto operator<=>(const VarId&) const = default;

  static VarId partial() { return {VarKind::Partial, "d"}; }
  static VarId lambda() { return {VarKind::Lambda, "l"}; }
  static VarId mu() { return {VarKind::Mu, "m"}; }
  static VarId param(std::string n);
};

bool valid_var_name(const std::string& name);

// Sorted by VarId, all exponents > 0.
using Monomial = std::vector<std::pair<VarId, unsigned>>;

// Sparse exact multivariate polynomial over Rational. Canonical form: no zero
// coefficients stored; equality is structural equality of the term map.
class MultiPoly {
 public:
  MultiPoly() = default;

  static MultiPoly constant(const Rational& c);
  static MultiPoly constant(long num, long den = 1) { return constant(rat(num, den)); }
  static MultiPoly var(const VarId& v, unsigned exp = 1);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Requires is_constant(); zero yields 0.
  Rational constant_value() const;

  bool operator==(const MultiPoly& other) const { return terms_ == other.terms_; }
  bool operator!=(const MultiPoly& other) const { return !(*this == other); }

  MultiPoly operator+(const MultiPoly& q) const;
  MultiPoly operator-(const MultiPoly& q) const;
  MultiPoly operator-() const;
  MultiPoly operator*(const MultiPoly& q) const;
  MultiPoly& operator+=(const MultiPoly& q);
  MultiPoly& operator-=(const MultiPoly& q);

  MultiPoly scaled(const Rational& c) const;
  MultiPoly pow(unsigned e) const;

  // Ring homomorphism fixing every variable not in `images`. Simultaneous:
  // images are never re-substituted.
  MultiPoly substitute(const std::map<VarId, MultiPoly>& images) const;
  MultiPoly substitute(const VarId& v, const MultiPoly& image) const;

  // q_k with p = sum_k q_k v^k; result mentions no v.
  MultiPoly coeff_in_var(const VarId& v, unsigned k) const;
  int degree_in(const VarId& v) const;  // -1 for the zero polynomial
  int total_degree() const;             // -1 for the zero polynomial

  std::set<VarId> vars() const;
  bool mentions(const VarId& v) const;
  bool mentions_kind(VarKind k) const;

  Rational eval(const std::map<VarId, Rational>& point) const;

  const std::map<Monomial, Rational>& terms() const { return terms_; }

  // Accumulating insert; drops the term if the coefficient cancels to zero.
  void add_term(Monomial m, const Rational& c);

  // Univariate-in-v long division. Requires deg_v(q) >= 1 and the leading
  // v-coefficient of q to be a nonzero rational constant.
  // Returns (quotient, remainder) with deg_v(remainder) < deg_v(q).
  static std::pair<MultiPoly, MultiPoly> divide(const MultiPoly& p, const MultiPoly& q,
                                                const VarId& v);

 private:
  std::map<Monomial, Rational> terms_;
};

struct DivisionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Shorthand builders used pervasively by the catalog and tests.
inline MultiPoly pd() { return MultiPoly::var(VarId::partial()); }
inline MultiPoly pl() { return MultiPoly::var(VarId::lambda()); }
inline MultiPoly pm() { return MultiPoly::var(VarId::mu()); }
inline MultiPoly pparam(const std::string& n) { return MultiPoly::var(VarId::param(n)); }
inline MultiPoly pc(long num, long den = 1) { return MultiPoly::constant(num, den); }

}  // namespace lcs

#endif
