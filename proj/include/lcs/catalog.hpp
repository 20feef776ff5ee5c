#ifndef LCS_CATALOG_HPP
#define LCS_CATALOG_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lcs/algebra.hpp"

namespace lcs {

// Slot values: rational constants, symbolic parameters, or polynomials
// (for phi/psi/p/f/Q slots), all as MultiPoly.
using SlotMap = std::map<std::string, MultiPoly>;

struct BuiltFamily {
  std::string tag;
  SlotMap slots;
  ConformalSuperAlgebra algebra;
};

struct CatalogError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Family tags: Vir, NS, HV, HVS, O1, O2, O1n, O2n, A1..A4, B0..B2, C0..C3,
// D0..D5, Dbar. Missing scalar slots default to fresh symbolic parameters;
// polynomial slots have documented generic defaults.
BuiltFamily build(const std::string& tag, const SlotMap& slots = {});

const std::vector<std::string>& family_tags();

// The Condition 1 template for type-D structure polynomials Q(d,l), b = 0.
// Admissible a: 1, 0, -1, -4, -6. The second constant slot (the table's d)
// is named e here and only exists for a in {0, -1}.
MultiPoly condition1_Q(const Rational& a, const MultiPoly& c, const MultiPoly& e);

// Validates a user-supplied Q slot against Condition 1 for the given (a, b).
// Zero Q is always allowed.
void validate_condition1(const MultiPoly& a, const MultiPoly& b, const MultiPoly& Q);

// Rank (n+1) algebras over a commutative even part. Variant 1 takes
// phi_1..phi_n in l only; variant 2 takes psi_1..psi_n in d only.
ConformalSuperAlgebra build_general_O(int variant, int n, const std::vector<MultiPoly>& polys);

// Flips the parity of generator x (requires [x_l x] = 0).
ConformalSuperAlgebra super_deform(const ConformalSuperAlgebra& alg, const std::string& x);

// The common type-D template with an odd generator:
//   [A_l A] = (d+2l)A + Q B, [A_l B] = (d+al+b)B, [A_l X] = (d+alpha l+beta)X,
//   [B_l X] = gamma X, [B_l B] = [X_l X] = 0.
// No cross-parameter validation; the Jacobi identity holds iff
// gamma(a-1) = gamma b = 0 and gamma Q = 0.
ConformalSuperAlgebra dbar_shape(const MultiPoly& a, const MultiPoly& b, const MultiPoly& Q,
                                 const MultiPoly& alpha, const MultiPoly& beta,
                                 const MultiPoly& gamma);

// Every family of the catalog instantiated with symbolic parameters and
// generic polynomial slots; the identity-suite sweep.
std::vector<BuiltFamily> catalog_all_symbolic();

}  // namespace lcs

#endif
