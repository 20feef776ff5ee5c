#ifndef LCS_SOLVER_HPP
#define LCS_SOLVER_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lcs/catalog.hpp"
#include "lcs/multipoly.hpp"

namespace lcs {

using QMatrix = std::vector<std::vector<Rational>>;

// Kernel basis via exact elimination, deterministic pivot order (first
// nonzero column, row order).
std::vector<std::vector<Rational>> rational_nullspace(const QMatrix& m);

struct SolutionSpace {
  // Coefficient vectors of the unknown polynomial(s), low degree first.
  std::vector<std::vector<Rational>> basis;
  // The same vectors rendered as polynomials for reporting.
  std::vector<MultiPoly> polys;
};

// Solves (x + a y + b) f(x+y) = (x + 2 al y - y + 2 be) f(x) for f of
// degree <= D, x = d and y = l.
SolutionSpace solve_shift(const Rational& a, const Rational& b, const Rational& al,
                          const Rational& be, int D);

struct ShiftBranch {
  int degree;                         // exact degree of f in the branch
  bool exists;                        // false when the branch is inconsistent
  std::vector<MultiPoly> conditions;  // parameter polynomials that must vanish
  MultiPoly f_shape;                  // monic representative (params allowed)
};

// Treats (a, b, al, be) as symbolic unless pinned in `fixed`, and emits, for
// each candidate degree k <= D, the vanishing conditions under which a
// degree-k solution exists together with the solution shape.
std::vector<ShiftBranch> solve_shift_parametric(int D,
                                                const std::map<std::string, Rational>& fixed = {});

// Solves f(x+y) g(x,y) = f(x) h(y) with one side known. When f is known the
// unknowns are (g, h); when g is known they are (f, h). Unknown g runs over
// total degree <= D, f and h over degree <= D. Returns the joint basis with
// polys laid out as pairs (g_i, h_i) or (f_i, h_i).
SolutionSpace solve_fgh(const MultiPoly& known, bool f_is_known, int D);

// One classified odd-structure family over a fixed even part.
struct OddFamily {
  std::string family;                       // catalog tag it matches
  SlotMap data;                             // phi / psi1 / psi2 / al / be / ga
  std::vector<MultiPoly> conditions;        // parameter constraints, if any
  std::string note;
};

enum class EvenType { ANilpotent, ASolvableNotNilpotent, B, C, D };

struct EvenParams {
  // ANilpotent: f (nonzero skew-symmetric Q1). ASolvableNotNilpotent:
  // p (nonzero, in l). D: a, b rationals and Q.
  MultiPoly f, p, Q;
  Rational a = 0, b = 0;
};

// Re-derives the odd-structure families over the chosen even type by the
// staged bounded-degree linear solves, and names the catalog family each
// solution matches.
std::vector<OddFamily> derive_odd_structure(EvenType type, const EvenParams& params, int D);

}  // namespace lcs

#endif
