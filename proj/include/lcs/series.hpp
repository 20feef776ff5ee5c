#ifndef LCS_SERIES_HPP
#define LCS_SERIES_HPP

#include <vector>

#include "lcs/algebra.hpp"
#include "lcs/hnf.hpp"

namespace lcs {

struct SeriesResult {
  // steps[0] is the whole algebra; each later entry one derived / lower
  // central step, ending at the first zero or repeated submodule.
  std::vector<PolySubmodule> steps;
  bool reached_zero = false;
  bool stabilized = false;   // nonzero fixed point
  bool hit_cap = false;      // diagnostic; 10-step cap
};

// Span of all j-th products u_(n) v for u in gens_left, v in gens_right,
// extended by sesquilinearity, as an HNF submodule. Requires instantiated
// parameters.
PolySubmodule product_span(const ConformalSuperAlgebra& alg,
                           const std::vector<PolyRow>& gens_left,
                           const std::vector<PolyRow>& gens_right);

PolySubmodule whole_module(const ConformalSuperAlgebra& alg);

SeriesResult derived_series(const ConformalSuperAlgebra& alg);
SeriesResult lower_central_series(const ConformalSuperAlgebra& alg);

bool is_solvable(const ConformalSuperAlgebra& alg);
bool is_nilpotent(const ConformalSuperAlgebra& alg);

// True iff every j-th product of a basis generator with a submodule
// generator reduces to zero against the submodule's HNF basis.
bool check_ideal(const ConformalSuperAlgebra& alg, const PolySubmodule& sub);

}  // namespace lcs

#endif
