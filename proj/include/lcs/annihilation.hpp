#ifndef LCS_ANNIHILATION_HPP
#define LCS_ANNIHILATION_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lcs/algebra.hpp"
#include "lcs/conformal_module.hpp"

namespace lcs {

// Generator a_(n) of the truncated annihilation superalgebra; base = -1 is
// the adjoined derivation of the extended algebra.
struct AnnGenerator {
  int base;
  int level;
  auto operator<=>(const AnnGenerator&) const = default;
};

// Finite linear combination of generators with coefficients in the
// parameter ring (constants when the algebra is instantiated).
using AnnElement = std::map<AnnGenerator, MultiPoly>;

class TruncatedLieSuper {
 public:
  TruncatedLieSuper(const ConformalSuperAlgebra& alg, int cap, bool extended);

  int cap() const { return cap_; }
  bool extended() const { return extended_; }
  const ConformalSuperAlgebra& algebra() const { return *alg_; }
  std::vector<AnnGenerator> generators() const;
  Parity parity(const AnnGenerator& g) const;
  std::string name(const AnnGenerator& g) const;

  // nullopt when the bracket would overflow the level cap.
  const std::optional<AnnElement>& bracket(const AnnGenerator& x,
                                           const AnnGenerator& y) const;
  // Bilinear extension; nullopt if any needed table entry overflowed.
  std::optional<AnnElement> bracket(const AnnGenerator& x, const AnnElement& y) const;

  long overflow_count() const { return overflow_; }

  void set_bracket(const AnnGenerator& x, const AnnGenerator& y, AnnElement value);

 private:
  const ConformalSuperAlgebra* alg_;
  int cap_;
  bool extended_;
  long overflow_ = 0;
  // indexed by encode(x), encode(y)
  std::vector<std::vector<std::optional<AnnElement>>> table_;

  std::size_t encode(const AnnGenerator& g) const;
  friend TruncatedLieSuper build_annihilation(const ConformalSuperAlgebra&, int, bool);
};

// Bracket table from the j-th products:
//   [a_(m), b_(n)] = sum_j C(m,j) (a_(j)b)_(m+n-j),
// with (d^i x)_(k) reduced via (d x)_(n) = -n x_(n-1); if extended, the
// derivation acts by [der, a_(n)] = -n a_(n-1).
TruncatedLieSuper build_annihilation(const ConformalSuperAlgebra& alg, int cap,
                                     bool extended = false);

struct SuperJacobiViolation {
  AnnGenerator x, y, z;
  AnnElement residual;
};

struct SuperJacobiReport {
  long checked = 0;
  long skipped = 0;  // triples with an out-of-cap intermediate bracket
  std::vector<SuperJacobiViolation> violations;
};

// Residual [x,[y,z]] - [[x,y],z] - (-1)^{|x||y|}[y,[x,z]] for every
// generator triple whose intermediate brackets stay within the cap.
SuperJacobiReport check_super_jacobi_filtered(const TruncatedLieSuper& L,
                                              ExecMode mode = ExecMode::Parallel);

struct ClosedFormMismatch {
  std::string pair;
  int m, n;
  std::string detail;
};

struct ClosedFormC {
  int m, n, i;
  MultiPoly value;
};

struct ClosedFormReport {
  bool matched = true;
  long compared = 0;
  std::vector<ClosedFormMismatch> mismatches;
  std::vector<ClosedFormC> c_coefficients;  // B-part of [A_m, A_n] per (m,n)
};

// Compares build_annihilation output against the closed forms for the
// common type-D template (odd bracket zero variant with a gamma action, or
// the [X_l X] = 2B variant), after the index shift A_m = A_(m+1). The
// B-part of [A_m, A_n] is recomputed independently from the binomial
// expansion of Q and reported per (m, n).
ClosedFormReport match_closed_form(const ConformalSuperAlgebra& alg, int cap);

// The induced level action a_(n) v on a conformal module, used by the
// module-correspondence smoke checks: returns a coordinate row over d.
PolyRow ann_action(const ConformalModule& mod, const AnnGenerator& g, const PolyRow& v);

}  // namespace lcs

#endif
