#ifndef LCS_AUTOMORPHISM_HPP
#define LCS_AUTOMORPHISM_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "lcs/algebra.hpp"
#include "lcs/catalog.hpp"

namespace lcs {

// Graded automorphism of a rank (2+1) algebra in the normal shape
//   A -> k1 A + g(d) B,  B -> k2 B,  X -> k3 X,
// with k1, k2, k3 nonzero constants and g a polynomial in d. Arbitrary
// matrices over the d-ring are rejected at construction.
struct GradedAutomorphism {
  MultiPoly k1, k2, k3;
  MultiPoly g;

  static GradedAutomorphism identity();
  static GradedAutomorphism make(MultiPoly k1, MultiPoly k2, MultiPoly k3, MultiPoly g);
};

struct AutError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct AutViolation {
  int i, j, k;
  MultiPoly residual;
};

struct AutCheck {
  bool ok = true;
  std::vector<AutViolation> violations;
};

// Exact check of sigma([u_l v]) = [sigma(u)_l sigma(v)] on all generator
// pairs; sigma commutes with d by construction. The algebra must have two
// even generators (A, B order = basis order) and one odd.
AutCheck is_automorphism(const ConformalSuperAlgebra& alg, const GradedAutomorphism& s);

GradedAutomorphism compose(const GradedAutomorphism& s, const GradedAutomorphism& t);
GradedAutomorphism invert(const GradedAutomorphism& s);

// Membership predicate of the family's automorphism-group description.
// Returns the verdict and a human-readable reason on rejection.
struct FamilyVerdict {
  bool member = false;
  std::string reason;
};
FamilyVerdict check_family(const BuiltFamily& fam, const GradedAutomorphism& s);

struct SampleReport {
  int samples = 0;
  int membership_failures = 0;   // sampled member rejected by is_automorphism
  int closure_failures = 0;      // compose/invert left the family or the check
  std::vector<std::string> details;
  bool ok() const { return membership_failures == 0 && closure_failures == 0; }
};

// Draws `count` random members of the family's group (constants from
// {±1, ±2, ±3, ±1/2}, g-slots with degree <= 3 small-rational content),
// verifies each via is_automorphism, and verifies closure under compose
// and invert. Deterministic for a fixed seed.
SampleReport group_axiom_sample(const BuiltFamily& fam, int count, std::uint64_t seed);

// A random family member (used by the sampler and the perturbation tests).
GradedAutomorphism sample_member(const BuiltFamily& fam, std::uint64_t seed);

}  // namespace lcs

#endif
