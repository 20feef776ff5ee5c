#ifndef LCS_HNF_HPP
#define LCS_HNF_HPP

#include <vector>

#include "lcs/multipoly.hpp"

namespace lcs {

// Row vector over the univariate polynomial ring in d (parameters
// instantiated, so entries carry only the variable d).
using PolyRow = std::vector<MultiPoly>;

// Canonical row basis of a submodule of the free module over the d-ring:
// pivots monic, strictly increasing pivot columns, entries above a pivot
// reduced to degree < pivot degree.
struct PolySubmodule {
  std::vector<PolyRow> generators;
  std::vector<PolyRow> basis;
  std::vector<int> pivot_cols;

  bool is_zero() const { return basis.empty(); }
  bool operator==(const PolySubmodule& o) const { return basis == o.basis; }
};

struct HnfError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Throws HnfError when an entry mentions anything but d (caller must
// instantiate parameters first).
PolySubmodule hermite_normal_form(std::vector<PolyRow> rows);

// Membership test: reduces v against the basis; true iff it reaches zero.
bool reduces_to_zero(const PolySubmodule& sub, PolyRow v);

}  // namespace lcs

#endif
