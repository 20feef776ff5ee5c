#ifndef LCS_RATIONAL_HPP
#define LCS_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace lcs {

// Exact rational scalar. mpq_class keeps the canonical invariants we need:
// gcd(|num|, den) = 1, den >= 1, zero stored as 0/1.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Accepts "int" or "int/uint".
inline Rational rational_from_string(const std::string& text) {
  Rational r;
  if (r.set_str(text, 10) != 0)
    throw std::invalid_argument("malformed rational literal: " + text);
  if (r.get_den() == 0)
    throw std::invalid_argument("rational with zero denominator: " + text);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& r) {
  return r.get_str();
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

}  // namespace lcs

#endif
