#ifndef LCS_PARSE_HPP
#define LCS_PARSE_HPP

#include <set>
#include <stdexcept>
#include <string>
#include <string_view>

#include "lcs/multipoly.hpp"

namespace lcs {

// Grammar (ASCII):
//   expr     := term (('+'|'-') term)*
//   term     := factor ('*' factor)*
//   factor   := atom ('^' uint)?
//   atom     := rational | var | '(' expr ')'
//   rational := int ('/' uint)?
//   var      := [a-z][a-z0-9_]*
// Reserved vars: d = the derivation, l = lambda, m = mu. Whitespace is
// insignificant. A leading '-' before the first term is also accepted.
struct ParseError : std::runtime_error {
  std::size_t offset;
  ParseError(std::size_t off, const std::string& msg)
      : std::runtime_error(msg + " (at byte " + std::to_string(off) + ")"), offset(off) {}
};

// Any identifier other than d/l/m must be listed in `params`.
MultiPoly parse_poly(std::string_view text, const std::set<std::string>& params = {});

// Deterministic output: terms sorted by total degree (descending), ties by
// exponents on the global variable order. parse_poly(format_poly(p)) == p.
std::string format_poly(const MultiPoly& p);

std::string format_var(const VarId& v);

}  // namespace lcs

#endif
