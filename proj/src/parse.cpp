#include "lcs/parse.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

namespace lcs {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const std::set<std::string>& params)
      : text_(text), params_(params) {}

  MultiPoly run() {
    MultiPoly p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return p;
  }

 private:
  std::string_view text_;
  const std::set<std::string>& params_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(pos_, msg); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek_is(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool consume(char c) {
    if (peek_is(c)) {
      ++pos_;
      return true;
    }
    return false;
  }

  MultiPoly expr() {
    bool negate = consume('-');
    MultiPoly p = term();
    if (negate) p = -p;
    for (;;) {
      if (consume('+'))
        p += term();
      else if (consume('-'))
        p -= term();
      else
        break;
    }
    return p;
  }

  MultiPoly term() {
    MultiPoly p = factor();
    while (consume('*')) p = p * factor();
    return p;
  }

  MultiPoly factor() {
    MultiPoly a = atom();
    if (consume('^')) {
      unsigned e = parse_uint();
      a = a.pow(e);
    }
    return a;
  }

  MultiPoly atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      MultiPoly p = expr();
      if (!consume(')')) fail("expected ')'");
      return p;
    }
    if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) return rational_atom();
    if (c >= 'a' && c <= 'z') return var_atom();
    fail("expected rational, variable or '('");
  }

  unsigned parse_uint() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected unsigned integer");
    unsigned long v = 0;
    for (std::size_t i = start; i < pos_; ++i) {
      v = v * 10 + static_cast<unsigned long>(text_[i] - '0');
      if (v > 1'000'000) fail("exponent too large");
    }
    return static_cast<unsigned>(v);
  }

  MultiPoly rational_atom() {
    std::size_t start = pos_;
    if (text_[pos_] == '-') ++pos_;
    std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == digits) fail("expected digits after '-'");
    std::string num(text_.substr(start, pos_ - start));
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      std::size_t den_start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ == den_start) fail("expected denominator digits");
      num += '/';
      num += text_.substr(den_start, pos_ - den_start);
    }
    Rational r;
    try {
      r = rational_from_string(num);
    } catch (const std::invalid_argument& e) {
      fail(e.what());
    }
    return MultiPoly::constant(r);
  }

  MultiPoly var_atom() {
    std::size_t start = pos_;
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      const bool ok = (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
      if (!ok) break;
      ++pos_;
    }
    std::string name(text_.substr(start, pos_ - start));
    if (name == "d") return pd();
    if (name == "l") return pl();
    if (name == "m") return pm();
    if (!params_.count(name)) {
      pos_ = start;
      fail("undeclared variable '" + name + "'");
    }
    return pparam(name);
  }
};

// Exponent-vector comparison over the global variable order; larger exponent
// on the earliest variable wins.
bool mono_lex_greater(const Monomial& a, const Monomial& b) {
  auto ia = a.begin(), ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ia == a.end()) return false;  // a has exponent 0 where b is positive
    if (ib == b.end()) return true;
    if (ia->first != ib->first) return ia->first < ib->first;
    if (ia->second != ib->second) return ia->second > ib->second;
    ++ia;
    ++ib;
  }
  return false;
}

int mono_degree(const Monomial& m) {
  int t = 0;
  for (const auto& [v, e] : m) {
    (void)v;
    t += static_cast<int>(e);
  }
  return t;
}

}  // namespace

MultiPoly parse_poly(std::string_view text, const std::set<std::string>& params) {
  return Parser(text, params).run();
}

std::string format_var(const VarId& v) { return v.name; }

std::string format_poly(const MultiPoly& p) {
  if (p.is_zero()) return "0";

  std::vector<std::pair<Monomial, Rational>> terms(p.terms().begin(), p.terms().end());
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    const int da = mono_degree(a.first), db = mono_degree(b.first);
    if (da != db) return da > db;
    return mono_lex_greater(a.first, b.first);
  });

  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms) {
    const bool neg = c < 0;
    const Rational abs_c = neg ? Rational(-c) : c;
    if (first) {
      if (neg) out += '-';
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    std::string factors;
    for (const auto& [v, e] : m) {
      if (!factors.empty()) factors += '*';
      factors += format_var(v);
      if (e != 1) {
        factors += '^';
        factors += std::to_string(e);
      }
    }
    if (factors.empty()) {
      out += to_string(abs_c);
    } else if (abs_c == 1) {
      out += factors;
    } else {
      out += to_string(abs_c);
      out += '*';
      out += factors;
    }
  }
  return out;
}

}  // namespace lcs
