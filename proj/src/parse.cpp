#include "blk/parse.hpp"

#include <algorithm>
#include <cctype>

#include "blk/error.hpp"

namespace blk {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class Parser {
public:
  Parser(std::string_view src, const std::vector<std::string>& names) : src_(src), names_(names) {}

  Poly parse() {
    Poly p = expr();
    skip();
    if (pos_ != src_.size()) error("unexpected '" + std::string(1, src_[pos_]) + "'");
    return p;
  }

private:
  [[noreturn]] void error(const std::string& msg) const {
    fail(ErrorKind::SyntaxError, "at position " + std::to_string(pos_) + ": " + msg);
  }

  void skip() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Integer integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (start == pos_) error("expected a number");
    if (pos_ < src_.size() && (src_[pos_] == '.' || src_[pos_] == 'e' || src_[pos_] == 'E'))
      error("floating point literals are not allowed");
    return Integer(std::string(src_.substr(start, pos_ - start)));
  }

  Poly expr() {
    Poly p(nvars());
    bool negate = false;
    if (accept('-')) negate = true;
    else accept('+');
    p = term();
    if (negate) p = -p;
    while (true) {
      if (accept('+')) p += term();
      else if (accept('-')) p -= term();
      else return p;
    }
  }

  Poly term() {
    Poly p = factor();
    while (true) {
      if (accept('*')) {
        p = p * factor();
      } else if (accept('/')) {
        Integer d = integer();
        if (d == 0) error("division by zero");
        p *= Rational(1) / Rational(d);
      } else {
        return p;
      }
    }
  }

  Poly factor() {
    Poly b = base();
    if (!accept('^')) return b;
    Integer e = integer();
    if (e > 1000) error("exponent too large");
    Poly r = Poly::constant(nvars(), Rational(1));
    for (long i = 0; i < e.get_si(); ++i) r = r * b;
    return r;
  }

  Poly base() {
    skip();
    if (pos_ >= src_.size()) error("unexpected end of input");
    char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      Poly p = expr();
      if (!accept(')')) error("expected ')'");
      return p;
    }
    if (c == '-') {
      ++pos_;
      return -factor();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return Poly::constant(nvars(), Rational(integer()));
    if (ident_start(c)) {
      std::size_t start = pos_;
      while (pos_ < src_.size() && ident_char(src_[pos_])) ++pos_;
      std::string name(src_.substr(start, pos_ - start));
      for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return Poly::variable(nvars(), static_cast<int>(i));
      error("unknown variable '" + name + "'");
    }
    error("unexpected '" + std::string(1, c) + "'");
  }

  int nvars() const { return static_cast<int>(names_.size()); }

  std::string_view src_;
  const std::vector<std::string>& names_;
  std::size_t pos_ = 0;
};

}  // namespace

ParsedPoly parse_poly(std::string_view src) {
  ParsedPoly out;
  for (std::size_t i = 0; i < src.size();) {
    if (std::isdigit(static_cast<unsigned char>(src[i]))) {
      while (i < src.size() && ident_char(src[i])) ++i;
      continue;
    }
    if (!ident_start(src[i])) {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < src.size() && ident_char(src[i])) ++i;
    std::string name(src.substr(start, i - start));
    if (std::find(out.names.begin(), out.names.end(), name) == out.names.end()) out.names.push_back(name);
  }
  out.f = Parser(src, out.names).parse();
  return out;
}

void require_singular(const ParsedPoly& p) {
  const Poly& f = p.f;
  if (f.nvars() == 0) fail(ErrorKind::NotSingular, "polynomial has no variables");
  for (const auto& [m, c] : f.terms()) {
    if (m.degree() == 0) fail(ErrorKind::NotSingular, "f(0) is nonzero");
    if (m.degree() == 1) fail(ErrorKind::NotSingular, "f has a nonzero linear part; the origin is a smooth point");
  }
  if (f.is_zero()) fail(ErrorKind::NotSingular, "f is zero");
}

}  // namespace blk
