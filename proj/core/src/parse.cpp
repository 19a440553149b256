#include "nmf/parse.hpp"

#include <cctype>

namespace nmf {
namespace {

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  BiPoly run() {
    skip();
    if (pos_ == s_.size()) fail("empty polynomial");
    BiPoly p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  const std::string& s_;
  size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at position " + std::to_string(pos_) + " in \"" + s_ + "\"");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  BiPoly expr() {
    BiPoly acc;
    bool first = true;
    for (;;) {
      char c = peek();
      int sign = 1;
      if (c == '+' || c == '-') {
        sign = c == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        break;
      }
      BiPoly t = term();
      acc += sign < 0 ? -t : t;
      first = false;
    }
    return acc;
  }

  bool starts_factor(char c) {
    return std::isdigit(static_cast<unsigned char>(c)) || c == 'x' || c == 'y' || c == '(';
  }

  BiPoly term() {
    BiPoly acc = power();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc = acc * power();
      } else if (c == '/') {
        ++pos_;
        skip();
        mpq_class d = integer_literal();
        if (d == 0) fail("division by zero");
        acc = acc.scaled(Fe(mpq_class(1) / d));
      } else if (starts_factor(c)) {
        acc = acc * power();
      } else {
        return acc;
      }
    }
  }

  BiPoly power() {
    BiPoly base = atom();
    if (peek() == '^') {
      ++pos_;
      skip();
      if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
        fail("exponent must be a nonnegative integer");
      mpz_class e = integer_literal().get_num();
      if (e > 4096) fail("exponent too large");
      return base.pow(static_cast<int>(e.get_si()));
    }
    return base;
  }

  mpq_class integer_literal() {
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return mpq_class(mpz_class(s_.substr(start, pos_ - start)));
  }

  BiPoly atom() {
    char c = peek();
    if (c == 'x' || c == 'y') {
      ++pos_;
      return c == 'x' ? BiPoly::x() : BiPoly::y();
    }
    if (c == '(') {
      ++pos_;
      BiPoly e = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpq_class v = integer_literal();
      // a/b literal binds tighter than multiplication
      if (pos_ + 1 < s_.size() && s_[pos_] == '/' &&
          std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
        ++pos_;
        mpq_class d = integer_literal();
        if (d == 0) fail("zero denominator");
        v /= d;
      }
      return BiPoly(Fe(v));
    }
    if (c == '\0') fail("unexpected end of input");
    fail("unexpected '" + std::string(1, c) + "'");
  }
};

}  // namespace

mpq_class parse_rational(const std::string& s) {
  std::string t;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  size_t i = 0;
  if (i < t.size() && (t[i] == '-' || t[i] == '+')) ++i;
  auto digits = [&](size_t& k) {
    size_t st = k;
    while (k < t.size() && std::isdigit(static_cast<unsigned char>(t[k]))) ++k;
    return k > st;
  };
  bool ok = digits(i);
  if (ok && i < t.size() && t[i] == '/') {
    ++i;
    ok = digits(i);
  }
  if (!ok || i != t.size()) throw ParseError("not a rational number: \"" + s + "\"");
  if (t[0] == '+') t.erase(0, 1);
  mpq_class q(t);
  if (q.get_den() == 0) throw ParseError("zero denominator: \"" + s + "\"");
  q.canonicalize();
  return q;
}

BiPoly parse_bipoly(const std::string& s) { return Parser(s).run(); }

}  // namespace nmf
