#pragma once

#include <map>
#include <string>

namespace nmf {

// Integer Laurent polynomial in L.
class Laurent {
 public:
  std::map<int, long> c;  // exponent -> nonzero coefficient

  Laurent() = default;
  Laurent(long k) {  // NOLINT(google-explicit-constructor)
    if (k != 0) c[0] = k;
  }
  static Laurent L(int e = 1, long k = 1);

  bool is_zero() const { return c.empty(); }
  long at(int e) const;
  bool is_monomial() const { return c.size() == 1; }
  int min_exp() const { return c.begin()->first; }
  int max_exp() const { return c.rbegin()->first; }
  long eval_at_one() const;

  Laurent operator-() const;
  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  bool operator==(const Laurent& o) const { return c == o.c; }
  bool operator!=(const Laurent& o) const { return c != o.c; }

  std::string str() const;
};

}  // namespace nmf
