#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "nmf/poly.hpp"

namespace nmf {

using Exp = std::pair<int, int>;  // (a, b) for x^a y^b

// Sparse polynomial in x, y over a field tower.
class BiPoly {
 public:
  std::map<Exp, Fe> t;

  BiPoly() = default;
  BiPoly(const Fe& c) {  // NOLINT(google-explicit-constructor)
    if (!c.is_zero()) t.emplace(Exp{0, 0}, c);
  }
  static BiPoly monomial(const Fe& c, int a, int b);
  static BiPoly x() { return monomial(Fe(1), 1, 0); }
  static BiPoly y() { return monomial(Fe(1), 0, 1); }
  static BiPoly in_x(const Poly& p);
  static BiPoly in_y(const Poly& p);

  bool is_zero() const { return t.empty(); }
  Fe coeff(int a, int b) const;
  Fe constant() const { return coeff(0, 0); }
  std::vector<Exp> support() const;
  int total_degree() const;
  int deg_x() const;
  int deg_y() const;
  int ord_x() const;  // largest k with x^k | P
  int ord_y() const;

  TowerPtr tower() const;
  BiPoly lift(const TowerPtr& k) const;

  BiPoly operator-() const;
  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend bool operator==(const BiPoly& a, const BiPoly& b);
  friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

  BiPoly scaled(const Fe& s) const;
  BiPoly pow(int e) const;
  BiPoly dx() const;
  BiPoly dy() const;
  Fe eval(const Fe& x, const Fe& y) const;
  // P(x + u, y + v)
  BiPoly translate(const Fe& u, const Fe& v) const;
  // Multiply by x^da y^db; negative shifts must divide exactly.
  BiPoly shifted(int da, int db) const;
  // Coefficient of y^b as a polynomial in x.
  Poly coeff_y(int b) const;
  // Terms on the line p*a + q*b = min.
  BiPoly initial_form(int p, int q) const;
  int weighted_order(int p, int q) const;
  // Leading coefficient w.r.t. lex order on (b, a); scales it to 1.
  BiPoly normalized() const;

  std::string str() const;
};

// Exact division in K[x, y]; throws if b does not divide a.
BiPoly exact_div(const BiPoly& a, const BiPoly& b);
bool divides(const BiPoly& b, const BiPoly& a);
// Normalized gcd (primitive PRS in y over K[x]).
BiPoly gcd(const BiPoly& a, const BiPoly& b);
// Content w.r.t. y (monic polynomial in x) and primitive part.
Poly content_y(const BiPoly& a);
BiPoly primitive_y(const BiPoly& a);
// Squarefree decomposition of the y-primitive part (Yun over K(x)).
std::vector<std::pair<BiPoly, int>> squarefree_y(const BiPoly& a);

}  // namespace nmf
