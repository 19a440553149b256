#pragma once

#include <string>
#include <utility>
#include <vector>

#include "nmf/field.hpp"

namespace nmf {

// Dense univariate polynomial; c[i] is the coefficient of t^i.
class Poly {
 public:
  std::vector<Fe> c;

  Poly() = default;
  explicit Poly(std::vector<Fe> coeffs) : c(std::move(coeffs)) { trim(); }
  Poly(const Fe& constant) {  // NOLINT(google-explicit-constructor)
    if (!constant.is_zero()) c.push_back(constant);
  }
  static Poly monomial(const Fe& coef, int k);
  static Poly var() { return monomial(Fe(1), 1); }
  // prod (t - r_i)
  static Poly from_roots(const std::vector<Fe>& roots);

  int deg() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  bool is_const() const { return c.size() <= 1; }
  Fe lc() const { return c.empty() ? Fe() : c.back(); }
  Fe coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c.size())) ? c[i] : Fe();
  }
  Fe operator()(const Fe& v) const;

  TowerPtr tower() const;
  Poly lift(const TowerPtr& t) const;
  bool is_rational() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b);
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly scaled(const Fe& s) const;
  Poly monic() const;
  Poly derivative() const;
  Poly pow(int e) const;
  // p(t + a)
  Poly shift(const Fe& a) const;
  // p(q(t))
  Poly compose(const Poly& q) const;
  // Reverse coefficient order for formal degree n.
  Poly reversed(int n) const;

  std::string str(const std::string& v = "t") const;

  void trim();
};

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly operator/(const Poly& a, const Poly& b);  // exact; throws otherwise
Poly operator%(const Poly& a, const Poly& b);
Poly gcd(const Poly& a, const Poly& b);  // monic, gcd(0,0)=0
// g = s*a + t*b with g monic
struct Xgcd {
  Poly g, s, t;
};
Xgcd xgcd(const Poly& a, const Poly& b);

// Yun decomposition: f = lc * prod parts[i].first^parts[i].second.
std::vector<std::pair<Poly, int>> squarefree(const Poly& f);
Poly radical(const Poly& f);

Fe resultant(const Poly& a, const Poly& b);
Fe discriminant(const Poly& f);

// Unique polynomial of degree < n through (xs[i], ys[i]).
Poly interpolate(const std::vector<Fe>& xs, const std::vector<Fe>& ys);

// Determinant by Gaussian elimination over the field.
Fe determinant(std::vector<std::vector<Fe>> m);
// Sylvester determinant for formal degrees f.size()-1 and g.size()-1.
Fe sylvester_resultant(const std::vector<Fe>& f, const std::vector<Fe>& g);

// Polynomials in one variable whose coefficients are polynomials in c.
using ParamPoly = std::vector<Poly>;
// Formal discriminant in the z-variable of sum g[k](c) z^k, as a polynomial
// in c. The leading coefficient g.back() must be a nonzero polynomial.
Poly param_discriminant(const ParamPoly& g);

}  // namespace nmf
