#pragma once

#include <map>
#include <vector>

#include "nmf/geometry.hpp"
#include "nmf/laurent.hpp"

namespace nmf {

// Rational polyhedral cone of dimension <= 2 with primitive generators.
struct Cone2 {
  enum class Kind { Ray, Open, HalfOpen };  // HalfOpen: w1 closed, w2 open
  Kind kind = Kind::Open;
  Vec2 w1{1, 0}, w2{0, 1};

  static Cone2 ray(Vec2 w);
  static Cone2 open(Vec2 w1, Vec2 w2);
  static Cone2 half_open(Vec2 closed, Vec2 open);
  bool contains(const Vec2& v) const;
};

using LinearForm = Vec2;
inline long pairing(const LinearForm& f, const Vec2& v) {
  return static_cast<long>(f.first) * v.first + static_cast<long>(f.second) * v.second;
}

// Compactly supported Euler characteristic of the cone.
int chi_c(const Cone2& C);

// Lattice points of the fundamental parallelepiped (the generator itself for a ray).
std::vector<Vec2> fundamental_points(const Cone2& C);

// sum_{v in C} L^{-eta(v)} T^{phi(v)} as numerator / prod (1 - L^{-e} T^s).
struct ConeSeries {
  std::map<int, Laurent> numerator;  // T-degree -> coefficient
  std::vector<Vec2> denominator;     // (e, s)

  std::vector<Laurent> expand(int n) const;  // coefficients of T^0..T^n
  long limit_at_infinity() const;
};

ConeSeries cone_series_closed_form(const LinearForm& phi, const LinearForm& eta, const Cone2& C);
long cone_series_limit(const LinearForm& phi, const LinearForm& eta, const Cone2& C);

// Coefficients attached to the cones of the common refinement.
enum class EpsShape { AxisX, AxisY, Interior };
struct Eps2 {
  int eps = 0;
  EpsShape shape = EpsShape::Interior;
  int exponent = 0;  // a0 - a1 or b0 - b1 in the axis cases
  Vec2 diff;         // (a0 - a1, b0 - b1)
};
// a = vertex of N(P - cQ), b = vertex of N(Q) on the open 2-cone (w1, w2).
Eps2 eps_dim2(const Exp& a, const Exp& b, const Vec2& w1, const Vec2& w2);
// -1 if <(a0 - a1, b0 - b1), (p, q)> > 0, else 0.
int eps_dim1(const Exp& a, const Exp& b, const Vec2& ray);

}  // namespace nmf
