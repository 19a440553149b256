#include "nmf/cone.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace nmf {
namespace {

void check_primitive(const Vec2& w) {
  if (std::gcd(w.first, w.second) != 1) throw std::invalid_argument("cone generator not primitive");
}

long det(const Vec2& u, const Vec2& v) {
  return static_cast<long>(u.first) * v.second - static_cast<long>(u.second) * v.first;
}

// Coordinates of v in the basis (w1, w2), scaled by d = det(w1, w2) > 0.
std::pair<long, long> coords(const Cone2& C, const Vec2& v, long& d) {
  d = det(C.w1, C.w2);
  long a = det(v, C.w2), b = det(C.w1, v);
  if (d < 0) {
    d = -d;
    a = -a;
    b = -b;
  }
  return {a, b};
}

}  // namespace

Cone2 Cone2::ray(Vec2 w) {
  check_primitive(w);
  return Cone2{Kind::Ray, w, w};
}

Cone2 Cone2::open(Vec2 w1, Vec2 w2) {
  check_primitive(w1);
  check_primitive(w2);
  if (det(w1, w2) == 0) throw std::invalid_argument("colinear cone generators");
  return Cone2{Kind::Open, w1, w2};
}

Cone2 Cone2::half_open(Vec2 closed, Vec2 open) {
  Cone2 c = Cone2::open(closed, open);
  c.kind = Kind::HalfOpen;
  return c;
}

bool Cone2::contains(const Vec2& v) const {
  if (kind == Kind::Ray) {
    if (det(w1, v) != 0) return false;
    return pairing(w1, v) > 0;
  }
  long d;
  auto [a, b] = coords(*this, v, d);
  return b > 0 && (kind == Kind::HalfOpen ? a >= 0 : a > 0);
}

int chi_c(const Cone2& C) {
  switch (C.kind) {
    case Cone2::Kind::Ray:
      return -1;
    case Cone2::Kind::Open:
      return 1;
    case Cone2::Kind::HalfOpen:
      return 0;
  }
  return 0;
}

std::vector<Vec2> fundamental_points(const Cone2& C) {
  if (C.kind == Cone2::Kind::Ray) return {C.w1};
  const Vec2 s{C.w1.first + C.w2.first, C.w1.second + C.w2.second};
  const int x0 = std::min({0, C.w1.first, C.w2.first, s.first});
  const int x1 = std::max({0, C.w1.first, C.w2.first, s.first});
  const int y0 = std::min({0, C.w1.second, C.w2.second, s.second});
  const int y1 = std::max({0, C.w1.second, C.w2.second, s.second});
  std::vector<Vec2> out;
  for (int x = x0; x <= x1; ++x) {
    for (int y = y0; y <= y1; ++y) {
      long d;
      auto [a, b] = coords(C, {x, y}, d);
      const bool a_ok = C.kind == Cone2::Kind::HalfOpen ? (a >= 0 && a < d) : (a > 0 && a <= d);
      if (a_ok && b > 0 && b <= d) out.emplace_back(x, y);
    }
  }
  return out;
}

std::vector<Laurent> ConeSeries::expand(int n) const {
  std::vector<Laurent> r(n + 1);
  for (const auto& [t, k] : numerator)
    if (t <= n) r[t] += k;
  for (const auto& [e, s] : denominator) {
    // multiply by 1 / (1 - L^{-e} T^s): r[t] += L^{-e} r[t - s]
    for (int t = s; t <= n; ++t) r[t] += Laurent::L(-e) * r[t - s];
  }
  return r;
}

long ConeSeries::limit_at_infinity() const {
  if (numerator.empty()) return 0;
  int deg = 0;
  Laurent lead(1);
  for (const auto& [e, s] : denominator) {
    deg += s;
    lead = lead * Laurent::L(-e, -1);
  }
  const int top = numerator.rbegin()->first;
  if (top < deg) return 0;
  if (top > deg) throw std::domain_error("cone series does not converge at infinity");
  const Laurent& num = numerator.rbegin()->second;
  if (!num.is_monomial() || !lead.is_monomial() || num.min_exp() != lead.min_exp())
    throw std::domain_error("limit is not a constant");
  return num.c.begin()->second / lead.c.begin()->second;
}

ConeSeries cone_series_closed_form(const LinearForm& phi, const LinearForm& eta, const Cone2& C) {
  const long s1 = pairing(phi, C.w1), s2 = pairing(phi, C.w2);
  if (s1 <= 0 || s2 <= 0) throw std::invalid_argument("linear form not positive on the cone");
  ConeSeries cs;
  for (const auto& v : fundamental_points(C))
    cs.numerator[static_cast<int>(pairing(phi, v))] += Laurent::L(static_cast<int>(-pairing(eta, v)));
  cs.denominator.emplace_back(static_cast<int>(pairing(eta, C.w1)), static_cast<int>(s1));
  if (C.kind != Cone2::Kind::Ray)
    cs.denominator.emplace_back(static_cast<int>(pairing(eta, C.w2)), static_cast<int>(s2));
  return cs;
}

long cone_series_limit(const LinearForm& phi, const LinearForm& eta, const Cone2& C) {
  return cone_series_closed_form(phi, eta, C).limit_at_infinity();
}

Eps2 eps_dim2(const Exp& a, const Exp& b, const Vec2& w1, const Vec2& w2) {
  Eps2 r;
  r.diff = {a.first - b.first, a.second - b.second};
  if (a.second == 0 && b.second == 0) {
    r.shape = EpsShape::AxisX;
    r.exponent = r.diff.first;
    r.eps = r.exponent > 0 ? 1 : 0;
    return r;
  }
  if (a.first == 0 && b.first == 0) {
    r.shape = EpsShape::AxisY;
    r.exponent = r.diff.second;
    r.eps = r.exponent > 0 ? 1 : 0;
    return r;
  }
  r.shape = EpsShape::Interior;
  r.eps = pairing(w1, r.diff) > 0 && pairing(w2, r.diff) > 0 ? 1 : 0;
  return r;
}

int eps_dim1(const Exp& a, const Exp& b, const Vec2& ray) {
  return pairing(ray, {a.first - b.first, a.second - b.second}) > 0 ? -1 : 0;
}

}  // namespace nmf
