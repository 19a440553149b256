#include "nmf/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace nmf {

void Poly::trim() {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
}

Poly Poly::monomial(const Fe& coef, int k) {
  if (coef.is_zero()) return {};
  std::vector<Fe> v(k + 1);
  v[k] = coef;
  return Poly(std::move(v));
}

Poly Poly::from_roots(const std::vector<Fe>& roots) {
  Poly r(Fe(1));
  for (const auto& x : roots) r = r * Poly({-x, Fe(1)});
  return r;
}

Fe Poly::operator()(const Fe& v) const {
  Fe r;
  for (int i = deg(); i >= 0; --i) r = r * v + c[i];
  return r;
}

TowerPtr Poly::tower() const {
  TowerPtr t;
  for (const auto& x : c) t = join(t, x.tower());
  return t;
}

Poly Poly::lift(const TowerPtr& t) const {
  Poly r;
  r.c.reserve(c.size());
  for (const auto& x : c) r.c.push_back(x.lift(t));
  return r;
}

bool Poly::is_rational() const {
  return std::all_of(c.begin(), c.end(), [](const Fe& x) { return x.is_rational(); });
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& x : r.c) x = -x;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (c.size() < o.c.size()) c.resize(o.c.size());
  for (size_t i = 0; i < o.c.size(); ++i) c[i] += o.c[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (c.size() < o.c.size()) c.resize(o.c.size());
  for (size_t i = 0; i < o.c.size(); ++i) c[i] -= o.c[i];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Fe> r(a.c.size() + b.c.size() - 1);
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i].is_zero()) continue;
    for (size_t j = 0; j < b.c.size(); ++j) r[i + j] += a.c[i] * b.c[j];
  }
  return Poly(std::move(r));
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.c.size() != b.c.size()) return false;
  for (size_t i = 0; i < a.c.size(); ++i)
    if (a.c[i] != b.c[i]) return false;
  return true;
}

Poly Poly::scaled(const Fe& s) const {
  if (s.is_zero()) return {};
  Poly r = *this;
  for (auto& x : r.c) x *= s;
  r.trim();
  return r;
}

Poly Poly::monic() const {
  if (is_zero()) return {};
  return scaled(lc().inverse());
}

Poly Poly::derivative() const {
  if (c.size() <= 1) return {};
  std::vector<Fe> r(c.size() - 1);
  for (size_t i = 1; i < c.size(); ++i) r[i - 1] = c[i] * Fe(static_cast<long>(i));
  return Poly(std::move(r));
}

Poly Poly::pow(int e) const {
  Poly r(Fe(1)), b = *this;
  while (e > 0) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

Poly Poly::shift(const Fe& a) const { return compose(Poly({a, Fe(1)})); }

Poly Poly::compose(const Poly& q) const {
  Poly r;
  for (int i = deg(); i >= 0; --i) r = r * q + Poly(c[i]);
  return r;
}

Poly Poly::reversed(int n) const {
  std::vector<Fe> r(n + 1);
  for (int i = 0; i <= n; ++i) r[i] = coeff(n - i);
  return Poly(std::move(r));
}

std::string Poly::str(const std::string& v) const {
  if (is_zero()) return "0";
  std::string s;
  for (int i = deg(); i >= 0; --i) {
    const Fe& x = c[i];
    if (x.is_zero()) continue;
    std::string coef;
    bool neg = false;
    if (x.is_rational()) {
      mpq_class q = x.rational();
      neg = q < 0;
      if (neg) q = -q;
      coef = q.get_str();
    } else {
      coef = x.str();
    }
    std::string mono = i == 0 ? "" : (i == 1 ? v : v + "^" + std::to_string(i));
    std::string term;
    if (mono.empty()) term = coef;
    else if (coef == "1") term = mono;
    else term = coef + "*" + mono;
    if (s.empty()) s = neg ? "-" + term : term;
    else s += neg ? " - " + term : " + " + term;
  }
  return s;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  Poly r = a;
  const int db = b.deg();
  if (r.deg() < db) return {Poly(), r};
  Fe inv = b.lc().inverse();
  std::vector<Fe> q(r.deg() - db + 1);
  for (int i = r.deg(); i >= db; --i) {
    if (r.c[i].is_zero()) continue;
    Fe k = r.c[i] * inv;
    q[i - db] = k;
    for (int j = 0; j <= db; ++j) r.c[i - db + j] -= k * b.c[j];
  }
  r.trim();
  return {Poly(std::move(q)), r};
}

Poly operator/(const Poly& a, const Poly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::logic_error("inexact polynomial division");
  return q;
}

Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Xgcd xgcd(const Poly& a, const Poly& b) {
  Poly r0 = a, r1 = b, s0(Fe(1)), s1, t0, t1(Fe(1));
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly s2 = s0 - q * s1, t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  Fe inv = r0.lc().inverse();
  return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

std::vector<std::pair<Poly, int>> squarefree(const Poly& f) {
  std::vector<std::pair<Poly, int>> out;
  if (f.deg() < 1) return out;
  Poly a = f.monic();
  Poly da = a.derivative();
  Poly g = gcd(a, da);
  Poly b = a / g;
  Poly d = da / g - b.derivative();
  for (int i = 1; b.deg() > 0; ++i) {
    Poly h = gcd(b, d);
    b = b / h;
    d = d / h - b.derivative();
    if (h.deg() > 0) out.emplace_back(h, i);
  }
  return out;
}

Poly radical(const Poly& f) {
  Poly r(Fe(1));
  for (const auto& [p, e] : squarefree(f)) r = r * p;
  return r;
}

Fe resultant(const Poly& a0, const Poly& b0) {
  Poly a = a0, b = b0;
  if (a.is_zero() || b.is_zero()) return Fe();
  Fe acc(1);
  for (;;) {
    const int n = a.deg(), m = b.deg();
    if (m == 0) return acc * b.lc().pow(n);
    if (n == 0) return acc * a.lc().pow(m);
    if (n < m) {
      if ((n * m) % 2 == 1) acc = -acc;
      std::swap(a, b);
      continue;
    }
    Poly r = a % b;
    if (r.is_zero()) return Fe();
    if ((n * m) % 2 == 1) acc = -acc;
    acc *= b.lc().pow(n - r.deg());
    a = std::move(b);
    b = std::move(r);
  }
}

Fe discriminant(const Poly& f) {
  const int n = f.deg();
  if (n < 1) throw std::domain_error("discriminant of a constant");
  Fe r = resultant(f, f.derivative()) / f.lc();
  return ((n * (n - 1) / 2) % 2 == 1) ? -r : r;
}

Poly interpolate(const std::vector<Fe>& xs, const std::vector<Fe>& ys) {
  const size_t n = xs.size();
  if (n == 0) return {};
  std::vector<Fe> dd = ys;
  for (size_t j = 1; j < n; ++j)
    for (size_t i = n - 1; i >= j; --i) dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
  Poly r(dd[n - 1]);
  for (size_t k = n - 1; k-- > 0;) r = r * Poly({-xs[k], Fe(1)}) + Poly(dd[k]);
  return r;
}

Fe determinant(std::vector<std::vector<Fe>> m) {
  const size_t n = m.size();
  Fe det(1);
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && m[piv][col].is_zero()) ++piv;
    if (piv == n) return Fe();
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    Fe inv = m[col][col].inverse();
    for (size_t r = col + 1; r < n; ++r) {
      if (m[r][col].is_zero()) continue;
      Fe k = m[r][col] * inv;
      for (size_t j = col; j < n; ++j) m[r][j] -= k * m[col][j];
    }
  }
  return det;
}

Fe sylvester_resultant(const std::vector<Fe>& f, const std::vector<Fe>& g) {
  const int n = static_cast<int>(f.size()) - 1, m = static_cast<int>(g.size()) - 1;
  const int sz = n + m;
  if (sz <= 0) return Fe(1);
  std::vector<std::vector<Fe>> mat(sz, std::vector<Fe>(sz));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j) mat[i][i + j] = f[n - j];
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j) mat[m + i][i + j] = g[m - j];
  return determinant(std::move(mat));
}

Poly param_discriminant(const ParamPoly& g) {
  const int d = static_cast<int>(g.size()) - 1;
  if (d < 1 || g.back().is_zero())
    throw std::domain_error("param_discriminant: bad formal degree");
  if (d == 1) return Poly(Fe(1));
  int cdeg = 0;
  for (const auto& p : g) cdeg = std::max(cdeg, p.deg());
  const int samples = (2 * d - 1) * cdeg + 1;
  std::vector<Fe> xs, ys;
  for (int s = 0; s < samples; ++s) {
    Fe cv(static_cast<long>(s));
    std::vector<Fe> f(d + 1), df(d);
    for (int k = 0; k <= d; ++k) f[k] = g[k](cv);
    for (int k = 0; k < d; ++k) df[k] = f[k + 1] * Fe(static_cast<long>(k + 1));
    xs.push_back(cv);
    ys.push_back(sylvester_resultant(f, df));
  }
  Poly r = interpolate(xs, ys) / g.back();
  return ((d * (d - 1) / 2) % 2 == 1) ? -r : r;
}

}  // namespace nmf
