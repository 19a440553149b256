#include "nmf/bipoly.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace nmf {
namespace {

// Leading term for lex order on (b, a).
std::map<Exp, Fe>::const_iterator lead(const BiPoly& p) {
  auto best = p.t.begin();
  for (auto it = p.t.begin(); it != p.t.end(); ++it) {
    const auto& [e, c] = *it;
    if (e.second > best->first.second ||
        (e.second == best->first.second && e.first > best->first.first))
      best = it;
  }
  return best;
}

bool try_div(const BiPoly& a, const BiPoly& b, BiPoly* quot) {
  if (b.is_zero()) throw std::domain_error("bivariate division by zero");
  BiPoly r = a, q;
  const auto lb = lead(b);
  const Fe lbinv = lb->second.inverse();
  while (!r.is_zero()) {
    const auto lr = lead(r);
    const int da = lr->first.first - lb->first.first;
    const int db = lr->first.second - lb->first.second;
    if (da < 0 || db < 0) return false;
    BiPoly m = BiPoly::monomial(lr->second * lbinv, da, db);
    q += m;
    r -= m * b;
  }
  if (quot) *quot = std::move(q);
  return true;
}

BiPoly lc_y(const BiPoly& p) { return BiPoly::in_x(p.coeff_y(p.deg_y())); }

BiPoly prem_y(BiPoly r, const BiPoly& b) {
  const int db = b.deg_y();
  const BiPoly lb = lc_y(b);
  while (!r.is_zero() && r.deg_y() >= db) {
    const int k = r.deg_y() - db;
    r = lb * r - (lc_y(r) * b).shifted(0, k);
  }
  return r;
}

}  // namespace

BiPoly BiPoly::monomial(const Fe& c, int a, int b) {
  BiPoly p;
  if (!c.is_zero()) p.t.emplace(Exp{a, b}, c);
  return p;
}

BiPoly BiPoly::in_x(const Poly& p) {
  BiPoly r;
  for (int i = 0; i <= p.deg(); ++i)
    if (!p.c[i].is_zero()) r.t.emplace(Exp{i, 0}, p.c[i]);
  return r;
}

BiPoly BiPoly::in_y(const Poly& p) {
  BiPoly r;
  for (int i = 0; i <= p.deg(); ++i)
    if (!p.c[i].is_zero()) r.t.emplace(Exp{0, i}, p.c[i]);
  return r;
}

Fe BiPoly::coeff(int a, int b) const {
  auto it = t.find({a, b});
  return it == t.end() ? Fe() : it->second;
}

std::vector<Exp> BiPoly::support() const {
  std::vector<Exp> s;
  for (const auto& [e, c] : t) s.push_back(e);
  return s;
}

int BiPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : t) d = std::max(d, e.first + e.second);
  return d;
}

int BiPoly::deg_x() const {
  int d = -1;
  for (const auto& [e, c] : t) d = std::max(d, e.first);
  return d;
}

int BiPoly::deg_y() const {
  int d = -1;
  for (const auto& [e, c] : t) d = std::max(d, e.second);
  return d;
}

int BiPoly::ord_x() const {
  if (t.empty()) return std::numeric_limits<int>::max();
  int d = std::numeric_limits<int>::max();
  for (const auto& [e, c] : t) d = std::min(d, e.first);
  return d;
}

int BiPoly::ord_y() const {
  if (t.empty()) return std::numeric_limits<int>::max();
  int d = std::numeric_limits<int>::max();
  for (const auto& [e, c] : t) d = std::min(d, e.second);
  return d;
}

TowerPtr BiPoly::tower() const {
  TowerPtr k;
  for (const auto& [e, c] : t) k = join(k, c.tower());
  return k;
}

BiPoly BiPoly::lift(const TowerPtr& k) const {
  BiPoly r;
  for (const auto& [e, c] : t) r.t.emplace(e, c.lift(k));
  return r;
}

BiPoly BiPoly::operator-() const {
  BiPoly r = *this;
  for (auto& [e, c] : r.t) c = -c;
  return r;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  for (const auto& [e, c] : o.t) {
    auto it = t.find(e);
    if (it == t.end()) {
      t.emplace(e, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) t.erase(it);
    }
  }
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) { return *this += -o; }

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly r;
  for (const auto& [ea, ca] : a.t) {
    for (const auto& [eb, cb] : b.t) {
      Exp e{ea.first + eb.first, ea.second + eb.second};
      auto it = r.t.find(e);
      if (it == r.t.end()) r.t.emplace(e, ca * cb);
      else it->second += ca * cb;
    }
  }
  for (auto it = r.t.begin(); it != r.t.end();) {
    if (it->second.is_zero()) it = r.t.erase(it);
    else ++it;
  }
  return r;
}

bool operator==(const BiPoly& a, const BiPoly& b) {
  if (a.t.size() != b.t.size()) return false;
  for (auto i = a.t.begin(), j = b.t.begin(); i != a.t.end(); ++i, ++j)
    if (i->first != j->first || i->second != j->second) return false;
  return true;
}

BiPoly BiPoly::scaled(const Fe& s) const {
  if (s.is_zero()) return {};
  BiPoly r = *this;
  for (auto& [e, c] : r.t) c *= s;
  return r;
}

BiPoly BiPoly::pow(int e) const {
  BiPoly r(Fe(1)), b = *this;
  while (e > 0) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

BiPoly BiPoly::dx() const {
  BiPoly r;
  for (const auto& [e, c] : t)
    if (e.first > 0) r.t.emplace(Exp{e.first - 1, e.second}, c * Fe(static_cast<long>(e.first)));
  return r;
}

BiPoly BiPoly::dy() const {
  BiPoly r;
  for (const auto& [e, c] : t)
    if (e.second > 0) r.t.emplace(Exp{e.first, e.second - 1}, c * Fe(static_cast<long>(e.second)));
  return r;
}

Fe BiPoly::eval(const Fe& x, const Fe& y) const {
  Fe r;
  for (const auto& [e, c] : t) r += c * x.pow(e.first) * y.pow(e.second);
  return r;
}

BiPoly BiPoly::translate(const Fe& u, const Fe& v) const {
  if (u.is_zero() && v.is_zero()) return *this;
  const BiPoly xs = x() + BiPoly(u), ys = y() + BiPoly(v);
  std::vector<BiPoly> px{BiPoly(Fe(1))}, py{BiPoly(Fe(1))};
  BiPoly r;
  for (const auto& [e, c] : t) {
    while (static_cast<int>(px.size()) <= e.first) px.push_back(px.back() * xs);
    while (static_cast<int>(py.size()) <= e.second) py.push_back(py.back() * ys);
    r += (px[e.first] * py[e.second]).scaled(c);
  }
  return r;
}

BiPoly BiPoly::shifted(int da, int db) const {
  BiPoly r;
  for (const auto& [e, c] : t) {
    Exp n{e.first + da, e.second + db};
    if (n.first < 0 || n.second < 0) throw std::logic_error("shifted: negative exponent");
    r.t.emplace(n, c);
  }
  return r;
}

Poly BiPoly::coeff_y(int b) const {
  std::vector<Fe> c;
  for (const auto& [e, v] : t) {
    if (e.second != b) continue;
    if (static_cast<int>(c.size()) <= e.first) c.resize(e.first + 1);
    c[e.first] = v;
  }
  return Poly(std::move(c));
}

int BiPoly::weighted_order(int p, int q) const {
  int m = std::numeric_limits<int>::max();
  for (const auto& [e, c] : t) m = std::min(m, p * e.first + q * e.second);
  return m;
}

BiPoly BiPoly::initial_form(int p, int q) const {
  BiPoly r;
  const int m = weighted_order(p, q);
  for (const auto& [e, c] : t)
    if (p * e.first + q * e.second == m) r.t.emplace(e, c);
  return r;
}

BiPoly BiPoly::normalized() const {
  if (is_zero()) return {};
  return scaled(lead(*this)->second.inverse());
}

std::string BiPoly::str() const {
  if (is_zero()) return "0";
  std::vector<std::pair<Exp, Fe>> terms(t.begin(), t.end());
  std::sort(terms.begin(), terms.end(), [](const auto& l, const auto& r) {
    int dl = l.first.first + l.first.second, dr = r.first.first + r.first.second;
    if (dl != dr) return dl > dr;
    return l.first.first > r.first.first;
  });
  std::string s;
  for (const auto& [e, c] : terms) {
    std::string mono;
    auto var = [&](const char* v, int k) {
      if (k == 0) return;
      if (!mono.empty()) mono += "*";
      mono += v;
      if (k > 1) mono += "^" + std::to_string(k);
    };
    var("x", e.first);
    var("y", e.second);
    bool neg = false;
    std::string coef;
    if (c.is_rational()) {
      mpq_class q = c.rational();
      neg = q < 0;
      coef = neg ? mpq_class(-q).get_str() : q.get_str();
    } else {
      coef = c.str();
    }
    std::string term = mono.empty() ? coef : (coef == "1" ? mono : coef + "*" + mono);
    if (s.empty()) s = neg ? "-" + term : term;
    else s += neg ? " - " + term : " + " + term;
  }
  return s;
}

BiPoly exact_div(const BiPoly& a, const BiPoly& b) {
  BiPoly q;
  if (!try_div(a, b, &q)) throw std::logic_error("inexact bivariate division");
  return q;
}

bool divides(const BiPoly& b, const BiPoly& a) { return try_div(a, b, nullptr); }

Poly content_y(const BiPoly& a) {
  Poly g;
  for (int b = 0; b <= a.deg_y(); ++b) {
    g = gcd(g, a.coeff_y(b));
    if (g.deg() == 0) break;
  }
  return g;
}

BiPoly primitive_y(const BiPoly& a) {
  if (a.is_zero()) return a;
  const Poly c = content_y(a);
  if (c.deg() == 0) return a;
  BiPoly r;
  for (int b = 0; b <= a.deg_y(); ++b) {
    Poly cb = a.coeff_y(b);
    if (!cb.is_zero()) r += BiPoly::in_x(cb / c).shifted(0, b);
  }
  return r;
}

BiPoly gcd(const BiPoly& a0, const BiPoly& b0) {
  if (a0.is_zero()) return b0.normalized();
  if (b0.is_zero()) return a0.normalized();
  const Poly c = gcd(content_y(a0), content_y(b0));
  BiPoly a = primitive_y(a0), b = primitive_y(b0);
  if (a.deg_y() < b.deg_y()) std::swap(a, b);
  while (!b.is_zero()) {
    if (b.deg_y() == 0) {
      a = BiPoly(Fe(1));
      break;
    }
    BiPoly r = prem_y(a, b);
    a = std::move(b);
    b = r.is_zero() ? r : primitive_y(r);
  }
  return (BiPoly::in_x(c) * primitive_y(a)).normalized();
}

std::vector<std::pair<BiPoly, int>> squarefree_y(const BiPoly& f) {
  std::vector<std::pair<BiPoly, int>> out;
  BiPoly a = primitive_y(f);
  if (a.deg_y() < 1) return out;
  BiPoly da = a.dy();
  BiPoly g = gcd(a, da);
  BiPoly b = exact_div(a, g);
  BiPoly d = exact_div(da, g) - b.dy();
  for (int i = 1; b.deg_y() > 0; ++i) {
    BiPoly h = gcd(b, d);
    b = exact_div(b, h);
    d = exact_div(d, h) - b.dy();
    if (h.deg_y() > 0) out.emplace_back(h.normalized(), i);
  }
  return out;
}

}  // namespace nmf
