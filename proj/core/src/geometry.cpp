#include "nmf/geometry.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace nmf {
namespace {

long cross(const Exp& o, const Exp& a, const Exp& b) {
  return static_cast<long>(a.first - o.first) * (b.second - o.second) -
         static_cast<long>(a.second - o.second) * (b.first - o.first);
}

bool ray_less(const Vec2& u, const Vec2& v) {
  return static_cast<long>(u.second) * v.first < static_cast<long>(v.second) * u.first;
}

Face make_segment(const Exp& lo, const Exp& hi) {
  const int da = hi.first - lo.first, db = lo.second - hi.second;
  const int g = std::gcd(da, db);
  Face f;
  f.dim = 1;
  f.lo = lo;
  f.hi = hi;
  f.p = db / g;
  f.q = da / g;
  f.level = f.p * lo.first + f.q * lo.second;
  return f;
}

}  // namespace

int Face::lattice_length() const {
  if (dim == 0) return 0;
  return std::gcd(hi.first - lo.first, lo.second - hi.second);
}

std::string Face::str() const {
  auto pt = [](const Exp& e) {
    return "(" + std::to_string(e.first) + "," + std::to_string(e.second) + ")";
  };
  if (dim == 0) return pt(lo);
  return "[" + pt(lo) + "," + pt(hi) + "]";
}

NewtonDiagram NewtonDiagram::of_points(std::vector<Exp> pts) {
  if (pts.empty()) throw std::invalid_argument("Newton diagram of an empty support");
  std::sort(pts.begin(), pts.end());
  std::vector<Exp> stair;
  for (const auto& e : pts)
    if (stair.empty() || e.second < stair.back().second) stair.push_back(e);
  NewtonDiagram d;
  for (const auto& e : stair) {
    while (d.vertices.size() >= 2 &&
           cross(d.vertices[d.vertices.size() - 2], d.vertices.back(), e) <= 0)
      d.vertices.pop_back();
    d.vertices.push_back(e);
  }
  return d;
}

NewtonDiagram NewtonDiagram::of(const BiPoly& P, bool prime) {
  if (P.is_zero()) throw std::invalid_argument("Newton diagram of the zero polynomial");
  std::vector<Exp> pts;
  for (const auto& [e, c] : P.t)
    if (!prime || e.second > 0) pts.push_back(e);
  if (pts.empty()) throw std::invalid_argument("empty support off the x-axis");
  return of_points(std::move(pts));
}

std::vector<Face> NewtonDiagram::segments() const {
  std::vector<Face> out;
  for (size_t i = 1; i < vertices.size(); ++i)
    out.push_back(make_segment(vertices[i - 1], vertices[i]));
  return out;
}

std::vector<Face> NewtonDiagram::faces() const {
  std::vector<Face> out;
  for (size_t i = 0; i < vertices.size(); ++i) {
    if (i > 0) out.push_back(make_segment(vertices[i - 1], vertices[i]));
    out.push_back(Face::vertex(vertices[i]));
  }
  return out;
}

int NewtonDiagram::support(int p, int q) const {
  if (p < 0 || q < 0 || (p == 0 && q == 0))
    throw std::invalid_argument("support function needs a nonzero direction in N^2");
  int m = std::numeric_limits<int>::max();
  for (const auto& v : vertices) m = std::min(m, p * v.first + q * v.second);
  return m;
}

Face NewtonDiagram::face_at(int p, int q) const {
  const int m = support(p, q);
  std::vector<size_t> hit;
  for (size_t i = 0; i < vertices.size(); ++i)
    if (p * vertices[i].first + q * vertices[i].second == m) hit.push_back(i);
  if (hit.size() == 1) {
    Face f = Face::vertex(vertices[hit[0]]);
    f.level = m;
    return f;
  }
  return make_segment(vertices[hit.front()], vertices[hit.back()]);
}

std::string Cone::str() const {
  auto v = [](const Vec2& w) {
    return "(" + std::to_string(w.first) + "," + std::to_string(w.second) + ")";
  };
  if (dim == 1) return "R>0" + v(w1);
  return "R>0" + v(w1) + "+R>0" + v(w2);
}

std::vector<Vec2> dual_rays(const NewtonDiagram& d) {
  std::vector<Vec2> rays;
  for (const auto& s : d.segments()) rays.emplace_back(s.p, s.q);
  return rays;
}

std::vector<Cone> dual_fan(const NewtonDiagram& d) {
  std::vector<Vec2> gens{{1, 0}};
  for (const auto& r : dual_rays(d)) gens.push_back(r);
  gens.emplace_back(0, 1);
  std::vector<Cone> out;
  for (size_t i = 0; i + 1 < gens.size(); ++i) {
    if (i > 0) out.push_back(Cone{1, gens[i], gens[i]});
    out.push_back(Cone{2, gens[i], gens[i + 1]});
  }
  return out;
}

std::vector<FanCone> fan_ec(const NewtonDiagram& a, const NewtonDiagram& b) {
  std::vector<Vec2> rays = dual_rays(a);
  for (const auto& r : dual_rays(b)) rays.push_back(r);
  std::sort(rays.begin(), rays.end(), ray_less);
  rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
  std::vector<Vec2> gens{{1, 0}};
  gens.insert(gens.end(), rays.begin(), rays.end());
  gens.emplace_back(0, 1);
  std::vector<FanCone> out;
  for (size_t i = 0; i + 1 < gens.size(); ++i) {
    if (i > 0) {
      FanCone r;
      r.cone = Cone{1, gens[i], gens[i]};
      r.face_a = a.face_at(gens[i].first, gens[i].second);
      r.face_b = b.face_at(gens[i].first, gens[i].second);
      out.push_back(r);
    }
    FanCone c;
    c.cone = Cone{2, gens[i], gens[i + 1]};
    const int p = gens[i].first + gens[i + 1].first, q = gens[i].second + gens[i + 1].second;
    c.face_a = a.face_at(p, q);
    c.face_b = b.face_at(p, q);
    c.is_cv = i == 0;
    c.is_ch = i + 2 == gens.size();
    out.push_back(c);
  }
  return out;
}

Poly face_zform(const BiPoly& P, const Face& f) {
  if (f.dim == 0) return Poly(P.coeff(f.lo.first, f.lo.second));
  const int len = f.lattice_length();
  std::vector<Fe> c(len + 1);
  for (int j = 0; j <= len; ++j) c[j] = P.coeff(f.hi.first - j * f.q, f.hi.second + j * f.p);
  return Poly(std::move(c));
}

FacePolynomial face_polynomial(const BiPoly& P, const Face& f, const TowerPtr& K) {
  FacePolynomial fp;
  fp.face = f;
  if (f.dim == 0) {
    fp.prefix = f.lo;
    fp.scalar = P.coeff(f.lo.first, f.lo.second);
    fp.zform = Poly(Fe(1));
    fp.restriction = BiPoly::monomial(fp.scalar, f.lo.first, f.lo.second);
    return fp;
  }
  fp.prefix = {f.lo.first, f.hi.second};
  fp.zform = face_zform(P, f);
  fp.scalar = fp.zform.lc();
  for (auto& [g, e] : factor_over(fp.zform, K)) fp.orbits.push_back(RootOrbit{g, e});
  fp.restriction = P.initial_form(f.p, f.q);
  return fp;
}

std::vector<SmoothWitness> smooth_witnesses(const BiPoly& P, const Face& f) {
  std::vector<SmoothWitness> out;
  if (f.dim != 1) return out;
  if (f.hi.second == 0 && f.p == 1) {
    Exp v{f.hi.first - f.q, 1};
    if (!P.coeff(v.first, v.second).is_zero() && !P.coeff(f.hi.first, 0).is_zero())
      out.push_back({Smoothness::YSmooth, v, f.hi});
  }
  if (f.lo.first == 0 && f.q == 1) {
    Exp v{1, f.lo.second - f.p};
    if (!P.coeff(v.first, v.second).is_zero() && !P.coeff(0, f.lo.second).is_zero())
      out.push_back({Smoothness::XSmooth, v, f.lo});
  }
  return out;
}

Smoothness is_smooth_face(const BiPoly& P, const Face& f) {
  auto w = smooth_witnesses(P, f);
  return w.empty() ? Smoothness::NotSmooth : w.front().kind;
}

bool is_nondegenerate(const BiPoly& P) {
  NewtonDiagram d = NewtonDiagram::of(P);
  for (const auto& s : d.segments()) {
    Poly g = face_zform(P, s);
    if (gcd(g, g.derivative()).deg() > 0) return false;
  }
  return true;
}

}  // namespace nmf
