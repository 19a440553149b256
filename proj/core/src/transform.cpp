#include "nmf/transform.hpp"

#include <numeric>
#include <stdexcept>

namespace nmf {

std::string NewtonMap::str() const {
  return "sigma(" + std::to_string(p) + "," + std::to_string(q) + "," + mu.str() + ")";
}

NewtonMap make_newton_map(int p, int q, const Fe& mu) {
  if (p < 1 || q < 0 || std::gcd(p, q) != 1)
    throw std::invalid_argument("Newton map needs coprime (p,q) with p >= 1");
  if (mu.is_zero()) throw std::invalid_argument("Newton map needs mu != 0");
  NewtonMap m;
  m.p = p;
  m.q = q;
  m.mu = mu;
  if (q <= 1) {
    m.pp = 1;
    m.qq = q == 0 ? 0 : p - 1;
    return m;
  }
  for (int a = 1; a <= q; ++a) {
    if ((static_cast<long>(p) * a) % q == 1) {
      m.pp = a;
      m.qq = (p * a - 1) / q;
      return m;
    }
  }
  throw std::logic_error("no inverse of p modulo q");
}

BiPoly substitute_newton(const BiPoly& P, const NewtonMap& m) {
  const Fe shift = m.mu.pow(m.pp);
  const Fe xs = m.mu.pow(m.qq);
  std::vector<Poly> ypow{Poly(Fe(1))};  // (y1 + mu^{p'})^b
  const Poly lin({shift, Fe(1)});
  BiPoly r;
  for (const auto& [e, c] : P.t) {
    while (static_cast<int>(ypow.size()) <= e.second) ypow.push_back(ypow.back() * lin);
    const Fe k = c * xs.pow(e.first);
    const int xe = m.p * e.first + m.q * e.second;
    const Poly& yp = ypow[e.second];
    for (int j = 0; j <= yp.deg(); ++j)
      r += BiPoly::monomial(k * yp.c[j], xe, j);
  }
  return r;
}

TransformOutcome apply_transform(const BiPoly& P, const NewtonMap& m) {
  if (P.is_zero()) throw std::invalid_argument("transform of the zero polynomial");
  TransformOutcome out;
  const NewtonDiagram d = NewtonDiagram::of(P);
  out.height_before = d.height();
  BiPoly img = substitute_newton(P, m);
  out.N = img.ord_x();
  out.quotient = img.shifted(-out.N, 0);
  out.height_after = NewtonDiagram::of(out.quotient).height();
  const Face f = d.face_at(m.p, m.q);
  if (f.dim == 1) {
    Poly g = face_zform(P, f);
    const Poly lin({-m.mu, Fe(1)});
    while (g.deg() > 0 && g(m.mu).is_zero()) {
      g = g / lin;
      ++out.nu;
    }
    if (out.nu > 0) out.kind = TransformOutcome::Kind::Root;
  }
  return out;
}

std::vector<Triple> enumerate_triples(const BiPoly& P, const TowerPtr& K) {
  std::vector<Triple> out;
  const NewtonDiagram d = NewtonDiagram::of(P);
  for (const auto& s : d.segments()) {
    for (const auto& [g, e] : factor_over(face_zform(P, s), K))
      out.push_back(Triple{s.p, s.q, s, g, e});
  }
  return out;
}

RootRep root_of(const Poly& factor, const TowerPtr& K) {
  if (factor.deg() < 1) throw std::invalid_argument("root of a constant");
  if (factor.deg() == 1) {
    Poly f = factor.monic();
    return RootRep{(-f.c[0]).lift(K), K};
  }
  TowerPtr t = Tower::extend(K, factor.monic());
  return RootRep{Fe::generator(t), t};
}

std::string BaseCaseShape::str() const {
  auto s = [](int v) { return std::to_string(v); };
  if (kind == Kind::MonMon)
    return "MonMon{" + s(M1) + "," + s(m1) + "," + s(M2) + "," + s(m2) + "}";
  return "Dim1Dim1{" + s(M1) + "," + s(m1) + "," + s(M2) + "," + s(m2) + ",q=" + s(q) +
         ",mu=" + mu.str() + "}";
}

std::optional<SmoothPower> smooth_power(const BiPoly& A) {
  if (A.is_zero()) return std::nullopt;
  SmoothPower sp;
  sp.M = A.ord_x();
  const BiPoly a = A.shifted(-sp.M, 0);
  if (!a.constant().is_zero()) return sp;
  const NewtonDiagram d = NewtonDiagram::of(a);
  if (d.vertices.size() != 2) return std::nullopt;
  const Exp top = d.vertices[0], bot = d.vertices[1];
  if (top.first != 0 || bot.second != 0) return std::nullopt;
  const int m = top.second;
  if (bot.first % m != 0) return std::nullopt;
  const int q = bot.first / m;
  const Face seg = d.segments().front();
  Poly g = face_zform(a, seg).monic();
  const Fe mu = -g.c[m - 1] / Fe(static_cast<long>(m));
  if (g != Poly({-mu, Fe(1)}).pow(m)) return std::nullopt;
  if (m >= 2) {
    // a must be unit * h^m with a single branch h through the origin
    auto parts = squarefree_y(a);
    const BiPoly* hit = nullptr;
    int hit_mult = 0;
    for (const auto& [h, e] : parts) {
      if (!h.constant().is_zero()) continue;
      if (hit) return std::nullopt;
      hit = &h;
      hit_mult = e;
    }
    if (!hit || hit_mult != m || hit->coeff(0, 1).is_zero()) return std::nullopt;
    sp.branch = *hit;
  } else {
    sp.branch = a.normalized();
  }
  sp.m = m;
  sp.q = q;
  sp.mu = mu;
  return sp;
}

std::optional<BaseCaseShape> detect_base_case(const BiPoly& A, const BiPoly& B) {
  if (A.is_zero() || B.is_zero()) throw std::invalid_argument("base case of a zero polynomial");
  const NewtonDiagram da = NewtonDiagram::of(A), db = NewtonDiagram::of(B);
  BaseCaseShape s;
  if (da.is_point() && db.is_point()) {
    s.kind = BaseCaseShape::Kind::MonMon;
    s.M1 = da.vertices[0].first;
    s.m1 = da.vertices[0].second;
    s.M2 = db.vertices[0].first;
    s.m2 = db.vertices[0].second;
    s.coef_a = A.coeff(s.M1, s.m1);
    s.coef_b = B.coeff(s.M2, s.m2);
    return s;
  }
  auto sa = smooth_power(A);
  if (!sa || sa->M < 1) return std::nullopt;
  auto sb = smooth_power(B);
  if (!sb || sb->M < 1) return std::nullopt;
  if (sa->m == 0 && sb->m == 0) return std::nullopt;
  if (sa->m > 0 && sb->m > 0) {
    if (sa->q != sb->q || sa->mu != sb->mu) return std::nullopt;
    if (!gcd(sa->branch, sb->branch).constant().is_zero()) return std::nullopt;
  }
  const SmoothPower& ref = sa->m > 0 ? *sa : *sb;
  s.kind = BaseCaseShape::Kind::Dim1Dim1;
  s.M1 = sa->M;
  s.m1 = sa->m;
  s.M2 = sb->M;
  s.m2 = sb->m;
  s.q = ref.q;
  s.mu = ref.mu;
  s.coef_a = A.coeff(sa->M, sa->m);
  s.coef_b = B.coeff(sb->M, sb->m);
  return s;
}

}  // namespace nmf
