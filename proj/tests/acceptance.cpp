// Acceptance checks: one PASS/FAIL line per criterion, exit status 1 on any FAIL.
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "nmf/bifurcation.hpp"
#include "nmf/cone.hpp"
#include "nmf/oracle.hpp"
#include "nmf/parse.hpp"

using namespace nmf;

namespace {

const BiPoly kP = parse_bipoly("(x^2+y^3)^2+x^5");
const BiPoly kQ = parse_bipoly("2x^4+x^2y^3+x*y^5+y^8");

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (!pass) detail << "; ";
      pass = false;
      detail << what;
    }
  }
};

bool has(const CandidateValue& v, Reason r) {
  return std::find(v.reasons.begin(), v.reasons.end(), r) != v.reasons.end();
}

Outcome criterion1() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const BifurcationSet s = newton_bifurcation_set(kP, kQ);
  const double t = seconds_since(t0);
  o.require(s.str() == "{-4, 0, 1/2, inf}", "set is " + s.str());
  if (s.values.size() == 4) {
    auto vertex = [](const CandidateValue& v) {
      return has(v, Reason::VertexCancellation) || has(v, Reason::AxisVertexBadFace);
    };
    for (int i : {0, 1}) {
      o.require(has(s.values[i], Reason::DiscriminantRoot), s.values[i].str() + " not a discriminant root");
      o.require(s.values[i].provenance.front().find("c^2 + 4*c") != std::string::npos,
                "discriminant is not c^2 + 4c");
    }
    for (int i : {2, 3}) o.require(vertex(s.values[i]), s.values[i].str() + " not from a vertex");
  }
  o.require(t < 5.0, "took " + std::to_string(t) + " s");
  if (o.pass) o.detail << s.str() << " in " << t << " s; -4, 0 from c^2 + 4c; 1/2, inf from vertex cancellation";
  return o;
}

const std::vector<std::pair<Value, long>> kExpected = {{Value::finite(Fe(-4)), -1},
                                                       {Value::finite(Fe(0)), -3},
                                                       {Value::finite(Fe(mpq_class(1, 2))), -2},
                                                       {Value::infinity(), -1}};

Outcome criterion2() {
  Outcome o;
  std::string got;
  for (const auto& [v, chi] : kExpected) {
    const long e = motivic_milnor_fiber(MilnorQuery{kP, kQ, Fe(), Fe(), v}).motive.euler_realization();
    got += (got.empty() ? "" : ", ") + std::to_string(e);
    o.require(e == chi, "chi at " + v.str() + " is " + std::to_string(e));
  }
  for (const auto& c : random_probes(3, 42)) {
    const Motive m = motivic_milnor_fiber(MilnorQuery{kP, kQ, Fe(), Fe(), Value::finite(c)}).motive;
    o.require(m.is_zero() && m.euler_realization() == 0, "probe " + c.str() + " gives " + m.str());
  }
  if (o.pass) o.detail << "chi = " << got << " at -4, 0, 1/2, inf; 0 at three random probes";
  return o;
}

Outcome criterion3() {
  Outcome o;
  const std::vector<std::pair<std::string, BiPoly>> members = {
      {"P + 4Q", kP + kQ.scaled(Fe(4))},
      {"P - Q/2", kP - kQ.scaled(Fe(mpq_class(1, 2)))},
      {"P", kP},
      {"Q", kQ}};
  const std::vector<long> expected = {16, 17, 18, 16};
  double worst = 0;
  {
    const auto t0 = std::chrono::steady_clock::now();
    const long g = generic_mu(kP, kQ, Fe(), Fe(), random_probes(3, 1));
    worst = std::max(worst, seconds_since(t0) / 3);
    o.require(g == 15, "generic mu " + std::to_string(g));
  }
  for (size_t i = 0; i < members.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    const long mu = intersection_multiplicity(members[i].second.dx(), members[i].second.dy());
    worst = std::max(worst, seconds_since(t0));
    o.require(mu == expected[i], "mu(" + members[i].first + ") = " + std::to_string(mu));
  }
  o.require(worst < 2.0, "slowest mu took " + std::to_string(worst) + " s");
  for (const auto& [v, chi] : kExpected) {
    const long c = chi_via_mu(kP, kQ, Fe(), Fe(), v).chi;
    o.require(c == chi, "chi via mu at " + v.str() + " is " + std::to_string(c));
  }
  o.require(chi_via_mu(kP, kQ, Fe(), Fe(), Value::generic()).chi == 0, "chi via mu at a generic value");
  if (o.pass) o.detail << "mu = 15, 16, 17, 18, 16, slowest " << worst << " s; chi via mu = -1, -3, -2, -1, 0";
  return o;
}

// The main formula evaluated on the fan of the two diagrams, directly from
// the eps predicates of the cone lemma.
Motive eps_sum(const std::vector<Exp>& a, const std::vector<Exp>& b,
               const std::function<Motive(const FanCone&)>& on_ray) {
  Motive s;
  for (const auto& fc : fan_ec(NewtonDiagram::of_points(a), NewtonDiagram::of_points(b))) {
    if (fc.cone.dim == 1) {
      const int e = eps_dim1(fc.face_a.lo, fc.face_b.lo, fc.cone.w1);
      if (e != 0) s -= Laurent(e) * on_ray(fc);
      continue;
    }
    const Eps2 e = eps_dim2(fc.face_a.lo, fc.face_b.lo, fc.cone.w1, fc.cone.w2);
    if (e.eps == 0) continue;
    if (e.shape == EpsShape::Interior)
      s -= Laurent(e.eps) * Motive::of(MotiveClass::torus2(e.diff.first, e.diff.second));
    else
      s += Laurent(e.eps) * Motive::of(MotiveClass::torus1(e.exponent));
  }
  return s;
}

Outcome criterion4() {
  Outcome o;
  int monmon = 0, dim1 = 0, vanishing = 0, chi_zero = 0;
  const Fe mu(5);
  const Poly branch({-mu, Fe(1)});
  auto no_ray = [](const FanCone&) -> Motive { throw std::logic_error("unexpected ray"); };
  for (int M1 = 0; M1 <= 4; ++M1)
    for (int m1 = 0; m1 <= 4; ++m1)
      for (int M2 = 0; M2 <= 4; ++M2)
        for (int m2 = 0; m2 <= 4; ++m2)
          for (int q = 0; q <= 4; ++q) {
            // x^M1 y^m1 against x^M2 y^m2: a single 2-cone
            if ((M1 || m1) && (M2 || m2)) {
              BaseCaseShape s;
              s.M1 = M1, s.m1 = m1, s.M2 = M2, s.m2 = m2;
              s.coef_a = Fe(3), s.coef_b = Fe(-1);
              const Motive want = eps_sum({{M1, m1}}, {{M2, m2}}, no_ray);
              o.require(base_case_motive(s) == want, "MonMon table differs at " + s.str());
              ++monmon;
            }
            // x^M (y - mu x^q)^m on both sides
            if (M1 < 1 || M2 < 1 || q < 1 || (m1 == 0 && m2 == 0)) continue;
            BaseCaseShape s;
            s.kind = BaseCaseShape::Kind::Dim1Dim1;
            s.M1 = M1, s.m1 = m1, s.M2 = M2, s.m2 = m2, s.q = q, s.mu = mu;
            s.coef_a = Fe(1), s.coef_b = Fe(1);
            auto diagram = [q](int M, int m) {
              return m ? std::vector<Exp>{{M, m}, {M + q * m, 0}} : std::vector<Exp>{{M, 0}};
            };
            auto ray = [&](const FanCone& fc) {
              Factorization fa, fb;
              if (m1) fa.emplace_back(branch, m1);
              if (m2) fb.emplace_back(branch, m2);
              return Motive::of(MotiveClass::qhf(fc.cone.w1.first, fc.cone.w1.second, {M1, 0}, fa,
                                                 {M2, 0}, fb));
            };
            Motive want = eps_sum(diagram(M1, m1), diagram(M2, m2), ray);
            // the Newton transform along mu leaves x1^(M + q m) y1^m times a unit
            want += eps_sum({{M1 + q * m1, m1}}, {{M2 + q * m2, m2}}, no_ray);
            const Motive got = base_case_motive(s);
            o.require(got == want, "Dim1Dim1 formula differs at " + s.str());
            ++dim1;
            const int d = (M1 - M2) + q * (m1 - m2);
            if (d > 0 && M1 > M2 && m1 > m2) {
              o.require(got.euler_realization() == 0, "all four eps active but chi != 0 at " + s.str());
              ++chi_zero;
            }
            if (M2 >= M1 && M1 + q > M2 && m1 == 1 && m2 == 0) {
              o.require(got.is_zero(), "vanishing case is nonzero at " + s.str());
              ++vanishing;
            }
          }
  o.require(vanishing > 0 && chi_zero > 0, "special cases not reached");
  if (o.pass)
    o.detail << monmon << " monomial and " << dim1 << " smooth-branch tuples match the eps enumeration; "
             << vanishing << " vanishing cases are zero; " << chi_zero << " all-active cases have chi 0";
  return o;
}

Vec2 random_primitive(std::mt19937& rng) {
  std::uniform_int_distribution<int> d(0, 6);
  for (;;) {
    Vec2 v{d(rng), d(rng)};
    if (std::gcd(v.first, v.second) == 1) return v;
  }
}

std::vector<Laurent> lattice_sum(const LinearForm& phi, const LinearForm& eta, const Cone2& C, int n) {
  std::vector<Laurent> r(n + 1);
  const int box = n * (C.w1.first + C.w1.second + C.w2.first + C.w2.second + 1);
  for (int x = 0; x <= box; ++x)
    for (int y = 0; y <= box; ++y) {
      if (!C.contains({x, y})) continue;
      const long t = static_cast<long>(phi.first) * x + static_cast<long>(phi.second) * y;
      if (t <= n) r[t] += Laurent::L(-(eta.first * x + eta.second * y));
    }
  return r;
}

Outcome criterion5() {
  Outcome o;
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> f(1, 4), g(-3, 3), kind(0, 2);
  int done = 0, expanded = 0;
  while (done < 500) {
    const Vec2 w1 = random_primitive(rng), w2 = random_primitive(rng);
    const int k = kind(rng);
    if (k > 0 && static_cast<long>(w1.first) * w2.second == static_cast<long>(w1.second) * w2.first) continue;
    const Cone2 C = k == 0 ? Cone2::ray(w1) : (k == 1 ? Cone2::open(w1, w2) : Cone2::half_open(w1, w2));
    const LinearForm phi{f(rng), f(rng)}, eta{g(rng), g(rng)};
    const long want = k == 0 ? -1 : (k == 1 ? 1 : 0);
    const long lim = cone_series_limit(phi, eta, C);
    o.require(lim == want, "limit " + std::to_string(lim) + " on kind " + std::to_string(k));
    if (done % 5 == 0) {
      o.require(cone_series_closed_form(phi, eta, C).expand(8) == lattice_sum(phi, eta, C, 8),
                "closed form differs from the lattice sum");
      ++expanded;
    }
    ++done;
  }
  if (o.pass)
    o.detail << done << " limits in {1, -1, 0} by cone kind; " << expanded
             << " closed forms match lattice sums to order T^8";
  return o;
}

Outcome criterion6() {
  Outcome o;
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> d(0, 12), m(-20, 20);
  int n = 0;
  while (n < 100) {
    const int av = d(rng), a1 = av + 1 + d(rng), a0 = a1 + 1 + d(rng);
    const int mu = m(rng);
    if (mu == 0) continue;
    Motive s = Motive::of(MotiveClass::torus1(a0 - a1));   // eps_{C_h} = 1
    s -= Motive::of(MotiveClass::torus2(a0 - a1, 1));       // the transform along mu
    s += Motive::of(MotiveClass::qhf(1, a0 - av, {av, 0}, {{Poly({Fe(-mu), Fe(1)}), 1}}, {a1, 0}, {}));
    o.require(s.is_zero(), "nonzero for (a0, a1, av) = (" + std::to_string(a0) + ", " + std::to_string(a1) +
                               ", " + std::to_string(av) + "): " + s.str());
    ++n;
  }
  if (o.pass) o.detail << n << " random triples a0 > a1 > av >= 0 normalize to zero";
  return o;
}

BiPoly random_poly(std::mt19937& rng, int deg, int terms, bool origin) {
  std::uniform_int_distribution<int> c(-3, 3), e(0, deg);
  BiPoly p;
  for (int i = 0; i < terms; ++i) {
    const int a = e(rng), b = e(rng);
    if (a + b > deg || (origin && a + b == 0)) continue;
    p += BiPoly::monomial(Fe(static_cast<long>(c(rng))), a, b);
  }
  return p;
}

Outcome criterion7() {
  Outcome o;
  std::mt19937 rng(7);
  // support function against brute force
  std::uniform_int_distribution<int> e(0, 9), npts(1, 6), pick(1, 12);
  for (int t = 0; t < 1000; ++t) {
    std::vector<Exp> pts;
    for (int i = npts(rng); i > 0; --i) pts.emplace_back(e(rng), e(rng));
    int p = pick(rng), q = pick(rng);
    const int g = std::gcd(p, q);
    p /= g, q /= g;
    int brute = 1 << 30;
    for (const auto& [a, b] : pts) brute = std::min(brute, p * a + q * b);
    o.require(NewtonDiagram::of_points(pts).support(p, q) == brute, "support function");
  }
  // Newton substitution is a ring morphism
  const TowerPtr K = Tower::extend(nullptr, Poly({Fe(-3), Fe(), Fe(1)}));
  const Vec2 normals[] = {{1, 0}, {1, 1}, {2, 3}, {3, 2}, {1, 4}, {5, 2}};
  for (int t = 0; t < 30; ++t) {
    const BiPoly a = random_poly(rng, 4, 4, false), b = random_poly(rng, 4, 4, false);
    const NewtonMap m = make_newton_map(normals[t % 6].first, normals[t % 6].second,
                                        t % 2 ? Fe(mpq_class(-2, 3)) : Fe::generator(K));
    o.require(substitute_newton(a * b, m) == substitute_newton(a, m) * substitute_newton(b, m) &&
                  substitute_newton(a + b, m) == substitute_newton(a, m) + substitute_newton(b, m),
              "Newton map is not a ring morphism");
  }
  // factorizations multiply back
  std::uniform_int_distribution<long> cf(-4, 4);
  for (int t = 0; t < 30; ++t) {
    Poly f(Fe(1));
    for (int i = 0; i < 1 + t % 3; ++i) {
      std::vector<Fe> c(2 + (t + i) % 3);
      for (auto& x : c) x = Fe(cf(rng));
      c.back() = Fe(1);
      f = f * Poly(c);
    }
    Poly back(Fe(1));
    for (const auto& [p, k] : factor_rational(f)) back = back * p.pow(k);
    o.require(back.monic() == f.monic(), "factorization of " + f.str());
  }
  // intersection multiplicity axioms
  for (int t = 0; t < 40; ++t) {
    const BiPoly F = random_poly(rng, 3, 5, true), G = random_poly(rng, 3, 5, true),
                 H = random_poly(rng, 3, 5, true), A = random_poly(rng, 2, 4, false);
    if (F.is_zero() || G.is_zero() || H.is_zero()) continue;
    const long fg = intersection_multiplicity(F, G), fh = intersection_multiplicity(F, H);
    o.require(fg == intersection_multiplicity(G, F), "symmetry");
    const long fgh = intersection_multiplicity(F, G * H);
    o.require(fg == kInfinite || fh == kInfinite ? fgh == kInfinite : fgh == fg + fh, "additivity");
    o.require(intersection_multiplicity(F, G + A * F) == fg, "invariance under G -> G + AF");
  }
  // finitely many values with a nonzero motive
  int pencils = 0, tried = 0;
  size_t largest = 0;
  while (pencils < 20 && tried < 500) {
    ++tried;
    const BiPoly P = random_poly(rng, 5, 5, true), Q = random_poly(rng, 5, 5, true);
    if (P.is_zero() || Q.is_zero()) continue;
    if ((P.deg_y() == 0 && Q.deg_y() == 0) || (P.deg_x() == 0 && Q.deg_x() == 0)) continue;
    const BiPoly g = gcd(P, Q);
    if (g.deg_x() + g.deg_y() > 0) continue;
    const ComparisonReport r = compare_sets(P, Q, Fe(), Fe(), 3, 1000 + tried);
    if (!r.hypotheses_verified) continue;
    o.require(r.agreement, "bifurcation sets disagree for P = " + P.str() + ", Q = " + Q.str());
    largest = std::max(largest, r.newton.values.size());
    ++pencils;
  }
  o.require(pencils == 20, "only " + std::to_string(pencils) + " admissible pencils");
  if (o.pass)
    o.detail << "1000 support functions, 30 ring morphisms, 30 factorizations, intersection axioms; "
             << pencils << " random pencils with finite atypical sets (largest " << largest
             << "), zero motive at every probe outside";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"bifurcation set of the pencil example", criterion1},
      {"Euler realizations of the pencil example", criterion2},
      {"oracle Milnor numbers and chi via mu", criterion3},
      {"base-case tables against the eps predicates", criterion4},
      {"cone lemma limits and closed forms", criterion5},
      {"compensation identity", criterion6},
      {"property suite", criterion7},
  };
  int failed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "exception: " << e.what();
    }
    failed += !o.pass;
    std::printf("criterion %zu: %s  %s: %s\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first,
                o.detail.str().c_str());
  }
  return failed ? 1 : 0;
}
