#include "nmf/oracle.hpp"

#include <algorithm>
#include <random>

namespace nmf {
namespace {

int ord(const Poly& p) {
  for (int i = 0; i <= p.deg(); ++i)
    if (!p.c[i].is_zero()) return i;
  return -1;
}

long add(long a, long b) { return a == kInfinite || b == kInfinite ? kInfinite : a + b; }

// Fulton's algorithm at the origin.
long imult0(BiPoly F, BiPoly G) {
  for (;;) {
    if ((!F.is_zero() && !F.constant().is_zero()) || (!G.is_zero() && !G.constant().is_zero()))
      return 0;
    if (F.is_zero() || G.is_zero()) return kInfinite;
    Poly f0 = F.coeff_y(0), g0 = G.coeff_y(0);
    if (f0.deg() < 0 || g0.deg() < 0) {
      if (f0.deg() >= 0) {
        std::swap(F, G);
        std::swap(f0, g0);
      }
      // y divides F: I(F, G) = I(y, G) + I(F / y, G)
      const int a = ord(g0);
      if (a < 0) return kInfinite;
      return add(a, imult0(F.shifted(0, -1), G));
    }
    if (f0.deg() > g0.deg()) {
      std::swap(F, G);
      std::swap(f0, g0);
    }
    G -= F.shifted(g0.deg() - f0.deg(), 0).scaled(g0.lc() / f0.lc());
  }
}

long chi_rec(const BiPoly& F, int depth, int budget) {
  if (depth > budget) throw OracleError("Newton recursion did not terminate: non-isolated singularity");
  if (F.is_zero()) throw OracleError("zero polynomial");
  if (!F.constant().is_zero()) throw OracleError("polynomial does not vanish at the origin");
  const NewtonDiagram d = NewtonDiagram::of(F);
  if (d.is_point()) {
    const auto [M, m] = d.vertices[0];
    return (m == 0 ? M : 0) + (M == 0 ? m : 0);
  }
  if (auto sp = smooth_power(F); sp && sp->m >= 1)
    return sp->M == 0 ? sp->m : 0;
  const TowerPtr K = F.tower();
  long chi = 0;
  if (d.horizontal().second == 0) chi += d.horizontal().first;
  if (d.vertical().first == 0) chi += d.vertical().second;
  for (const auto& s : d.segments()) {
    const FacePolynomial fp = face_polynomial(F, s, K);
    for (const auto& o : fp.orbits) {
      chi -= static_cast<long>(o.size()) * s.level;
      const RootRep rr = root_of(o.factor, K);
      const NewtonMap m = make_newton_map(s.p, s.q, rr.mu);
      chi += o.size() * chi_rec(substitute_newton(F, m), depth + 1, budget);
    }
  }
  return chi;
}

int default_budget(const BiPoly& F) { return 4 * std::max(1, F.total_degree()) + 8; }

}  // namespace

long intersection_multiplicity(const BiPoly& F, const BiPoly& G, const Fe& x0, const Fe& y0) {
  const BiPoly f = F.translate(x0, y0), g = G.translate(x0, y0);
  // the reduction below only terminates for coprime pairs
  if (f.is_zero() || g.is_zero()) return kInfinite;
  if (gcd(f, g).constant().is_zero()) return kInfinite;
  return imult0(f, g);
}

long milnor_number(const BiPoly& F, const Fe& x0, const Fe& y0) {
  return intersection_multiplicity(F.dx(), F.dy(), x0, y0);
}

std::vector<Fe> random_probes(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-999, 999), den(1, 97);
  std::vector<Fe> out;
  while (static_cast<int>(out.size()) < n) {
    const long a = num(rng);
    if (a == 0) continue;
    Fe c(mpq_class(a, den(rng)));
    if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
  }
  return out;
}

long generic_mu(const BiPoly& P, const BiPoly& Q, const Fe& x0, const Fe& y0,
                const std::vector<Fe>& probes, std::vector<long>* mus) {
  if (probes.empty()) throw std::invalid_argument("no probe values");
  std::vector<long> vals;
  for (const auto& c : probes) {
    const long mu = milnor_number(P - Q.scaled(c), x0, y0);
    if (mu == kInfinite) throw OracleError("non-isolated critical point at probe " + c.str());
    vals.push_back(mu);
  }
  if (mus) *mus = vals;
  if (std::adjacent_find(vals.begin(), vals.end(), std::not_equal_to<>()) != vals.end())
    throw OracleError("Milnor number not constant over the probe values");
  return vals.front();
}

ChiViaMu chi_via_mu(const BiPoly& P, const BiPoly& Q, const Fe& x0, const Fe& y0, const Value& v,
                    int probes, std::uint64_t seed) {
  ChiViaMu r;
  r.probes = random_probes(probes, seed);
  r.mu_generic = generic_mu(P, Q, x0, y0, r.probes, &r.probe_mus);
  switch (v.kind) {
    case Value::Kind::Finite:
      r.mu_value = milnor_number(P - Q.scaled(v.c), x0, y0);
      break;
    case Value::Kind::Infinity:
      r.mu_value = milnor_number(Q, x0, y0);
      break;
    case Value::Kind::Generic:
      r.mu_value = milnor_number(P - Q.scaled(random_probes(1, seed + 1).front()), x0, y0);
      break;
  }
  if (r.mu_value == kInfinite) throw OracleError("non-isolated critical point at " + v.str());
  r.chi = r.mu_generic - r.mu_value;
  return r;
}

long milnor_fiber_chi(const BiPoly& F, int budget) {
  return chi_rec(F, 0, budget > 0 ? budget : default_budget(F));
}

NewtonMu mu_via_newton(const BiPoly& F0) {
  const BiPoly F = F0 - BiPoly(F0.constant());
  if (F.is_zero() || gcd(gcd(F, F.dx()), F.dy()).constant().is_zero())
    throw OracleError("singular point is not isolated");
  NewtonMu r;
  const long chi = milnor_fiber_chi(F);
  const NewtonDiagram d = NewtonDiagram::of(F);
  if (d.horizontal().second == 0) r.axis_h = d.horizontal().first;
  if (d.vertical().first == 0) r.axis_v = d.vertical().second;
  for (const auto& s : d.segments()) {
    const FacePolynomial fp = face_polynomial(F, s, F.tower());
    for (const auto& o : fp.orbits) r.twice_area += static_cast<long>(o.size()) * s.level;
  }
  r.children = chi - r.axis_h - r.axis_v + r.twice_area;
  r.mu = 1 - chi;
  return r;
}

}  // namespace nmf
