#include "nmf/factor.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace nmf {
namespace {

// Dense polynomials over Z/p with a big prime p.
struct Fp {
  mpz_class p;
  using V = std::vector<mpz_class>;

  void trim(V& a) const {
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  mpz_class red(const mpz_class& x) const {
    mpz_class r = x % p;
    if (r < 0) r += p;
    return r;
  }
  mpz_class inv(const mpz_class& x) const {
    mpz_class r;
    if (mpz_invert(r.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t()) == 0)
      throw std::logic_error("Fp: non-invertible element");
    return r;
  }
  V sub(V a, const V& b) const {
    if (a.size() < b.size()) a.resize(b.size());
    for (size_t i = 0; i < b.size(); ++i) a[i] = red(a[i] - b[i]);
    trim(a);
    return a;
  }
  V mul(const V& a, const V& b) const {
    if (a.empty() || b.empty()) return {};
    V r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i)
      for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    for (auto& x : r) x = red(x);
    trim(r);
    return r;
  }
  std::pair<V, V> divmod(V a, const V& b) const {
    const int db = static_cast<int>(b.size()) - 1;
    if (static_cast<int>(a.size()) - 1 < db) return {V{}, a};
    mpz_class li = inv(b.back());
    V q(a.size() - db);
    for (int i = static_cast<int>(a.size()) - 1; i >= db; --i) {
      if (a[i] == 0) continue;
      mpz_class k = red(a[i] * li);
      q[i - db] = k;
      for (int j = 0; j <= db; ++j) a[i - db + j] = red(a[i - db + j] - k * b[j]);
    }
    trim(a);
    trim(q);
    return {q, a};
  }
  V rem(const V& a, const V& b) const { return divmod(a, b).second; }
  V monic(V a) const {
    if (a.empty()) return a;
    mpz_class li = inv(a.back());
    for (auto& x : a) x = red(x * li);
    return a;
  }
  V gcd(V a, V b) const {
    while (!b.empty()) {
      V r = rem(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    return monic(a);
  }
  V powmod(V base, mpz_class e, const V& m) const {
    V r{mpz_class(1)};
    base = rem(base, m);
    while (e > 0) {
      if (mpz_odd_p(e.get_mpz_t())) r = rem(mul(r, base), m);
      e >>= 1;
      if (e > 0) base = rem(mul(base, base), m);
    }
    return r;
  }
  V deriv(const V& a) const {
    V r;
    for (size_t i = 1; i < a.size(); ++i) r.push_back(red(a[i] * static_cast<unsigned long>(i)));
    trim(r);
    return r;
  }
};

std::vector<mpz_class> to_integer_primitive(const Poly& f) {
  mpz_class l = 1;
  for (const auto& x : f.c) {
    mpq_class q = x.rational();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  }
  std::vector<mpz_class> v;
  mpz_class g = 0;
  for (const auto& x : f.c) {
    mpq_class q = x.rational() * l;
    v.push_back(q.get_num());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), q.get_num_mpz_t());
  }
  if (v.back() < 0) g = -g;
  for (auto& x : v) x /= g;
  return v;
}

Poly from_integers(const std::vector<mpz_class>& v) {
  std::vector<Fe> c;
  for (const auto& x : v) c.emplace_back(mpq_class(x));
  return Poly(std::move(c));
}

void equal_degree(const Fp& F, const Fp::V& g, int d, gmp_randclass& rng,
                  std::vector<Fp::V>& out) {
  const int n = static_cast<int>(g.size()) - 1;
  if (n == d) {
    out.push_back(g);
    return;
  }
  mpz_class e;
  mpz_pow_ui(e.get_mpz_t(), F.p.get_mpz_t(), d);
  e = (e - 1) / 2;
  for (;;) {
    Fp::V a(n);
    for (auto& x : a) x = rng.get_z_range(F.p);
    F.trim(a);
    if (a.size() < 2) continue;
    Fp::V b = F.sub(F.powmod(a, e, g), Fp::V{mpz_class(1)});
    Fp::V h = F.gcd(b, g);
    if (h.size() > 1 && h.size() < g.size()) {
      equal_degree(F, h, d, rng, out);
      equal_degree(F, F.divmod(g, h).first, d, rng, out);
      return;
    }
  }
}

std::vector<Fp::V> factor_mod_p(const Fp& F, Fp::V f) {
  std::vector<Fp::V> out;
  gmp_randclass rng(gmp_randinit_default);
  rng.seed(20240601UL);
  Fp::V x{mpz_class(0), mpz_class(1)};
  Fp::V h = x;
  for (int i = 1; 2 * i <= static_cast<int>(f.size()) - 1; ++i) {
    h = F.powmod(h, F.p, f);
    Fp::V g = F.gcd(F.sub(h, x), f);
    if (g.size() > 1) {
      equal_degree(F, g, i, rng, out);
      f = F.divmod(f, g).first;
      h = F.rem(h, f);
    }
  }
  if (f.size() > 1) out.push_back(F.monic(f));
  return out;
}

// f: primitive integer polynomial, squarefree, deg >= 1.
std::vector<Poly> zassenhaus(std::vector<mpz_class> f) {
  const int n = static_cast<int>(f.size()) - 1;
  if (n == 1) return {from_integers(f).monic()};
  mpz_class norm2 = 0;
  for (const auto& x : f) norm2 += x * x;
  mpz_class nrm = sqrt(norm2) + 1;
  mpz_class lc = abs(f.back());
  mpz_class bound = 2 * lc * nrm;
  bound <<= n;
  Fp F;
  mpz_nextprime(F.p.get_mpz_t(), bound.get_mpz_t());
  for (;;) {
    Fp::V fp;
    for (const auto& x : f) fp.push_back(F.red(x));
    F.trim(fp);
    if (static_cast<int>(fp.size()) - 1 == n && F.gcd(fp, F.deriv(fp)).size() == 1) break;
    mpz_nextprime(F.p.get_mpz_t(), F.p.get_mpz_t());
  }
  Fp::V fp;
  for (const auto& x : f) fp.push_back(F.red(x));
  std::vector<Fp::V> mods = factor_mod_p(F, F.monic(fp));
  if (mods.size() == 1) return {from_integers(f).monic()};

  std::vector<Poly> found;
  Poly rest = from_integers(f);
  auto symmetric = [&](const Fp::V& v) {
    std::vector<mpz_class> s;
    mpz_class half = F.p / 2;
    for (auto x : v) {
      if (x > half) x -= F.p;
      s.push_back(x);
    }
    return s;
  };
  for (int s = 1; 2 * s <= static_cast<int>(mods.size());) {
    bool hit = false;
    std::vector<int> idx(s);
    std::function<bool(int, int)> rec = [&](int pos, int start) -> bool {
      if (pos == s) {
        std::vector<mpz_class> ri = to_integer_primitive(rest);
        Fp::V g{F.red(ri.back())};
        for (int i : idx) g = F.mul(g, mods[i]);
        Poly cand = from_integers(symmetric(g));
        if (cand.deg() < 1) return false;
        cand = from_integers(to_integer_primitive(cand));
        auto [q, r] = divmod(rest, cand);
        if (!r.is_zero()) return false;
        found.push_back(cand.monic());
        rest = q;
        std::vector<Fp::V> keep;
        for (int i = 0; i < static_cast<int>(mods.size()); ++i)
          if (std::find(idx.begin(), idx.end(), i) == idx.end()) keep.push_back(mods[i]);
        mods = std::move(keep);
        return true;
      }
      for (int i = start; i < static_cast<int>(mods.size()); ++i) {
        idx[pos] = i;
        if (rec(pos + 1, i + 1)) return true;
      }
      return false;
    };
    hit = rec(0, 0);
    if (!hit) ++s;
  }
  if (rest.deg() >= 1) found.push_back(rest.monic());
  return found;
}

std::vector<Poly> trager(const Poly& g, const TowerPtr& K) {
  if (g.deg() <= 1) return {g.monic()};
  const Fe alpha = Fe::generator(K);
  const int total = g.deg() * K->degree();
  for (long s = 0;; s = s > 0 ? -s : 1 - s) {
    Poly h = g.shift(-(Fe(s) * alpha));
    std::vector<Fe> xs, ys;
    for (int j = 0; j <= total; ++j) {
      Fe z(static_cast<long>(j));
      xs.push_back(z);
      ys.push_back(h(z).lift(K).norm_to_parent());
    }
    Poly N = interpolate(xs, ys);
    if (gcd(N, N.derivative()).deg() > 0) continue;
    Factorization fs = factor_over(N, K->parent());
    if (fs.size() == 1) return {g.monic()};
    std::vector<Poly> out;
    for (const auto& [phi, e] : fs) {
      Poly u = gcd(h, phi.lift(K));
      if (u.deg() > 0) out.push_back(u.shift(Fe(s) * alpha).monic());
    }
    return out;
  }
}

}  // namespace

bool poly_less(const Poly& a, const Poly& b) {
  if (a.deg() != b.deg()) return a.deg() < b.deg();
  for (int i = 0; i <= a.deg(); ++i) {
    const Fe &x = a.c[i], &y = b.c[i];
    if (x == y) continue;
    if (x.is_rational() && y.is_rational()) return x.rational() < y.rational();
    return x.str() < y.str();
  }
  return false;
}

Factorization factor_rational(const Poly& f) {
  Factorization out;
  if (!f.is_rational()) throw std::logic_error("factor_rational: non-rational input");
  Poly g;
  for (const auto& x : f.c) g.c.push_back(x.simplify());
  for (const auto& [part, e] : squarefree(g)) {
    for (auto& p : zassenhaus(to_integer_primitive(part))) out.emplace_back(p, e);
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return poly_less(a.first, b.first); });
  return out;
}

Factorization factor_over(const Poly& f, const TowerPtr& K) {
  if (!K) return factor_rational(f);
  Factorization out;
  for (const auto& [part, e] : squarefree(f.lift(K))) {
    for (auto& p : trager(part, K)) out.emplace_back(p, e);
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return poly_less(a.first, b.first); });
  return out;
}

std::vector<Poly> irreducible_factors(const Poly& f, const TowerPtr& K) {
  std::vector<Poly> out;
  for (auto& [p, e] : factor_over(f, K)) out.push_back(p);
  return out;
}

}  // namespace nmf
