#include "nmf/motive.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "json.hpp"
#include "nmf/transform.hpp"

namespace nmf {
namespace {

Poly canonical_factor(const Poly& f) {
  Poly m = f.monic();
  for (auto& c : m.c) c = c.simplify();
  return Poly(m.c);
}

std::string factor_key(const Poly& f) {
  std::string s = f.str("z");
  if (TowerPtr t = f.tower()) s += " over " + t->describe();
  return s;
}

int total_degree(const Factorization& f) {
  int s = 0;
  for (const auto& [g, e] : f) s += e * g.deg();
  return s;
}

std::string power(const std::string& v, int e) {
  if (e == 1) return v;
  return v + "^" + std::to_string(e);
}

}  // namespace

MotiveClass MotiveClass::torus1(int n) {
  if (n == 0) throw std::invalid_argument("[x^0] is not a map to Gm with finite fibres");
  MotiveClass c;
  c.kind = Kind::Torus1;
  c.n = std::abs(n);
  return c;
}

MotiveClass MotiveClass::torus2(int a, int b) {
  if (a == 0 && b == 0) throw std::invalid_argument("constant monomial on Gm^2");
  MotiveClass c;
  c.kind = Kind::Torus2;
  c.a = a;
  c.b = b;
  return c;
}

MotiveClass MotiveClass::qhf(int p, int q, Exp pre_a, const Factorization& fa, Exp pre_b,
                             const Factorization& fb, std::string label) {
  const NewtonMap m = make_newton_map(p, q, Fe(1));
  const int la = total_degree(fa), lb = total_degree(fb);
  const long na = static_cast<long>(p) * pre_a.first + static_cast<long>(q) * pre_a.second +
                  static_cast<long>(p) * q * la;
  const long nb = static_cast<long>(p) * pre_b.first + static_cast<long>(q) * pre_b.second +
                  static_cast<long>(p) * q * lb;
  const long d = na - nb;
  if (d == 0) throw std::invalid_argument("fraction of weighted degree 0 on the ray");
  long k = static_cast<long>(m.qq) * (pre_a.first - pre_b.first) +
           static_cast<long>(m.pp) * (pre_a.second - pre_b.second) +
           static_cast<long>(q) * m.qq * (la - lb);
  MotiveClass c;
  c.kind = Kind::Qhf;
  c.d = static_cast<int>(std::abs(d));
  c.k = static_cast<int>(((k % c.d) + c.d) % c.d);
  c.p = p;
  c.q = q;
  c.label = std::move(label);
  std::map<std::string, QhfFactor> merged;
  auto add = [&](const Factorization& f, int sign) {
    for (const auto& [g, e] : f) {
      if (g.deg() < 1) continue;
      Poly h = canonical_factor(g);
      auto [it, fresh] = merged.try_emplace(factor_key(h), QhfFactor{h, 0});
      it->second.exponent += sign * e;
    }
  };
  add(fa, 1);
  add(fb, -1);
  for (auto& [key, f] : merged) c.factors.push_back(std::move(f));
  return c;
}

int MotiveClass::removed_roots() const {
  int r = 0;
  for (const auto& f : factors) r += f.factor.deg();
  return r;
}

std::string MotiveClass::key() const {
  switch (kind) {
    case Kind::Torus1:
      return "T1|" + std::to_string(n);
    case Kind::Torus2:
      return "T2|" + std::to_string(a) + "|" + std::to_string(b);
    case Kind::Qhf: {
      std::string s = "Q|" + std::to_string(d) + "|" + std::to_string(k);
      for (const auto& f : factors) s += "|" + factor_key(f.factor) + "^" + std::to_string(f.exponent);
      return s;
    }
  }
  return {};
}

std::string MotiveClass::str() const {
  switch (kind) {
    case Kind::Torus1:
      return "[" + power("x", n) + ": Gm->Gm, sigma_Gm]";
    case Kind::Torus2:
      return "[x^" + std::to_string(a) + "*y^" + std::to_string(b) + ": Gm^2->Gm, sigma_Gm2]";
    case Kind::Qhf: {
      if (!label.empty()) return label;
      std::string fn = power("t", d);
      if (k != 0) fn += "*" + power("z", k);
      std::string removed;
      for (const auto& f : factors) {
        if (f.exponent != 0) fn += "*(" + f.factor.str("z") + ")^" + std::to_string(f.exponent);
        removed += (removed.empty() ? "" : ", ") + f.factor.str("z") + "=0";
      }
      return "[" + fn + ": Gm x (Gm \\ {" + removed + "}) -> Gm, sigma_C]";
    }
  }
  return {};
}

Motive normalize(const MotiveClass& raw) {
  using K = MotiveClass::Kind;
  Motive m;
  const Laurent l_minus_1 = Laurent::L(1) - 1;
  switch (raw.kind) {
    case K::Torus1:
      m.add_normalized(MotiveClass::torus1(raw.n), Laurent(1));
      return m;
    case K::Torus2:
      // toric change: x^a y^b -> x'^g, the second coordinate splits off as Gm
      m.add_normalized(MotiveClass::torus1(std::gcd(std::abs(raw.a), std::abs(raw.b))),
                       l_minus_1);
      return m;
    case K::Qhf:
      break;
  }
  if (raw.factors.empty()) return normalize(MotiveClass::torus2(raw.d, raw.k));
  bool all_cancel = true;
  for (const auto& f : raw.factors) all_cancel &= f.exponent == 0;
  if (raw.k == 0 && all_cancel) {
    // t^d on Gm times the punctured line
    m.add_normalized(MotiveClass::torus1(raw.d), l_minus_1 - raw.removed_roots());
    return m;
  }
  if (raw.k == 0 && raw.factors.size() == 1 && raw.factors[0].factor.deg() == 1 &&
      std::abs(raw.factors[0].exponent) == 1) {
    // t^d (z - mu)^{+-1} on Gm x (Gm \ {mu}): full torus minus the fibre z = 0
    m.add_normalized(MotiveClass::torus1(1), l_minus_1);
    m.add_normalized(MotiveClass::torus1(raw.d), Laurent(-1));
    return m;
  }
  m.add_normalized(raw, Laurent(1));
  return m;
}

long euler_of_class(const MotiveClass& cls) {
  switch (cls.kind) {
    case MotiveClass::Kind::Torus1:
      return cls.n;
    case MotiveClass::Kind::Torus2:
      return 0;
    case MotiveClass::Kind::Qhf:
      return -static_cast<long>(cls.removed_roots()) * cls.d;
  }
  return 0;
}

Motive Motive::of(const MotiveClass& cls, const Laurent& coef) { return coef * normalize(cls); }

void Motive::add_normalized(const MotiveClass& cls, const Laurent& coef) {
  if (coef.is_zero()) return;
  const std::string key = cls.key();
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, Term{cls, coef});
    return;
  }
  it->second.coef += coef;
  if (it->second.coef.is_zero()) terms_.erase(it);
}

long Motive::euler_realization() const {
  long s = 0;
  for (const auto& [key, t] : terms_) s += t.coef.eval_at_one() * euler_of_class(t.cls);
  return s;
}

Motive Motive::operator-() const { return Laurent(-1) * *this; }

Motive& Motive::operator+=(const Motive& o) {
  for (const auto& [key, t] : o.terms_) add_normalized(t.cls, t.coef);
  return *this;
}

Motive& Motive::operator-=(const Motive& o) { return *this += -o; }

Motive operator*(const Laurent& s, const Motive& m) {
  Motive r;
  for (const auto& [key, t] : m.terms_) r.add_normalized(t.cls, s * t.coef);
  return r;
}

bool Motive::operator==(const Motive& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (const auto& [key, t] : terms_) {
    auto it = o.terms_.find(key);
    if (it == o.terms_.end() || it->second.coef != t.coef) return false;
  }
  return true;
}

std::string Motive::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [key, t] : terms_) {
    const std::string c = t.coef.str();
    std::string part;
    if (t.coef == Laurent(1))
      part = t.cls.str();
    else if (t.coef == Laurent(-1))
      part = "-" + t.cls.str();
    else if (t.coef.is_monomial() && t.coef.min_exp() == 0)
      part = c + "*" + t.cls.str();
    else
      part = "(" + c + ")*" + t.cls.str();
    if (s.empty())
      s = part;
    else if (part[0] == '-')
      s += " - " + part.substr(1);
    else
      s += " + " + part;
  }
  return s;
}

std::string Motive::json() const {
  using nlohmann::json;
  json arr = json::array();
  for (const auto& [key, t] : terms_) {
    json cls;
    switch (t.cls.kind) {
      case MotiveClass::Kind::Torus1:
        cls = {{"kind", "torus1"}, {"n", t.cls.n}};
        break;
      case MotiveClass::Kind::Torus2:
        cls = {{"kind", "torus2"}, {"a", t.cls.a}, {"b", t.cls.b}};
        break;
      case MotiveClass::Kind::Qhf: {
        json fs = json::array();
        for (const auto& f : t.cls.factors)
          fs.push_back({{"factor", f.factor.str("z")}, {"exponent", f.exponent}});
        cls = {{"kind", "qhf"}, {"d", t.cls.d}, {"k", t.cls.k}, {"ray", {t.cls.p, t.cls.q}},
               {"factors", fs}};
        break;
      }
    }
    cls["text"] = t.cls.str();
    json coef = json::array();
    for (const auto& [e, k] : t.coef.c) coef.push_back({e, k});
    arr.push_back({{"class", cls}, {"coefficient", {{"text", t.coef.str()}, {"terms", coef}}}});
  }
  return json{{"terms", arr}, {"text", str()}, {"euler", euler_realization()}}.dump();
}

}  // namespace nmf
