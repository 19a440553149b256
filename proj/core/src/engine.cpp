#include "nmf/engine.hpp"

#include <map>

#include "json.hpp"

namespace nmf {
namespace {

const Laurent kOne(1);

Factorization as_factorization(const FacePolynomial& fp) {
  Factorization f;
  for (const auto& o : fp.orbits) f.emplace_back(o.factor, o.nu);
  return f;
}

std::string fraction_label(const FacePolynomial& a, const FacePolynomial& b, int p, int q) {
  return "[(" + a.restriction.str() + ")/(" + b.restriction.str() +
         "): Gm^2 \\ {zeros} -> Gm, sigma_(" + std::to_string(p) + "," + std::to_string(q) + ")]";
}

std::string face_str(const Face& f) { return f.str(); }

class Runner {
 public:
  explicit Runner(int budget) : budget_(budget) {}

  RecursionNode run(const BiPoly& A, const BiPoly& B, int depth, const std::string& trace) {
    if (depth > budget_)
      throw EngineError("recursion budget of " + std::to_string(budget_) + " steps exhausted",
                        trace);
    if (A.is_zero() || B.is_zero()) throw EngineError("degenerate pair: a member vanishes", trace);
    if (!A.constant().is_zero() || !B.constant().is_zero())
      throw EngineError("pair does not vanish at the origin", trace);
    RecursionNode n;
    n.A = A;
    n.B = B;
    if (auto s = detect_base_case(A, B)) {
      n.base = s;
      n.motive = base_case_motive(*s);
      return n;
    }
    const TowerPtr K = join(A.tower(), B.tower());
    const NewtonDiagram da = NewtonDiagram::of(A), db = NewtonDiagram::of(B);
    for (const auto& fc : fan_ec(da, db)) {
      ConeRecord r{fc.cone, fc.face_a, fc.face_b, 0, Motive()};
      if (fc.cone.dim == 2) {
        const Eps2 e = eps_dim2(fc.face_a.lo, fc.face_b.lo, fc.cone.w1, fc.cone.w2);
        r.eps = e.eps;
        if (e.eps != 0) {
          if (e.shape == EpsShape::Interior)
            r.emitted = -Motive::of(MotiveClass::torus2(e.diff.first, e.diff.second));
          else
            r.emitted = Motive::of(MotiveClass::torus1(e.exponent));
        }
        n.motive += r.emitted;
        n.cones.push_back(std::move(r));
        continue;
      }
      const int p = fc.cone.w1.first, q = fc.cone.w1.second;
      const FacePolynomial fa = face_polynomial(A, fc.face_a, K);
      const FacePolynomial fb = face_polynomial(B, fc.face_b, K);
      r.eps = eps_dim1(fc.face_a.lo, fc.face_b.lo, fc.cone.w1);
      if (r.eps != 0) {
        MotiveClass cls = MotiveClass::qhf(p, q, fa.prefix, as_factorization(fa), fb.prefix,
                                           as_factorization(fb), fraction_label(fa, fb, p, q));
        r.emitted = Laurent(-r.eps) * Motive::of(cls);
      }
      n.motive += r.emitted;
      n.cones.push_back(std::move(r));
      // union of the root orbits of both face polynomials
      std::map<std::string, Poly> roots;
      for (const auto* fp : {&fa, &fb})
        for (const auto& o : fp->orbits) {
          Poly m = o.factor.monic();
          roots.emplace(m.str("z") + (m.tower() ? " @" + m.tower()->describe() : ""), m);
        }
      for (const auto& [key, phi] : roots) {
        const RootRep rr = root_of(phi, K);
        const NewtonMap s = make_newton_map(p, q, rr.mu);
        RecursionNode child = run(substitute_newton(A, s), substitute_newton(B, s), depth + 1,
                                  trace + " -> " + s.str());
        child.map = s.str();
        child.weight = phi.deg();
        n.motive += Laurent(child.weight) * child.motive;
        n.children.push_back(std::move(child));
      }
    }
    return n;
  }

 private:
  int budget_;
};

nlohmann::json node_json(const RecursionNode& n) {
  using nlohmann::json;
  json j;
  j["A"] = n.A.str();
  j["B"] = n.B.str();
  if (!n.map.empty()) j["map"] = n.map;
  j["weight"] = n.weight;
  if (n.base) j["base_case"] = n.base->str();
  json cones = json::array();
  for (const auto& c : n.cones) {
    json cj{{"cone", c.cone.str()},
            {"dim", c.cone.dim},
            {"face_a", face_str(c.face_a)},
            {"face_b", face_str(c.face_b)},
            {"eps", c.eps}};
    if (!c.emitted.is_zero()) cj["emitted"] = json::parse(c.emitted.json());
    cones.push_back(cj);
  }
  j["cones"] = cones;
  json kids = json::array();
  for (const auto& ch : n.children) kids.push_back(node_json(ch));
  j["children"] = kids;
  j["motive"] = json::parse(n.motive.json());
  return j;
}

}  // namespace

std::string Value::str() const {
  switch (kind) {
    case Kind::Finite:
      return c.str();
    case Kind::Generic:
      return "generic";
    case Kind::Infinity:
      return "infinity";
  }
  return {};
}

std::string RecursionNode::text(int indent) const {
  const std::string pad(indent, ' ');
  std::string s = pad + (map.empty() ? "root" : map);
  if (weight != 1) s += " x" + std::to_string(weight);
  s += ": A = " + A.str() + ", B = " + B.str() + "\n";
  if (base) s += pad + "  base case " + base->str() + "\n";
  for (const auto& c : cones) {
    s += pad + "  " + c.cone.str() + "  A:" + face_str(c.face_a) + " B:" + face_str(c.face_b) +
         "  eps=" + std::to_string(c.eps);
    if (!c.emitted.is_zero()) s += "  -> " + c.emitted.str();
    s += "\n";
  }
  for (const auto& ch : children) s += ch.text(indent + 2);
  s += pad + "  S = " + motive.str() + "\n";
  return s;
}

std::string RecursionNode::json() const { return node_json(*this).dump(); }

std::pair<BiPoly, BiPoly> translate_to_origin(const BiPoly& P, const BiPoly& Q, const Fe& x0,
                                              const Fe& y0) {
  if (!P.eval(x0, y0).is_zero() || !Q.eval(x0, y0).is_zero())
    throw std::invalid_argument("the point is not a common zero of P and Q");
  return {P.translate(x0, y0), Q.translate(x0, y0)};
}

std::pair<BiPoly, BiPoly> orient_value(const BiPoly& P, const BiPoly& Q, const Value& v) {
  switch (v.kind) {
    case Value::Kind::Infinity:
      return {Q, P};
    case Value::Kind::Finite:
      return {P - Q.scaled(v.c), Q};
    case Value::Kind::Generic:
      break;
  }
  throw std::invalid_argument("a generic value must be replaced by a probe first");
}

Fe generic_probe(const BiPoly& P, const BiPoly& Q, const std::vector<Fe>& avoid) {
  for (long i = 0;; ++i) {
    const Fe c(mpq_class(7919 + 104729 * i, 613 + 2 * i));
    bool bad = false;
    for (const auto& a : avoid) bad |= a == c;
    if (bad) continue;
    // no cancellation of monomials on the top level
    const BiPoly A = P - Q.scaled(c);
    for (const auto& [e, k] : Q.t) bad |= A.coeff(e.first, e.second).is_zero();
    if (!bad) return c;
  }
}

Motive base_case_motive(const BaseCaseShape& s) {
  if (s.coef_a.is_zero() || s.coef_b.is_zero())
    throw std::invalid_argument("base case with a vanishing corner coefficient");
  const int M1 = s.M1, m1 = s.m1, M2 = s.M2, m2 = s.m2;
  if (s.kind == BaseCaseShape::Kind::MonMon) {
    if ((M1 == 0 && m1 == 0) || (M2 == 0 && m2 == 0))
      throw std::invalid_argument("base case with a unit member");
    auto mixed = [&]() {
      if (M1 > M2 && m1 > m2) return -Motive::of(MotiveClass::torus2(M1 - M2, m1 - m2));
      return Motive();
    };
    if (M1 >= 1 && M2 >= 1) {
      if (M1 == M2) return Motive();
      if (m1 == 0 && m2 == 0) return M1 > M2 ? Motive::of(MotiveClass::torus1(M1 - M2)) : Motive();
      if (m1 == m2) return Motive();
      return mixed();
    }
    if (m1 >= 1 && m2 >= 1) {
      if (m1 == m2) return Motive();
      if (M1 == 0 && M2 == 0) return m1 > m2 ? Motive::of(MotiveClass::torus1(m1 - m2)) : Motive();
      if (M1 == M2) return Motive();
      return mixed();
    }
    return Motive();
  }
  if (M1 < 1 || M2 < 1 || (m1 == 0 && m2 == 0))
    throw std::invalid_argument("Dim1Dim1 shape out of range");
  const int d = (M1 - M2) + s.q * (m1 - m2);
  if (d <= 0) return Motive();
  Motive r = Motive::of(MotiveClass::torus1(d));
  const int dM = M1 - M2, dm = m1 - m2;
  if (dM > 0) r -= Motive::of(MotiveClass::torus2(dM, dm));
  const Poly branch({-s.mu, Fe(1)});
  Factorization fa, fb;
  if (m1 > 0) fa.emplace_back(branch, m1);
  if (m2 > 0) fb.emplace_back(branch, m2);
  r += Motive::of(MotiveClass::qhf(1, s.q, {M1, 0}, fa, {M2, 0}, fb));
  if (dm > 0) r -= Motive::of(MotiveClass::torus2(dM, dm));
  return r;
}

RecursionNode milnor_node(const BiPoly& A, const BiPoly& B, int budget) {
  return Runner(budget).run(A, B, 0, "root");
}

MilnorResult motivic_milnor_fiber(const MilnorQuery& q, const EngineOptions& opt) {
  if ((q.P.deg_y() == 0 && q.Q.deg_y() == 0) || (q.P.deg_x() == 0 && q.Q.deg_x() == 0))
    throw std::invalid_argument("P and Q both lie in k[x] or both in k[y]");
  auto [P, Q] = translate_to_origin(q.P, q.Q, q.x0, q.y0);
  MilnorResult res;
  Value v = q.value;
  if (v.kind == Value::Kind::Generic) v = Value::finite(generic_probe(P, Q, opt.avoid));
  res.c = v.c;
  auto [A, B] = orient_value(P, Q, v);
  const int budget = opt.budget > 0 ? opt.budget : std::max(1, 4 * (q.P * q.Q).total_degree());
  res.tree = milnor_node(A, B, budget);
  res.motive = res.tree.motive;
  return res;
}

}  // namespace nmf
