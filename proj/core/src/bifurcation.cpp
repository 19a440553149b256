#include "nmf/bifurcation.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "json.hpp"
#include "nmf/oracle.hpp"

namespace nmf {
namespace {

std::vector<mpq_class> flatten(const Fe& e, const TowerPtr& t) {
  if (!t) return {e.simplify().rational()};
  const Fe l = e.lift(t);
  std::vector<mpq_class> out;
  for (int i = 0; i < t->degree(); ++i) {
    const Fe ci = i < static_cast<int>(l.coords().size()) ? l.coords()[i] : Fe();
    auto sub = flatten(ci, t->parent());
    out.insert(out.end(), sub.begin(), sub.end());
  }
  return out;
}

// Solves sum_i x_i cols[i] = rhs; false if inconsistent.
bool solve(std::vector<std::vector<mpq_class>> cols, std::vector<mpq_class> rhs,
           std::vector<mpq_class>& x) {
  const int n = static_cast<int>(rhs.size()), k = static_cast<int>(cols.size());
  std::vector<std::vector<mpq_class>> m(n, std::vector<mpq_class>(k + 1));
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < k; ++c) m[r][c] = cols[c][r];
    m[r][k] = rhs[r];
  }
  std::vector<int> pivot_col;
  int row = 0;
  for (int c = 0; c < k && row < n; ++c) {
    int piv = -1;
    for (int r = row; r < n; ++r)
      if (sgn(m[r][c]) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[row], m[piv]);
    for (int r = 0; r < n; ++r) {
      if (r == row || sgn(m[r][c]) == 0) continue;
      const mpq_class f = m[r][c] / m[row][c];
      for (int j = c; j <= k; ++j) m[r][j] -= f * m[row][j];
    }
    pivot_col.push_back(c);
    ++row;
  }
  for (int r = row; r < n; ++r)
    if (sgn(m[r][k]) != 0) return false;
  x.assign(k, 0);
  for (int r = 0; r < row; ++r) x[pivot_col[r]] = m[r][k] / m[r][pivot_col[r]];
  return true;
}

std::string exp_str(const Exp& e) {
  return "(" + std::to_string(e.first) + "," + std::to_string(e.second) + ")";
}

bool on_axis(const Exp& e) { return e.first == 0 || e.second == 0; }

std::string sigma_prefix(const std::string& sigma, bool swapped) {
  return std::string(swapped ? "Q - cP" : "P - cQ") + " at " + sigma;
}

class Collector {
 public:
  Collector(int budget, bool swapped) : budget_(budget), swapped_(swapped) {}

  void run(const BiPoly& Pn, const BiPoly& Qn, const std::string& sigma, int depth) {
    if (depth > budget_)
      throw EngineError("Newton-map budget of " + std::to_string(budget_) + " exhausted", sigma);
    const TowerPtr K = join(Pn.tower(), Qn.tower());
    std::vector<Exp> pts;
    for (const auto& [e, c] : Pn.t) pts.push_back(e);
    for (const auto& [e, c] : Qn.t) pts.push_back(e);
    const NewtonDiagram d = NewtonDiagram::of_points(pts);
    const std::vector<Face> segs = d.segments();
    const BiPoly F = Pn - Qn.scaled(generic_probe(Pn, Qn, {}));

    for (size_t i = 0; i < d.vertices.size(); ++i) {
      const Exp w = d.vertices[i];
      const Fe alpha = Pn.coeff(w.first, w.second), beta = Qn.coeff(w.first, w.second);
      if (beta.is_zero()) continue;
      set_.dicritical.push_back({sigma, Face::vertex(w),
                                 "(" + alpha.str() + ") - c*(" + beta.str() + ")", swapped_});
      const Fe c0 = alpha / beta;
      const std::string where = sigma_prefix(sigma, swapped_) + ", vertex " + exp_str(w);
      if (!on_axis(w)) {
        add(c0, Reason::VertexCancellation, where + " cancelled");
        continue;
      }
      const Face* adj = nullptr;
      if (w.second == 0 && i + 1 == d.vertices.size() && !segs.empty()) adj = &segs.back();
      if (w.first == 0 && i == 0 && !segs.empty()) adj = &segs.front();
      if (!adj) {
        add(c0, Reason::AxisVertexBadFace, where + " cancelled, no adjacent segment");
        continue;
      }
      std::vector<SmoothWitness> ws;
      for (const auto& sw : smooth_witnesses(F, *adj))
        if (sw.w == w) ws.push_back(sw);
      if (ws.empty()) {
        add(c0, Reason::AxisVertexBadFace, where + " cancelled, adjacent face " + adj->str() + " not smooth");
        continue;
      }
      int cancelled = 0;
      for (const auto& sw : ws)
        cancelled += (Pn.coeff(sw.v.first, sw.v.second) - c0 * Qn.coeff(sw.v.first, sw.v.second)).is_zero();
      if (cancelled > 0 && cancelled < static_cast<int>(ws.size()))
        set_.notes.push_back(where + ": smoothness witnesses disagree at c = " + c0.str());
      if (cancelled == static_cast<int>(ws.size()))
        add(c0, Reason::AxisVertexBadFace,
            where + " cancelled together with the smooth witness " + exp_str(ws.front().v));
    }

    std::vector<std::pair<const Face*, Poly>> common;
    for (const auto& s : segs) {
      Poly A = face_zform(Pn, s), B = face_zform(Qn, s);
      if (K) {
        A = A.lift(K);
        B = B.lift(K);
      }
      if (B.is_zero()) {
        common.emplace_back(&s, A.monic());
        continue;
      }
      const Poly G = A.is_zero() ? B.monic() : gcd(A, B);
      common.emplace_back(&s, G);
      set_.dicritical.push_back({sigma, s, "(" + A.str("z") + ") - c*(" + B.str("z") + ")", swapped_});
      discriminant_candidates(s, A, B, G, K, sigma);
    }

    if (detect_base_case(F, Qn)) return;
    for (const auto& [s, G] : common) {
      if (G.deg() < 1) continue;
      for (const auto& phi : irreducible_factors(G, K)) {
        if (phi.deg() == 1 && phi.coeff(0).is_zero()) continue;
        const RootRep rr = root_of(phi, K);
        const NewtonMap m = make_newton_map(s->p, s->q, rr.mu);
        run(substitute_newton(Pn, m), substitute_newton(Qn, m), sigma + " -> " + m.str(), depth + 1);
      }
    }
  }

  BifurcationSet take() {
    for (auto& [k, v] : found_) set_.values.push_back(std::move(v));
    return std::move(set_);
  }

 private:
  void discriminant_candidates(const Face& s, const Poly& A, const Poly& B, const Poly& G,
                               const TowerPtr& K, const std::string& sigma) {
    const Poly D = G.deg() > 0 ? G / radical(G) : Poly(Fe(1));
    const Poly Ab = A.is_zero() ? A : A / D, Bb = B / D;
    const int n = s.lattice_length() - D.deg();
    if (n < 2) return;
    ParamPoly g(n + 1);
    for (int k = 0; k <= n; ++k) g[k] = Poly(std::vector<Fe>{Ab.coeff(k), -Bb.coeff(k)});
    const Poly disc = param_discriminant(g);
    if (disc.deg() < 1) return;
    for (const auto& psi : irreducible_factors(disc, K)) {
      const Fe c0 = root_of(psi, K).mu;
      if (g[0](c0).is_zero() || g[n](c0).is_zero()) continue;
      std::vector<Fe> coeffs;
      for (int k = 0; k <= n; ++k) coeffs.push_back(g[k](c0));
      const Poly f(coeffs);
      if (gcd(f, f.derivative()).deg() < 1) continue;
      add(c0, Reason::DiscriminantRoot,
          sigma_prefix(sigma, swapped_) + ", segment " + s.str() + ": reduced face polynomial " +
              "has a multiple root (discriminant " + disc.str("c") + ")");
    }
  }

  void add(const Fe& c0, Reason r, const std::string& why) {
    const Poly mp = minimal_polynomial(c0);
    auto [it, fresh] = found_.try_emplace(mp.str("c"));
    CandidateValue& cv = it->second;
    if (fresh) {
      cv.value = mp.deg() == 1 ? -mp.coeff(0) : c0;
      cv.minpoly = mp;
    }
    if (std::find(cv.reasons.begin(), cv.reasons.end(), r) == cv.reasons.end()) cv.reasons.push_back(r);
    cv.provenance.push_back(why);
  }

  int budget_;
  bool swapped_;
  BifurcationSet set_;
  std::map<std::string, CandidateValue> found_;
};

bool value_less(const CandidateValue& a, const CandidateValue& b) {
  auto rank = [](const CandidateValue& v) {
    return v.kind == CandidateValue::Kind::Infinity ? 2 : (v.is_rational() ? 0 : 1);
  };
  if (rank(a) != rank(b)) return rank(a) < rank(b);
  if (rank(a) == 0) return a.value.rational() < b.value.rational();
  return a.key() < b.key();
}

void check_pair(const BiPoly& P, const BiPoly& Q) {
  if (P.is_zero() || Q.is_zero()) throw std::invalid_argument("degenerate pair: a member vanishes");
  if ((P.deg_y() == 0 && Q.deg_y() == 0) || (P.deg_x() == 0 && Q.deg_x() == 0))
    throw std::invalid_argument("P and Q both lie in k[x] or both in k[y]");
}

int default_budget(const BiPoly& P, const BiPoly& Q, const BifurcationOptions& opt) {
  return opt.budget > 0 ? opt.budget : std::max(1, 4 * (P * Q).total_degree());
}

nlohmann::json reasons_json(const CandidateValue& v) {
  nlohmann::json r = nlohmann::json::array();
  for (auto x : v.reasons) r.push_back(reason_name(x));
  return r;
}

}  // namespace

std::string reason_name(Reason r) {
  switch (r) {
    case Reason::VertexCancellation:
      return "vertex-cancellation";
    case Reason::AxisVertexBadFace:
      return "axis-vertex-with-bad-adjacent-face";
    case Reason::DiscriminantRoot:
      return "discriminant-root";
  }
  return {};
}

Poly minimal_polynomial(const Fe& a0) {
  const Fe a = a0.simplify();
  if (a.is_rational()) return Poly(std::vector<Fe>{-a, Fe(1)});
  const TowerPtr t = a.tower();
  std::vector<std::vector<mpq_class>> cols{flatten(Fe(1), t)};
  Fe pw(1);
  for (long k = 1; k <= t->absolute_degree(); ++k) {
    pw *= a;
    auto v = flatten(pw, t);
    std::vector<mpq_class> x;
    for (auto& e : v) e = -e;
    if (solve(cols, v, x)) {
      std::vector<Fe> c;
      for (const auto& xi : x) c.emplace_back(xi);
      c.emplace_back(1);
      return Poly(c);
    }
    for (auto& e : v) e = -e;
    cols.push_back(v);
  }
  throw std::logic_error("minimal_polynomial: no relation found");
}

CandidateValue CandidateValue::infinity() {
  CandidateValue v;
  v.kind = Kind::Infinity;
  return v;
}

Value CandidateValue::as_value() const {
  return kind == Kind::Infinity ? Value::infinity() : Value::finite(value);
}

std::string CandidateValue::key() const { return kind == Kind::Infinity ? "inf" : minpoly.str("c"); }

std::string CandidateValue::str() const {
  if (kind == Kind::Infinity) return "inf";
  if (is_rational()) return value.simplify().str();
  return "root of " + minpoly.str("c");
}

bool BifurcationSet::contains(const Value& v) const {
  for (const auto& c : values) {
    if (v.kind == Value::Kind::Infinity && c.kind == CandidateValue::Kind::Infinity) return true;
    if (v.kind == Value::Kind::Finite && c.kind == CandidateValue::Kind::Finite &&
        c.minpoly(v.c).is_zero())
      return true;
  }
  return false;
}

std::string BifurcationSet::json() const {
  using nlohmann::json;
  json j;
  j["values"] = json::array();
  for (const auto& v : values)
    j["values"].push_back({{"value", v.str()}, {"reasons", reasons_json(v)}, {"provenance", v.provenance}});
  j["dicritical"] = json::array();
  for (const auto& d : dicritical)
    j["dicritical"].push_back({{"sigma", d.sigma},
                               {"face", d.face.str()},
                               {"witness", d.witness},
                               {"orientation", d.swapped ? "Q - cP" : "P - cQ"}});
  j["notes"] = notes;
  return j.dump();
}

std::string BifurcationSet::str() const {
  std::string s = "{";
  for (size_t i = 0; i < values.size(); ++i) s += (i ? ", " : "") + values[i].str();
  return s + "}";
}

BifurcationSet newton_candidates_oriented(const BiPoly& P, const BiPoly& Q, const Fe& x0,
                                          const Fe& y0, const BifurcationOptions& opt) {
  check_pair(P, Q);
  auto [A, B] = translate_to_origin(P, Q, x0, y0);
  Collector col(default_budget(P, Q, opt), false);
  col.run(A, B, "root", 0);
  BifurcationSet s = col.take();
  std::sort(s.values.begin(), s.values.end(), value_less);
  return s;
}

BifurcationSet newton_bifurcation_set(const BiPoly& P, const BiPoly& Q, const Fe& x0, const Fe& y0,
                                      const BifurcationOptions& opt) {
  check_pair(P, Q);
  auto [A, B] = translate_to_origin(P, Q, x0, y0);
  const int budget = default_budget(P, Q, opt);
  Collector direct(budget, false), swapped(budget, true);
  direct.run(A, B, "root", 0);
  swapped.run(B, A, "root", 0);
  BifurcationSet s = direct.take(), t = swapped.take();
  for (auto& v : t.values) {
    if (!(v.is_rational() && v.value.is_zero())) continue;
    CandidateValue inf = CandidateValue::infinity();
    inf.reasons = v.reasons;
    inf.provenance = v.provenance;
    s.values.push_back(std::move(inf));
  }
  s.dicritical.insert(s.dicritical.end(), t.dicritical.begin(), t.dicritical.end());
  s.notes.insert(s.notes.end(), t.notes.begin(), t.notes.end());
  std::sort(s.values.begin(), s.values.end(), value_less);
  return s;
}

std::vector<CandidateValue> MotivicSet::nonzero() const {
  std::vector<CandidateValue> out;
  for (const auto& v : verdicts)
    if (v.motive_nonzero) out.push_back(v.value);
  return out;
}

MotivicSet motivic_bifurcation_set(const BiPoly& P, const BiPoly& Q, const Fe& x0, const Fe& y0,
                                   const std::vector<Fe>& probes, const BifurcationSet* newton) {
  BifurcationSet own;
  if (!newton) {
    own = newton_bifurcation_set(P, Q, x0, y0);
    newton = &own;
  }
  MotivicSet out;
  out.probes = probes;
  auto eval = [&](const CandidateValue& cv, bool from_newton) {
    MotivicVerdict v;
    v.value = cv;
    v.from_newton = from_newton;
    const MilnorResult r = motivic_milnor_fiber(MilnorQuery{P, Q, x0, y0, cv.as_value()});
    v.motive_nonzero = !r.motive.is_zero();
    v.chi = r.motive.euler_realization();
    v.motive = r.motive.str();
    out.verdicts.push_back(std::move(v));
  };
  for (const auto& cv : newton->values) eval(cv, true);
  for (const auto& c : probes) {
    if (newton->contains(Value::finite(c))) continue;
    CandidateValue cv;
    cv.value = c;
    cv.minpoly = minimal_polynomial(c);
    eval(cv, false);
  }
  return out;
}

ComparisonReport compare_sets(const BiPoly& P, const BiPoly& Q, const Fe& x0, const Fe& y0,
                              int probes, std::uint64_t seed) {
  ComparisonReport rep;
  auto [A, B] = translate_to_origin(P, Q, x0, y0);
  if (gcd(A, B).constant().is_zero()) {
    rep.hypotheses_verified = false;
    rep.hypothesis_failures.push_back("P and Q have a common component through the point");
  }
  rep.newton = newton_bifurcation_set(P, Q, x0, y0);
  const std::vector<Fe> pr = random_probes(probes, seed);
  long mu_gen = kInfinite;
  try {
    mu_gen = generic_mu(P, Q, x0, y0, pr);
  } catch (const OracleError& e) {
    rep.hypotheses_verified = false;
    rep.hypothesis_failures.push_back(std::string("generic member: ") + e.what());
  }
  const MotivicSet mot = motivic_bifurcation_set(P, Q, x0, y0, pr, &rep.newton);
  bool all = true;
  for (const auto& v : mot.verdicts) {
    ComparisonRow row;
    row.value = v.value;
    row.from_newton = v.from_newton;
    row.motive_nonzero = v.motive_nonzero;
    row.chi = v.chi;
    row.mu_generic = mu_gen;
    const Value val = v.value.as_value();
    row.mu = val.kind == Value::Kind::Infinity ? milnor_number(Q, x0, y0)
                                               : milnor_number(P - Q.scaled(val.c), x0, y0);
    if (row.mu == kInfinite) {
      rep.hypotheses_verified = false;
      rep.hypothesis_failures.push_back("non-isolated critical point at c = " + v.value.str());
    }
    const bool mu_ok = row.mu != kInfinite && mu_gen != kInfinite && row.chi == mu_gen - row.mu;
    row.consistent = mu_ok && (row.motive_nonzero == v.from_newton);
    all = all && row.consistent;
    rep.rows.push_back(std::move(row));
  }
  rep.agreement = rep.hypotheses_verified && all;
  return rep;
}

std::string ComparisonReport::json() const {
  using nlohmann::json;
  json j;
  j["candidates"] = json::array();
  for (const auto& r : rows) {
    json c{{"value", r.value.str()},
           {"reasons", reasons_json(r.value)},
           {"source", r.from_newton ? "newton" : "probe"},
           {"motive_nonzero", r.motive_nonzero},
           {"chi", r.chi},
           {"mu", r.mu},
           {"mu_generic", r.mu_generic},
           {"consistent", r.consistent}};
    j["candidates"].push_back(c);
  }
  j["newton"] = json::parse(newton.json());
  j["hypotheses"] = {{"verified", hypotheses_verified}, {"failures", hypothesis_failures}};
  j["agreement"] = agreement;
  return j.dump();
}

std::string ComparisonReport::text() const {
  std::string s = "B^Newton = " + newton.str() + "\n";
  for (const auto& r : rows) {
    s += "  c = " + r.value.str() + (r.from_newton ? "" : " (probe)") + ": ";
    for (auto x : r.value.reasons) s += reason_name(x) + " ";
    s += "motive " + std::string(r.motive_nonzero ? "nonzero" : "zero") + ", chi = " +
         std::to_string(r.chi) + ", mu = " + std::to_string(r.mu) +
         ", mu_gen = " + std::to_string(r.mu_generic) + (r.consistent ? "" : "  MISMATCH") + "\n";
  }
  if (!hypotheses_verified) {
    s += "unverified hypotheses:\n";
    for (const auto& f : hypothesis_failures) s += "  " + f + "\n";
  }
  s += std::string("agreement: ") + (agreement ? "yes" : "no") + "\n";
  return s;
}

}  // namespace nmf
