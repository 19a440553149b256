#include "nmf/serialize.hpp"

#include "json.hpp"

namespace nmf {
namespace {

using nlohmann::json;

json exp_json(const Exp& e) { return json::array({e.first, e.second}); }

std::string smooth_name(Smoothness s) {
  switch (s) {
    case Smoothness::YSmooth:
      return "y-smooth";
    case Smoothness::XSmooth:
      return "x-smooth";
    case Smoothness::NotSmooth:
      break;
  }
  return "not smooth";
}

json face_json(const BiPoly& P, const Face& f) {
  json j{{"dim", f.dim}, {"text", f.str()}};
  if (f.dim == 0) {
    j["vertex"] = exp_json(f.lo);
    j["coefficient"] = P.coeff(f.lo.first, f.lo.second).str();
    return j;
  }
  const FacePolynomial fp = face_polynomial(P, f, P.tower());
  j["lo"] = exp_json(f.lo);
  j["hi"] = exp_json(f.hi);
  j["normal"] = json::array({f.p, f.q});
  j["level"] = f.level;
  j["face_polynomial"] = fp.restriction.str();
  j["zform"] = fp.zform.str("z");
  j["prefix"] = exp_json(fp.prefix);
  j["scalar"] = fp.scalar.str();
  json roots = json::array();
  for (const auto& o : fp.orbits) roots.push_back({{"factor", o.factor.str("z")}, {"multiplicity", o.nu}});
  j["roots"] = roots;
  j["smoothness"] = smooth_name(is_smooth_face(P, f));
  return j;
}

json diagram(const BiPoly& P) {
  if (P.is_zero()) throw std::invalid_argument("the zero polynomial has no Newton polygon");
  const NewtonDiagram d = NewtonDiagram::of(P);
  json j;
  j["polynomial"] = P.str();
  json vs = json::array();
  for (const auto& v : d.vertices) vs.push_back(exp_json(v));
  j["vertices"] = vs;
  j["height"] = d.height();
  json faces = json::array();
  for (const auto& f : d.faces()) faces.push_back(face_json(P, f));
  j["faces"] = faces;
  j["nondegenerate"] = is_nondegenerate(P);
  return j;
}

json fan(const BiPoly& A, const BiPoly& B) {
  const NewtonDiagram da = NewtonDiagram::of(A), db = NewtonDiagram::of(B);
  json cones = json::array();
  for (const auto& c : fan_ec(da, db)) {
    json cj{{"cone", c.cone.str()},
            {"dim", c.cone.dim},
            {"w1", exp_json(c.cone.w1)},
            {"face_a", c.face_a.str()},
            {"face_b", c.face_b.str()}};
    if (c.cone.dim == 2) cj["w2"] = exp_json(c.cone.w2);
    if (c.is_cv) cj["role"] = "C_v";
    if (c.is_ch) cj["role"] = "C_h";
    cones.push_back(cj);
  }
  return json{{"A", A.str()}, {"B", B.str()}, {"cones", cones}};
}

json transform_one(const BiPoly& P, const NewtonMap& m) {
  const TransformOutcome t = apply_transform(P, m);
  return json{{"map", m.str()},
              {"p", m.p},
              {"q", m.q},
              {"p_prime", m.pp},
              {"q_prime", m.qq},
              {"mu", m.mu.str()},
              {"power_of_x1", t.N},
              {"quotient", t.quotient.str()},
              {"kind", t.kind == TransformOutcome::Kind::Root ? "root" : "unit"},
              {"multiplicity", t.nu},
              {"height_before", t.height_before},
              {"height_after", t.height_after}};
}

json transforms(const BiPoly& P, const NewtonMap* map) {
  json arr = json::array();
  if (map) {
    arr.push_back(transform_one(P, *map));
  } else {
    for (const auto& tr : enumerate_triples(P, P.tower())) {
      const RootRep rr = root_of(tr.factor, P.tower());
      json j = transform_one(P, make_newton_map(tr.p, tr.q, rr.mu));
      j["face"] = tr.face.str();
      j["root_factor"] = tr.factor.str("z");
      j["orbit_size"] = tr.orbit_size();
      if (rr.tower) j["field"] = rr.tower->describe();
      arr.push_back(j);
    }
  }
  return json{{"polynomial", P.str()}, {"transforms", arr}};
}

}  // namespace

std::string diagram_json(const BiPoly& P) { return diagram(P).dump(); }

std::string diagram_text(const BiPoly& P) {
  const json j = diagram(P);
  std::string s = "N(" + P.str() + "), height " + std::to_string(j["height"].get<int>()) + "\n";
  for (const auto& f : j["faces"]) {
    s += "  " + f["text"].get<std::string>();
    if (f["dim"] == 0) {
      s += "  coefficient " + f["coefficient"].get<std::string>() + "\n";
      continue;
    }
    s += "  normal (" + std::to_string(f["normal"][0].get<int>()) + "," +
         std::to_string(f["normal"][1].get<int>()) + "), m = " + std::to_string(f["level"].get<int>()) +
         ", face polynomial " + f["face_polynomial"].get<std::string>() + ", " +
         f["smoothness"].get<std::string>() + "\n";
    for (const auto& r : f["roots"])
      s += "    root of " + r["factor"].get<std::string>() + ", multiplicity " +
           std::to_string(r["multiplicity"].get<int>()) + "\n";
  }
  s += std::string("non-degenerate: ") + (j["nondegenerate"].get<bool>() ? "yes" : "no") + "\n";
  return s;
}

std::string fan_json(const BiPoly& A, const BiPoly& B) { return fan(A, B).dump(); }

std::string fan_text(const BiPoly& A, const BiPoly& B) {
  const json j = fan(A, B);
  std::string s = "E_c for A = " + A.str() + ", B = " + B.str() + "\n";
  for (const auto& c : j["cones"]) {
    s += "  " + c["cone"].get<std::string>() + "  A:" + c["face_a"].get<std::string>() +
         " B:" + c["face_b"].get<std::string>();
    if (c.contains("role")) s += "  " + c["role"].get<std::string>();
    s += "\n";
  }
  return s;
}

std::string transform_json(const BiPoly& P, const NewtonMap* map) { return transforms(P, map).dump(); }

std::string transform_text(const BiPoly& P, const NewtonMap* map) {
  const json j = transforms(P, map);
  std::string s;
  for (const auto& t : j["transforms"]) {
    s += t["map"].get<std::string>();
    if (t.contains("face")) s += " on " + t["face"].get<std::string>();
    if (t.contains("orbit_size") && t["orbit_size"].get<int>() > 1)
      s += " (x" + std::to_string(t["orbit_size"].get<int>()) + ")";
    s += ": x1^" + std::to_string(t["power_of_x1"].get<int>()) + " * (" +
         t["quotient"].get<std::string>() + "), " + t["kind"].get<std::string>();
    if (t["kind"] == "root") s += " of multiplicity " + std::to_string(t["multiplicity"].get<int>());
    s += ", height " + std::to_string(t["height_before"].get<int>()) + " -> " +
         std::to_string(t["height_after"].get<int>()) + "\n";
  }
  return s;
}

}  // namespace nmf
