#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "nmf/bifurcation.hpp"
#include "nmf/oracle.hpp"
#include "nmf/parse.hpp"
#include "nmf/serialize.hpp"

using namespace nmf;
using nlohmann::json;

namespace {

struct Options {
  std::string P, Q;
  std::string point = "0,0";
  std::string value = "generic";
  std::string format = "json";
  bool tree = false;
  int probes = 3;
  std::uint64_t seed = 1;
  std::optional<int> p, q;
  std::string mu;
};

// Error raised in one module, reported with its name.
struct ModuleError : std::runtime_error {
  std::string module;
  bool hypothesis;
  ModuleError(std::string m, const std::string& what, bool hyp = false)
      : std::runtime_error(what), module(std::move(m)), hypothesis(hyp) {}
};

template <class F>
auto in_module(const char* module, F&& f) {
  try {
    return f();
  } catch (const ModuleError&) {
    throw;
  } catch (const OracleError& e) {
    throw ModuleError(module, e.what(), true);
  } catch (const EngineError& e) {
    throw ModuleError(module, std::string(e.what()) + " (at " + e.trace + ")");
  } catch (const std::exception& e) {
    throw ModuleError(module, e.what());
  }
}

BiPoly poly_arg(const std::string& text, const char* flag) {
  if (text.empty()) throw ModuleError("cli", std::string("missing ") + flag);
  return in_module("parser", [&] { return parse_bipoly(text); });
}

std::pair<Fe, Fe> point_arg(const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos) throw ModuleError("cli", "--point expects a,b");
  return in_module("parser", [&] {
    return std::make_pair(Fe::from_string(s.substr(0, comma)), Fe::from_string(s.substr(comma + 1)));
  });
}

Value value_arg(const std::string& s) {
  if (s == "generic") return Value::generic();
  if (s == "inf" || s == "infinity") return Value::infinity();
  return in_module("parser", [&] { return Value::finite(Fe::from_string(s)); });
}

void emit(const Options& o, const json& j, const std::string& text) {
  if (o.format == "text")
    std::cout << text;
  else
    std::cout << j.dump(2) << "\n";
}

int cmd_polygon(const Options& o) {
  const BiPoly P = poly_arg(o.P, "--P");
  const auto [x0, y0] = point_arg(o.point);
  const BiPoly A = P.translate(x0, y0);
  const json j = in_module("newton-geometry", [&] { return json::parse(diagram_json(A)); });
  emit(o, j, in_module("newton-geometry", [&] { return diagram_text(A); }));
  return 0;
}

std::pair<BiPoly, BiPoly> oriented_pair(const Options& o, Fe* probe) {
  const BiPoly P = poly_arg(o.P, "--P"), Q = poly_arg(o.Q, "--Q");
  const auto [x0, y0] = point_arg(o.point);
  auto [A, B] = in_module("milnor-engine", [&] { return translate_to_origin(P, Q, x0, y0); });
  Value v = value_arg(o.value);
  if (v.kind == Value::Kind::Generic) {
    v = Value::finite(generic_probe(A, B, {}));
    if (probe) *probe = v.c;
  }
  return in_module("milnor-engine", [&] { return orient_value(A, B, v); });
}

int cmd_fan(const Options& o) {
  const auto [A, B] = oriented_pair(o, nullptr);
  const json j = in_module("newton-geometry", [&] { return json::parse(fan_json(A, B)); });
  emit(o, j, in_module("newton-geometry", [&] { return fan_text(A, B); }));
  return 0;
}

int cmd_transform(const Options& o) {
  const BiPoly P = poly_arg(o.P, "--P");
  const auto [x0, y0] = point_arg(o.point);
  const BiPoly A = P.translate(x0, y0);
  std::optional<NewtonMap> m;
  if (o.p || o.q || !o.mu.empty()) {
    if (!o.p || !o.q || o.mu.empty()) throw ModuleError("cli", "--p, --q and --mu go together");
    m = in_module("newton-transform", [&] { return make_newton_map(*o.p, *o.q, Fe::from_string(o.mu)); });
  }
  const NewtonMap* mp = m ? &*m : nullptr;
  const json j = in_module("newton-transform", [&] { return json::parse(transform_json(A, mp)); });
  emit(o, j, in_module("newton-transform", [&] { return transform_text(A, mp); }));
  return 0;
}

MilnorResult run_engine(const Options& o) {
  const BiPoly P = poly_arg(o.P, "--P"), Q = poly_arg(o.Q, "--Q");
  const auto [x0, y0] = point_arg(o.point);
  const Value v = value_arg(o.value);
  return in_module("milnor-engine", [&] { return motivic_milnor_fiber(MilnorQuery{P, Q, x0, y0, v}); });
}

int cmd_milnor(const Options& o) {
  const MilnorResult r = run_engine(o);
  json j{{"P", o.P}, {"Q", o.Q}, {"point", o.point}, {"value", o.value}};
  if (o.value == "generic") j["probe"] = r.c.str();
  j["motive"] = json::parse(r.motive.json());
  if (o.tree) j["tree"] = json::parse(r.tree.json());
  std::string text = "S = " + r.motive.str() + "\nchi = " + std::to_string(r.motive.euler_realization()) + "\n";
  if (o.tree) text += r.tree.text();
  emit(o, j, text);
  return 0;
}

int cmd_euler(const Options& o) {
  const MilnorResult r = run_engine(o);
  const long chi = r.motive.euler_realization();
  emit(o, json{{"value", o.value}, {"euler", chi}}, std::to_string(chi) + "\n");
  return 0;
}

int cmd_bifurcation(const Options& o) {
  const BiPoly P = poly_arg(o.P, "--P"), Q = poly_arg(o.Q, "--Q");
  const auto [x0, y0] = point_arg(o.point);
  const ComparisonReport r =
      in_module("bifurcation", [&] { return compare_sets(P, Q, x0, y0, o.probes, o.seed); });
  emit(o, json::parse(r.json()), r.text());
  return r.hypotheses_verified ? 0 : 2;
}

int cmd_oracle(const Options& o) {
  const BiPoly P = poly_arg(o.P, "--P");
  const auto [x0, y0] = point_arg(o.point);
  if (!o.Q.empty()) {
    const BiPoly Q = poly_arg(o.Q, "--Q");
    const Value v = value_arg(o.value);
    const ChiViaMu c = in_module("oracle", [&] { return chi_via_mu(P, Q, x0, y0, v, o.probes, o.seed); });
    json probes = json::array();
    for (const auto& p : c.probes) probes.push_back(p.str());
    const json j{{"value", o.value},    {"mu_generic", c.mu_generic}, {"mu_value", c.mu_value},
                 {"chi", c.chi},        {"probes", probes},           {"probe_mus", c.probe_mus}};
    emit(o, j,
         "mu_gen = " + std::to_string(c.mu_generic) + ", mu = " + std::to_string(c.mu_value) +
             ", chi = " + std::to_string(c.chi) + "\n");
    return 0;
  }
  const long mu = in_module("oracle", [&] { return milnor_number(P, x0, y0); });
  if (mu == kInfinite) throw ModuleError("oracle", "non-isolated critical point", true);
  const NewtonMu n = in_module("oracle", [&] { return mu_via_newton(P.translate(x0, y0)); });
  const json j{{"milnor_number", mu},
               {"newton",
                {{"twice_area", n.twice_area},
                 {"axis_h", n.axis_h},
                 {"axis_v", n.axis_v},
                 {"children", n.children},
                 {"mu", n.mu}}}};
  emit(o, j,
       "mu = " + std::to_string(mu) + " (Newton data: 2S = " + std::to_string(n.twice_area) +
           ", axes " + std::to_string(n.axis_h) + " + " + std::to_string(n.axis_v) +
           ", transforms " + std::to_string(n.children) + ", mu = " + std::to_string(n.mu) + ")\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Newton polygons and motivic Milnor fibers of rational functions P/Q"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* s, bool needs_q) {
    s->add_option("--P", o.P, "numerator polynomial in x, y")->required();
    auto* q = s->add_option("--Q", o.Q, "denominator polynomial in x, y");
    if (needs_q) q->required();
    s->add_option("--point", o.point, "indeterminacy point a,b")->capture_default_str();
    s->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
  };
  auto with_value = [&](CLI::App* s) {
    s->add_option("--value", o.value, "c: a rational, 'generic' or 'inf'")->capture_default_str();
  };
  auto with_probes = [&](CLI::App* s) {
    s->add_option("--probes", o.probes, "number of random generic probes")->capture_default_str();
    s->add_option("--seed", o.seed, "probe seed")->capture_default_str();
  };

  auto* polygon = app.add_subcommand("polygon", "Newton polygon, face polynomials and roots of P");
  common(polygon, false);
  auto* fan = app.add_subcommand("fan", "common refinement of the dual fans of P - cQ and Q");
  common(fan, true);
  with_value(fan);
  auto* transform = app.add_subcommand("transform", "Newton transforms of P");
  common(transform, false);
  transform->add_option("--p", o.p, "normal (p, q) of the map");
  transform->add_option("--q", o.q);
  transform->add_option("--mu", o.mu, "root mu of the map");
  auto* milnor = app.add_subcommand("milnor-fiber", "motivic Milnor fiber S_{f,x,c}");
  common(milnor, true);
  with_value(milnor);
  milnor->add_flag("--tree", o.tree, "include the recursion tree");
  auto* bif = app.add_subcommand("bifurcation", "Newton and motivic bifurcation sets, checked by the oracle");
  common(bif, true);
  with_probes(bif);
  auto* oracle = app.add_subcommand("oracle", "Milnor numbers; chi via Milnor numbers when --Q is given");
  common(oracle, false);
  with_value(oracle);
  with_probes(oracle);
  auto* euler = app.add_subcommand("euler", "Euler realization of S_{f,x,c}");
  common(euler, true);
  with_value(euler);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (polygon->parsed()) return cmd_polygon(o);
    if (fan->parsed()) return cmd_fan(o);
    if (transform->parsed()) return cmd_transform(o);
    if (milnor->parsed()) return cmd_milnor(o);
    if (bif->parsed()) return cmd_bifurcation(o);
    if (oracle->parsed()) return cmd_oracle(o);
    if (euler->parsed()) return cmd_euler(o);
  } catch (const ModuleError& e) {
    std::cerr << (e.hypothesis ? "hypothesis violation" : "error") << " [" << e.module << "]: " << e.what()
              << "\n";
    return e.hypothesis ? 2 : 1;
  }
  return 1;
}
