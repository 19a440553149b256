#include <random>

#include "doctest.h"
#include "nmf/oracle.hpp"
#include "nmf/parse.hpp"

using namespace nmf;

namespace {

const BiPoly kP = parse_bipoly("(x^2+y^3)^2+x^5");
const BiPoly kQ = parse_bipoly("2x^4+x^2y^3+x*y^5+y^8");

// dim k[x,y]/(x^a, y^b) by counting standard monomials
long monomial_quotient_dim(int a, int b) {
  long n = 0;
  for (int i = 0; i < 64; ++i)
    for (int j = 0; j < 64; ++j) n += (i < a && j < b);
  return n;
}

BiPoly random_poly(std::mt19937& rng, int deg, bool through_origin) {
  std::uniform_int_distribution<int> c(-3, 3), e(0, deg);
  BiPoly p;
  for (int i = 0; i < 5; ++i) {
    int a = e(rng), b = e(rng);
    if (a + b > deg) continue;
    p += BiPoly::monomial(Fe(static_cast<long>(c(rng))), a, b);
  }
  if (through_origin) p -= BiPoly(p.constant());
  return p;
}

// twice the area under a convenient polygon, by the shoelace formula
long shoelace_twice_area(const NewtonDiagram& d) {
  std::vector<Exp> poly{{0, 0}};
  for (const auto& v : d.vertices) poly.push_back(v);
  long s = 0;
  for (size_t i = 0; i < poly.size(); ++i) {
    const auto& [x1, y1] = poly[i];
    const auto& [x2, y2] = poly[(i + 1) % poly.size()];
    s += static_cast<long>(x1) * y2 - static_cast<long>(x2) * y1;
  }
  return std::abs(s);
}

}  // namespace

TEST_CASE("intersection numbers") {
  CHECK(intersection_multiplicity(parse_bipoly("x"), parse_bipoly("y")) == 1);
  CHECK(intersection_multiplicity(parse_bipoly("y^2"), parse_bipoly("x^3")) ==
        monomial_quotient_dim(3, 2));
  CHECK(intersection_multiplicity(kP, kP) == kInfinite);
  CHECK(intersection_multiplicity(parse_bipoly("x*(y-x)"), parse_bipoly("x*y")) == kInfinite);
  CHECK(intersection_multiplicity(parse_bipoly("x+1"), parse_bipoly("y")) == 0);
  CHECK(intersection_multiplicity(parse_bipoly("y - x^2"), parse_bipoly("y")) == 2);
  CHECK(intersection_multiplicity(parse_bipoly("x-1"), parse_bipoly("y-2"), Fe(1), Fe(2)) == 1);
  for (int a = 1; a < 6; ++a)
    for (int b = 1; b < 6; ++b)
      CHECK(intersection_multiplicity(BiPoly::x().pow(a), BiPoly::y().pow(b)) ==
            monomial_quotient_dim(a, b));
}

TEST_CASE("Milnor numbers") {
  CHECK(milnor_number(parse_bipoly("y^2 - x^3")) == 2);
  CHECK(milnor_number(parse_bipoly("y - x^2")) == 0);
  CHECK(milnor_number(parse_bipoly("x*y")) == 1);
  CHECK(milnor_number(kP - kQ.scaled(Fe(7))) == 15);
  CHECK(milnor_number(kP + kQ.scaled(Fe(4))) == 16);
  CHECK(milnor_number(kP - kQ.scaled(Fe(mpq_class(1, 2)))) == 17);
  CHECK(milnor_number(kP) == 18);
  CHECK(milnor_number(kQ) == 16);
  CHECK(milnor_number(parse_bipoly("(y^2-x^3)^2")) == kInfinite);
}

TEST_CASE("chi via Milnor numbers") {
  CHECK(chi_via_mu(kP, kQ, Fe(), Fe(), Value::finite(Fe(-4))).chi == -1);
  CHECK(chi_via_mu(kP, kQ, Fe(), Fe(), Value::finite(Fe(0))).chi == -3);
  CHECK(chi_via_mu(kP, kQ, Fe(), Fe(), Value::finite(Fe(mpq_class(1, 2)))).chi == -2);
  CHECK(chi_via_mu(kP, kQ, Fe(), Fe(), Value::infinity()).chi == -1);
  auto g = chi_via_mu(kP, kQ, Fe(), Fe(), Value::generic());
  CHECK(g.chi == 0);
  CHECK(g.mu_generic == 15);
  CHECK(g.probe_mus.size() == 3);
  CHECK(random_probes(4, 9) == random_probes(4, 9));
}

TEST_CASE("intersection multiplicity axioms") {
  std::mt19937 rng(21);
  int checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    BiPoly F = random_poly(rng, 3, true), G = random_poly(rng, 3, true),
           H = random_poly(rng, 3, true), A = random_poly(rng, 2, false);
    if (F.is_zero() || G.is_zero() || H.is_zero()) continue;
    const long fg = intersection_multiplicity(F, G), gf = intersection_multiplicity(G, F);
    CHECK(fg == gf);
    const long fh = intersection_multiplicity(F, H);
    const long fgh = intersection_multiplicity(F, G * H);
    if (fg != kInfinite && fh != kInfinite) CHECK(fgh == fg + fh);
    else CHECK(fgh == kInfinite);
    CHECK(intersection_multiplicity(F, G + A * F) == fg);
    ++checked;
  }
  CHECK(checked > 30);
}

TEST_CASE("Newton-data Milnor number") {
  auto cusp = mu_via_newton(parse_bipoly("y^2 - x^3"));
  CHECK(cusp.twice_area == 6);
  CHECK(cusp.axis_h == 3);
  CHECK(cusp.axis_v == 2);
  CHECK(cusp.children == 0);
  CHECK(cusp.mu == 2);
  CHECK(mu_via_newton(parse_bipoly("y - x^3")).mu == 0);
  CHECK(mu_via_newton(kP).mu == 18);
  for (const auto& c : {Fe(7), Fe(-4), Fe(mpq_class(1, 2))})
    CHECK(mu_via_newton(kP - kQ.scaled(c)).mu == milnor_number(kP - kQ.scaled(c)));
  CHECK(mu_via_newton(kQ).mu == 16);
  CHECK_THROWS_AS(mu_via_newton(parse_bipoly("(y^2-x^3)^2")), OracleError);
}

TEST_CASE("Newton-data Milnor number on random polynomials") {
  std::mt19937 rng(33);
  int checked = 0;
  for (int trial = 0; trial < 200 && checked < 40; ++trial) {
    BiPoly F = random_poly(rng, 5, true);
    if (F.is_zero()) continue;
    const long mu = milnor_number(F);
    if (mu == kInfinite) continue;
    CHECK(mu_via_newton(F).mu == mu);
    ++checked;
  }
  CHECK(checked >= 40);
}

TEST_CASE("relative area matches the shoelace area on convenient nondegenerate polygons") {
  for (const char* f : {"y^2 - x^3", "y^3 + x^2y + x^5", "y^4 - x^3 + x*y^2", "x^2 + y^2",
                        "y^5 + x^2y^2 + x^7", "(y^3-x^2)(y^3-2x^2) + x^5"}) {
    const BiPoly F = parse_bipoly(f);
    REQUIRE(is_nondegenerate(F));
    const NewtonDiagram d = NewtonDiagram::of(F);
    CHECK(mu_via_newton(F).twice_area == shoelace_twice_area(d));
  }
}
