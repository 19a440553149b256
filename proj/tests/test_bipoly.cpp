#include <random>

#include "doctest.h"
#include "nmf/bipoly.hpp"
#include "nmf/parse.hpp"

using namespace nmf;

TEST_CASE("parser basics") {
  BiPoly p = parse_bipoly("y^2 - x^3");
  CHECK(p.coeff(0, 2).rational() == 1);
  CHECK(p.coeff(3, 0).rational() == -1);
  CHECK(parse_bipoly("3xy + 2(x+y)") == parse_bipoly("3*x*y + 2*x + 2*y"));
  CHECK(parse_bipoly("1/2 x - x/2").is_zero());
  CHECK(parse_bipoly("(x+1)^3").coeff(1, 0).rational() == 3);
  CHECK(parse_bipoly("-y^2+x^3").coeff(3, 0).rational() == 1);
  CHECK(parse_bipoly("x^2/3").coeff(2, 0).rational() == mpq_class(1, 3));
}

TEST_CASE("parser rejects non-polynomials") {
  CHECK_THROWS_AS(parse_bipoly("x^(1/2)"), ParseError);
  CHECK_THROWS_AS(parse_bipoly("x^-1"), ParseError);
  CHECK_THROWS_AS(parse_bipoly("z + 1"), ParseError);
  CHECK_THROWS_AS(parse_bipoly(""), ParseError);
  CHECK_THROWS_AS(parse_bipoly("(x+1"), ParseError);
  CHECK_THROWS_AS(parse_bipoly("x/0"), ParseError);
  CHECK(parse_rational("-3/6") == mpq_class(-1, 2));
  CHECK_THROWS_AS(parse_rational("1/2x"), ParseError);
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
}

TEST_CASE("printing round-trips") {
  for (const char* s : {"y^2 - x^3", "x^4*y - 1/2*x + 7", "-3*x*y^2 + y"}) {
    BiPoly p = parse_bipoly(s);
    CHECK(parse_bipoly(p.str()) == p);
  }
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> e(0, 9), n(0, 8), num(-50, 50), den(1, 12);
  for (int t = 0; t < 1000; ++t) {
    BiPoly p;
    for (int i = n(rng); i > 0; --i)
      p += BiPoly::monomial(Fe(mpq_class(num(rng), den(rng))), e(rng), e(rng));
    const std::string printed = p.str();
    const BiPoly back = parse_bipoly(printed);
    INFO(printed);
    CHECK(back == p);
    CHECK(back.str() == printed);
  }
}

TEST_CASE("derivatives, translation, orders") {
  BiPoly p = parse_bipoly("x^3 y^2 + x y^5");
  CHECK(p.dx() == parse_bipoly("3x^2y^2 + y^5"));
  CHECK(p.dy() == parse_bipoly("2x^3y + 5xy^4"));
  CHECK(p.ord_x() == 1);
  CHECK(p.ord_y() == 2);
  BiPoly q = parse_bipoly("(x-1)^2 + (y+2)^3");
  CHECK(q.translate(Fe(1), Fe(-2)) == parse_bipoly("x^2 + y^3"));
  CHECK(p.initial_form(1, 1) == parse_bipoly("x^3y^2"));
  CHECK(p.weighted_order(2, 1) == 7);
}

TEST_CASE("exact division and gcd") {
  BiPoly a = parse_bipoly("y^2 - x^3"), b = parse_bipoly("x + y + 1");
  CHECK(exact_div(a * b, b) == a);
  CHECK_THROWS(exact_div(a, b));
  BiPoly g = gcd(a * b * parse_bipoly("x - 2"), a * parse_bipoly("y^3 + x"));
  CHECK(g == a.normalized());
  CHECK(gcd(parse_bipoly("x^2*(y+1)"), parse_bipoly("x*(y+1)^2")) ==
        parse_bipoly("x*y + x"));
  CHECK(gcd(parse_bipoly("x+y"), parse_bipoly("x-y")) == BiPoly(Fe(1)));
}

TEST_CASE("squarefree in y") {
  BiPoly s = parse_bipoly("y - x^2"), t = parse_bipoly("y^2 + x");
  auto d = squarefree_y(s.pow(3) * t * parse_bipoly("x+3"));
  REQUIRE(d.size() == 2);
  CHECK(d[0].second == 1);
  CHECK(d[0].first == t.normalized());
  CHECK(d[1].second == 3);
  CHECK(d[1].first == s.normalized());
}
