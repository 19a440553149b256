#include <random>

#include "doctest.h"
#include "nmf/cone.hpp"
#include "nmf/parse.hpp"

using namespace nmf;

namespace {

std::vector<Laurent> brute_series(const LinearForm& phi, const LinearForm& eta, const Cone2& C,
                                  int n) {
  std::vector<Laurent> r(n + 1);
  const int box = n * (std::abs(C.w1.first) + std::abs(C.w1.second) + std::abs(C.w2.first) +
                       std::abs(C.w2.second));
  for (int x = -box; x <= box; ++x)
    for (int y = -box; y <= box; ++y) {
      if (!C.contains({x, y})) continue;
      const long t = pairing(phi, {x, y});
      if (t <= n) r[t] += Laurent::L(static_cast<int>(-pairing(eta, {x, y})));
    }
  return r;
}

Vec2 random_primitive(std::mt19937& rng) {
  std::uniform_int_distribution<int> d(0, 5);
  for (;;) {
    Vec2 v{d(rng), d(rng)};
    if (std::gcd(v.first, v.second) == 1) return v;
  }
}

BiPoly pencil(const mpq_class& c) {
  return parse_bipoly("(x^2+y^3)^2+x^5") - parse_bipoly("2x^4+x^2y^3+x*y^5+y^8").scaled(Fe(c));
}

}  // namespace

TEST_CASE("Laurent arithmetic") {
  Laurent a = Laurent::L(1) - 1;
  CHECK((a * a).str() == "L^2 - 2*L + 1");
  CHECK((a + (-a)).is_zero());
  CHECK((Laurent::L(-2, 3)).str() == "3*L^(-2)");
  CHECK((a * Laurent::L(-1)).eval_at_one() == 0);
  CHECK(Laurent(0).is_zero());
}

TEST_CASE("cone series limits") {
  CHECK(cone_series_limit({1, 1}, {1, 1}, Cone2::open({1, 0}, {0, 1})) == 1);
  CHECK(cone_series_limit({1, 1}, {2, 5}, Cone2::ray({3, 2})) == -1);
  CHECK(cone_series_limit({1, 1}, {0, 0}, Cone2::half_open({1, 0}, {1, 1})) == 0);
  CHECK_THROWS(cone_series_limit({1, -1}, {0, 0}, Cone2::open({0, 1}, {1, 1})));
  CHECK_THROWS(Cone2::open({2, 2}, {0, 1}));
}

TEST_CASE("cone series closed forms") {
  auto ray = cone_series_closed_form({2, 1}, {1, 3}, Cone2::ray({1, 1}));
  CHECK(ray.numerator.size() == 1);
  CHECK(ray.numerator.at(3) == Laurent::L(-4));
  CHECK(ray.denominator == std::vector<Vec2>{{4, 3}});

  auto quad = cone_series_closed_form({1, 1}, {1, 1}, Cone2::open({1, 0}, {0, 1}));
  CHECK(quad.numerator.size() == 1);
  CHECK(quad.numerator.at(2) == Laurent::L(-2));
  CHECK(quad.denominator == std::vector<Vec2>{{1, 1}, {1, 1}});
  CHECK(fundamental_points(Cone2::open({1, 0}, {1, 2})).size() == 2);
  CHECK(fundamental_points(Cone2::half_open({1, 0}, {1, 2})).size() == 2);
}

TEST_CASE("closed forms agree with lattice sums") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> f(1, 3), g(-2, 2), kind(0, 2);
  int checked = 0;
  while (checked < 60) {
    Vec2 w1 = random_primitive(rng), w2 = random_primitive(rng);
    const int k = kind(rng);
    Cone2 C;
    if (k == 0) {
      C = Cone2::ray(w1);
    } else {
      if (static_cast<long>(w1.first) * w2.second == static_cast<long>(w1.second) * w2.first)
        continue;
      C = k == 1 ? Cone2::open(w1, w2) : Cone2::half_open(w1, w2);
    }
    LinearForm phi{f(rng), f(rng)}, eta{g(rng), g(rng)};
    auto cs = cone_series_closed_form(phi, eta, C);
    CHECK(cs.expand(8) == brute_series(phi, eta, C, 8));
    CHECK(cs.limit_at_infinity() == chi_c(C));
    ++checked;
  }
}

TEST_CASE("eps coefficients on the pencil") {
  const auto Q = NewtonDiagram::of(parse_bipoly("2x^4+x^2y^3+x*y^5+y^8"));
  for (const auto& fc : fan_ec(NewtonDiagram::of(pencil(7)), Q)) {
    if (fc.cone.dim == 2)
      CHECK(eps_dim2(fc.face_a.lo, fc.face_b.lo, fc.cone.w1, fc.cone.w2).eps == 0);
    else
      CHECK(eps_dim1(fc.face_a.lo, fc.face_b.lo, fc.cone.w1) == 0);
  }
  auto half = fan_ec(NewtonDiagram::of(pencil(mpq_class(1, 2))), Q);
  const auto& ch = half.back();
  REQUIRE(ch.is_ch);
  auto e = eps_dim2(ch.face_a.lo, ch.face_b.lo, ch.cone.w1, ch.cone.w2);
  CHECK(e.eps == 1);
  CHECK(e.shape == EpsShape::AxisX);
  CHECK(e.exponent == 1);
  for (const auto& fc : half) {
    if (fc.cone.dim != 1 || fc.cone.w1 != Vec2{1, 1}) continue;
    CHECK(eps_dim1(fc.face_a.lo, fc.face_b.lo, fc.cone.w1) == -1);
    CHECK(eps_dim1(fc.face_a.hi, fc.face_b.lo, fc.cone.w1) == -1);
  }
  CHECK(eps_dim1({2, 3}, {2, 3}, {1, 1}) == 0);
  auto ax = eps_dim2({0, 5}, {0, 2}, {1, 3}, {0, 1});
  CHECK(ax.shape == EpsShape::AxisY);
  CHECK(ax.eps == 1);
  CHECK(eps_dim2({1, 1}, {0, 0}, {1, 0}, {0, 1}).eps == 1);
  CHECK(eps_dim2({1, 0}, {0, 1}, {1, 0}, {0, 1}).eps == 0);
}
