#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nmf/geometry.hpp"

namespace nmf {

// x -> mu^{q'} x1^p,  y -> x1^q (y1 + mu^{p'}),  with p p' - q q' = 1.
struct NewtonMap {
  int p = 1, q = 1;
  int pp = 1, qq = 0;  // p', q'
  Fe mu;
  std::string str() const;
};

// Minimal nonnegative (p', q').
NewtonMap make_newton_map(int p, int q, const Fe& mu);
BiPoly substitute_newton(const BiPoly& P, const NewtonMap& m);

struct TransformOutcome {
  enum class Kind { Unit, Root };
  int N = 0;        // m(p, q), the power of x1 split off
  BiPoly quotient;  // P_sigma / x1^N
  Kind kind = Kind::Unit;
  int nu = 0;  // multiplicity of mu when kind == Root
  int height_before = 0;
  int height_after = 0;
};
TransformOutcome apply_transform(const BiPoly& P, const NewtonMap& m);

// One entry per (segment, root orbit) of N(P).
struct Triple {
  int p = 0, q = 0;
  Face face;
  Poly factor;
  int nu = 1;
  int orbit_size() const { return factor.deg(); }
};
std::vector<Triple> enumerate_triples(const BiPoly& P, const TowerPtr& K);

// A representative root of an irreducible monic factor: itself if linear,
// otherwise the generator of a new tower level defined by the factor.
struct RootRep {
  Fe mu;
  TowerPtr tower;
};
RootRep root_of(const Poly& factor, const TowerPtr& K);

// Base-case shapes for a pair (A, B).
struct BaseCaseShape {
  enum class Kind { MonMon, Dim1Dim1 };
  Kind kind = Kind::MonMon;
  int M1 = 0, m1 = 0, M2 = 0, m2 = 0;
  int q = 0;   // Dim1Dim1: branch y - mu x^q + ...
  Fe mu;       // Dim1Dim1 root
  Fe coef_a;   // leading coefficients (corner or branch-face scalar)
  Fe coef_b;
  std::string str() const;
};

// Decomposition A = x^M * h^m * unit with h a single smooth branch
// y - mu x^q + (higher terms). m == 0 means A = x^M * unit.
struct SmoothPower {
  int M = 0, m = 0, q = 0;
  Fe mu;
  BiPoly branch;  // normalized; empty when m == 0
};
std::optional<SmoothPower> smooth_power(const BiPoly& A);

std::optional<BaseCaseShape> detect_base_case(const BiPoly& A, const BiPoly& B);

}  // namespace nmf
