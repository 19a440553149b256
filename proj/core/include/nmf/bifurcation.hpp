#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nmf/engine.hpp"

namespace nmf {

// A face of N((P - cQ)_Sigma) whose face polynomial involves c.
struct DicriticalRecord {
  std::string sigma;  // composition of Newton maps, "root" at the top
  Face face;
  std::string witness;  // the c-dependent coefficient or face polynomial
  bool swapped = false;  // found on Q - cP
};

enum class Reason { VertexCancellation, AxisVertexBadFace, DiscriminantRoot };
std::string reason_name(Reason r);

struct CandidateValue {
  enum class Kind { Finite, Infinity };
  Kind kind = Kind::Finite;
  Fe value;      // a representative; a tower generator for irrational values
  Poly minpoly;  // monic minimal polynomial over Q in c (finite values)
  std::vector<Reason> reasons;
  std::vector<std::string> provenance;

  static CandidateValue infinity();
  bool is_rational() const { return kind == Kind::Finite && minpoly.deg() == 1; }
  Value as_value() const;
  std::string key() const;
  std::string str() const;  // "1/2", "inf", "root of c^2 + 1"
};

struct BifurcationSet {
  std::vector<CandidateValue> values;  // sorted: rationals ascending, then algebraic, then inf
  std::vector<DicriticalRecord> dicritical;
  std::vector<std::string> notes;  // e.g. smoothness witnesses with different verdicts
  bool contains(const Value& v) const;
  std::string json() const;
  std::string str() const;
};

struct BifurcationOptions {
  int budget = 0;  // Newton-map depth per branch; 0 means 4 * deg(PQ)
};

// Newton non-generic values, both orientations (Q - cP supplies inf).
BifurcationSet newton_bifurcation_set(const BiPoly& P, const BiPoly& Q, const Fe& x0 = Fe(),
                                      const Fe& y0 = Fe(), const BifurcationOptions& opt = {});
// The finite non-generic values of P - cQ alone, inf excluded.
BifurcationSet newton_candidates_oriented(const BiPoly& P, const BiPoly& Q, const Fe& x0,
                                          const Fe& y0, const BifurcationOptions& opt = {});

struct MotivicVerdict {
  CandidateValue value;
  bool from_newton = false;  // false for random probes
  bool motive_nonzero = false;
  long chi = 0;
  std::string motive;
};
struct MotivicSet {
  std::vector<MotivicVerdict> verdicts;
  std::vector<Fe> probes;
  std::vector<CandidateValue> nonzero() const;
};
MotivicSet motivic_bifurcation_set(const BiPoly& P, const BiPoly& Q, const Fe& x0, const Fe& y0,
                                   const std::vector<Fe>& probes, const BifurcationSet* newton = nullptr);

struct ComparisonRow {
  CandidateValue value;
  bool from_newton = false;
  bool motive_nonzero = false;
  long chi = 0;
  long mu = 0;
  long mu_generic = 0;
  bool consistent = true;  // chi == mu_generic - mu and the sets agree here
};
struct ComparisonReport {
  BifurcationSet newton;
  std::vector<ComparisonRow> rows;
  bool hypotheses_verified = true;
  std::vector<std::string> hypothesis_failures;
  bool agreement = false;
  std::string json() const;
  std::string text() const;
};
ComparisonReport compare_sets(const BiPoly& P, const BiPoly& Q, const Fe& x0 = Fe(),
                              const Fe& y0 = Fe(), int probes = 3, std::uint64_t seed = 1);

// Minimal polynomial over Q of a tower element.
Poly minimal_polynomial(const Fe& a);

}  // namespace nmf
