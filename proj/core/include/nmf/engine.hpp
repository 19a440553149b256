#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "nmf/cone.hpp"
#include "nmf/motive.hpp"
#include "nmf/transform.hpp"

namespace nmf {

struct Value {
  enum class Kind { Finite, Generic, Infinity };
  Kind kind = Kind::Finite;
  Fe c;

  static Value finite(const Fe& c) { return Value{Kind::Finite, c}; }
  static Value generic() { return Value{Kind::Generic, Fe()}; }
  static Value infinity() { return Value{Kind::Infinity, Fe()}; }
  std::string str() const;
};

struct MilnorQuery {
  BiPoly P, Q;
  Fe x0, y0;  // the indeterminacy point
  Value value;
};

struct EngineOptions {
  int budget = 0;          // transform steps per branch; 0 means 4 * deg(P*Q)
  std::vector<Fe> avoid;   // values a generic probe must not take
};

// One cone of the common refinement at a node.
struct ConeRecord {
  Cone cone;
  Face face_a, face_b;
  int eps = 0;
  Motive emitted;  // already signed
};

struct RecursionNode {
  BiPoly A, B;                     // working pair (P - cQ, Q) at this node
  std::string map;                 // Newton map leading here, empty at the root
  int weight = 1;                  // size of the root orbit
  std::optional<BaseCaseShape> base;
  std::vector<ConeRecord> cones;
  std::vector<RecursionNode> children;
  Motive motive;                   // total at this node, children unweighted

  std::string text(int indent = 0) const;
  std::string json() const;
};

struct MilnorResult {
  Motive motive;
  RecursionNode tree;
  Fe c;  // value actually used (the probe for GENERIC)
};

class EngineError : public std::runtime_error {
 public:
  EngineError(const std::string& what, std::string trace)
      : std::runtime_error(what), trace(std::move(trace)) {}
  std::string trace;
};

// (P, Q) moved so that the point becomes the origin.
std::pair<BiPoly, BiPoly> translate_to_origin(const BiPoly& P, const BiPoly& Q, const Fe& x0,
                                              const Fe& y0);
// Working pair (A, B): (P - cQ, Q) for finite c, (Q, P) for infinity.
std::pair<BiPoly, BiPoly> orient_value(const BiPoly& P, const BiPoly& Q, const Value& v);

// Rational probe standing in for an indeterminate value.
Fe generic_probe(const BiPoly& P, const BiPoly& Q, const std::vector<Fe>& avoid);

Motive base_case_motive(const BaseCaseShape& s);

// Motive of the working pair (A, B) at the origin.
RecursionNode milnor_node(const BiPoly& A, const BiPoly& B, int budget);

MilnorResult motivic_milnor_fiber(const MilnorQuery& q, const EngineOptions& opt = {});

}  // namespace nmf
