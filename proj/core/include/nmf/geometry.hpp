#pragma once

#include <string>
#include <vector>

#include "nmf/bipoly.hpp"
#include "nmf/factor.hpp"

namespace nmf {

using Vec2 = std::pair<int, int>;

// Vertex (dim 0, lo == hi) or segment (dim 1) of a Newton polygon.
// For segments lo is the upper-left endpoint, hi the lower-right one and
// (p, q) the primitive normal; level = p*a + q*b on the face.
struct Face {
  int dim = 0;
  Exp lo, hi;
  int p = 0, q = 0;
  int level = 0;

  static Face vertex(Exp v) { return Face{0, v, v, 0, 0, 0}; }
  int lattice_length() const;
  bool operator==(const Face& o) const {
    return dim == o.dim && lo == o.lo && hi == o.hi;
  }
  std::string str() const;
};

class NewtonDiagram {
 public:
  // Vertices with a strictly increasing and b strictly decreasing.
  std::vector<Exp> vertices;

  static NewtonDiagram of_points(std::vector<Exp> pts);
  // prime = true drops the support on the x-axis first.
  static NewtonDiagram of(const BiPoly& P, bool prime = false);

  int height() const { return vertices.front().second - vertices.back().second; }
  bool is_point() const { return vertices.size() == 1; }
  std::vector<Face> segments() const;
  std::vector<Face> faces() const;  // v0, S1, v1, S2, ..., vd
  const Exp& vertical() const { return vertices.front(); }
  const Exp& horizontal() const { return vertices.back(); }

  // m(p, q) and the face where it is reached; (p, q) nonzero in N^2.
  int support(int p, int q) const;
  Face face_at(int p, int q) const;
};

struct Cone {
  int dim = 2;
  Vec2 w1{1, 0}, w2{0, 1};  // for rays only w1 is used
  std::string str() const;
};

struct FanCone {
  Cone cone;
  Face face_a;  // face of the first polynomial (P - cQ)
  Face face_b;  // face of the second one (Q)
  bool is_cv = false;  // 2-cone adjacent to (1,0)
  bool is_ch = false;  // 2-cone adjacent to (0,1)
};

// Primitive normals of the segments, sorted from (1,0) towards (0,1).
std::vector<Vec2> dual_rays(const NewtonDiagram& d);
std::vector<Cone> dual_fan(const NewtonDiagram& d);
// Coarsest common refinement of the dual fans; cones alternate
// 2-cone, ray, 2-cone, ... starting at C_v and ending at C_h.
std::vector<FanCone> fan_ec(const NewtonDiagram& a, const NewtonDiagram& b);

struct RootOrbit {
  Poly factor;  // monic irreducible in z over the coefficient tower
  int nu = 1;   // multiplicity
  int size() const { return factor.deg(); }
};

// P_gamma = scalar * x^a y^b * prod (y^p - mu x^q)^nu over the roots mu.
struct FacePolynomial {
  Face face;
  Exp prefix;
  Fe scalar;
  Poly zform;  // sum_j c(hi - j*(q,-p)) z^j, z = y^p / x^q
  std::vector<RootOrbit> orbits;
  BiPoly restriction;
};

Poly face_zform(const BiPoly& P, const Face& f);
FacePolynomial face_polynomial(const BiPoly& P, const Face& f, const TowerPtr& K);

enum class Smoothness { NotSmooth, YSmooth, XSmooth };
struct SmoothWitness {
  Smoothness kind = Smoothness::NotSmooth;
  Exp v, w;
};
// All smoothness witnesses of a face (both kinds may occur).
std::vector<SmoothWitness> smooth_witnesses(const BiPoly& P, const Face& f);
Smoothness is_smooth_face(const BiPoly& P, const Face& f);
bool is_nondegenerate(const BiPoly& P);

}  // namespace nmf
