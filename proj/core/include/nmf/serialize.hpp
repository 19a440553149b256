#pragma once

#include <string>

#include "nmf/transform.hpp"

namespace nmf {

// Newton polygon of P at the origin with face polynomials and roots.
std::string diagram_json(const BiPoly& P);
std::string diagram_text(const BiPoly& P);

// Common refinement E_c of the dual fans of A = P - cQ and B = Q.
std::string fan_json(const BiPoly& A, const BiPoly& B);
std::string fan_text(const BiPoly& A, const BiPoly& B);

// One Newton transform, or all (segment, root) transforms of P when map is null.
std::string transform_json(const BiPoly& P, const NewtonMap* map);
std::string transform_text(const BiPoly& P, const NewtonMap* map);

}  // namespace nmf
