#pragma once

#include <utility>
#include <vector>

#include "nmf/poly.hpp"

namespace nmf {

using Factorization = std::vector<std::pair<Poly, int>>;

// Monic irreducible factors over Q with multiplicities (Zassenhaus).
Factorization factor_rational(const Poly& f);

// Monic irreducible factors over the tower K (Trager norms, recursively).
// f's coefficients must lie in K.
Factorization factor_over(const Poly& f, const TowerPtr& K);

// Distinct monic irreducible factors, sorted canonically.
std::vector<Poly> irreducible_factors(const Poly& f, const TowerPtr& K);

// Deterministic total order used to sort factor lists.
bool poly_less(const Poly& a, const Poly& b);

}  // namespace nmf
