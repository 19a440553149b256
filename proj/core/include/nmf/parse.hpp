#pragma once

#include <stdexcept>
#include <string>

#include "nmf/bipoly.hpp"

namespace nmf {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Integer or a/b literal; rejects anything else.
mpq_class parse_rational(const std::string& s);

// Polynomial in x, y with rational coefficients. Accepts +, -, *, ^ with
// nonnegative integer exponents, parentheses, implicit multiplication
// ("3xy", "2(x+y)") and division by rational constants ("x/2").
BiPoly parse_bipoly(const std::string& s);

}  // namespace nmf
