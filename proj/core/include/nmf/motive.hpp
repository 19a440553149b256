#pragma once

#include <map>
#include <string>
#include <vector>

#include "nmf/factor.hpp"
#include "nmf/geometry.hpp"
#include "nmf/laurent.hpp"

namespace nmf {

// Irreducible factor in z of a quasi-homogeneous fraction, with its net
// exponent (numerator minus denominator). Exponent 0 marks a factor whose
// zero set is removed but which cancels in the fraction.
struct QhfFactor {
  Poly factor;
  int exponent = 0;
};

// Generators of the equivariant Grothendieck ring used by the formulas.
//   Torus1 {n}:      [x^n : Gm -> Gm, sigma_Gm]; Torus1{1} is the unit.
//   Torus2 {a, b}:   [x^a y^b : Gm^2 -> Gm, sigma]
//   Qhf:             [t^d z^k prod phi(z)^e : Gm x (Gm \ {removed roots}) -> Gm, sigma_C]
//                    the fraction A_gamma / B_gamma on the ray (p, q) after the
//                    toric change x = t^p z^q', y = t^q z^p'.
struct MotiveClass {
  enum class Kind { Torus1, Torus2, Qhf };
  Kind kind = Kind::Torus1;
  int n = 1;
  int a = 0, b = 0;
  int d = 0, k = 0;
  std::vector<QhfFactor> factors;  // removed factors, sorted
  int p = 0, q = 0;                // originating ray, not part of the key
  std::string label;               // display form, not part of the key

  static MotiveClass torus1(int n);
  static MotiveClass torus2(int a, int b);
  // Fraction x^{ea} y^{fa} prod A / x^{eb} y^{fb} prod B on the ray (p, q),
  // factors given as monic irreducible z-forms with multiplicities. All
  // factors of both sides are removed.
  static MotiveClass qhf(int p, int q, Exp pre_a, const Factorization& fa, Exp pre_b,
                         const Factorization& fb, std::string label = {});

  int removed_roots() const;  // r = sum of the factor degrees
  std::string key() const;
  std::string str() const;
};

class Motive {
 public:
  struct Term {
    MotiveClass cls;
    Laurent coef;
  };

  Motive() = default;
  // Normalized image of coef * cls.
  static Motive of(const MotiveClass& cls, const Laurent& coef = Laurent(1));
  static Motive unit() { return of(MotiveClass::torus1(1)); }

  bool is_zero() const { return terms_.empty(); }
  const std::map<std::string, Term>& terms() const { return terms_; }
  long euler_realization() const;

  Motive operator-() const;
  Motive& operator+=(const Motive& o);
  Motive& operator-=(const Motive& o);
  friend Motive operator+(Motive a, const Motive& b) { return a += b; }
  friend Motive operator-(Motive a, const Motive& b) { return a -= b; }
  friend Motive operator*(const Laurent& s, const Motive& m);
  bool operator==(const Motive& o) const;

  std::string str() const;
  std::string json() const;

 private:
  friend Motive normalize(const MotiveClass& raw);
  void add_normalized(const MotiveClass& cls, const Laurent& coef);
  std::map<std::string, Term> terms_;
};

// Applies the rewrite rules to a single raw class.
Motive normalize(const MotiveClass& raw);
// chi of the fibre over 1 of one normalized generator.
long euler_of_class(const MotiveClass& cls);

}  // namespace nmf
