#pragma once

#include <gmpxx.h>

#include <memory>
#include <string>
#include <vector>

namespace nmf {

class Tower;
class Poly;
using TowerPtr = std::shared_ptr<const Tower>;

// Element of Q or of a finite tower Q(w1)(w2)...; a null tower means Q.
class Fe {
 public:
  Fe() = default;
  Fe(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Fe(const mpq_class& q) : q_(q) { q_.canonicalize(); }  // NOLINT
  static Fe from_string(const std::string& s);
  static Fe generator(const TowerPtr& t);
  // Coordinates in the power basis of t over its parent.
  static Fe from_coords(const TowerPtr& t, std::vector<Fe> coords);

  const TowerPtr& tower() const { return t_; }
  int depth() const;
  const std::vector<Fe>& coords() const { return c_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  mpq_class rational() const;  // throws unless is_rational()

  Fe lift(const TowerPtr& t) const;
  // Drops to the smallest ancestor level that contains the value.
  Fe simplify() const;

  Fe operator-() const;
  Fe& operator+=(const Fe& o);
  Fe& operator-=(const Fe& o);
  Fe& operator*=(const Fe& o);
  Fe& operator/=(const Fe& o);
  friend Fe operator+(Fe a, const Fe& b) { return a += b; }
  friend Fe operator-(Fe a, const Fe& b) { return a -= b; }
  friend Fe operator*(Fe a, const Fe& b) { return a *= b; }
  friend Fe operator/(Fe a, const Fe& b) { return a /= b; }
  friend bool operator==(const Fe& a, const Fe& b);
  friend bool operator!=(const Fe& a, const Fe& b) { return !(a == b); }

  Fe inverse() const;
  Fe pow(long e) const;
  // Norm down to the parent level.
  Fe norm_to_parent() const;
  Fe norm_to_q() const;

  std::string str() const;

 private:
  TowerPtr t_;
  mpq_class q_;
  std::vector<Fe> c_;
  void trim();
};

// The deeper of two towers on a common chain; throws if they are unrelated.
TowerPtr join(const TowerPtr& a, const TowerPtr& b);
bool is_ancestor(const TowerPtr& anc, const TowerPtr& t);

class Tower {
 public:
  // minpoly must be monic, irreducible over base, of degree >= 2.
  static TowerPtr extend(const TowerPtr& base, const Poly& minpoly,
                         std::string name = {});

  const TowerPtr& parent() const { return parent_; }
  int depth() const { return depth_; }
  int degree() const;
  long absolute_degree() const;
  const Poly& minpoly() const { return *minpoly_; }
  const std::string& name() const { return name_; }
  std::string describe() const;

 private:
  Tower() = default;
  TowerPtr parent_;
  std::shared_ptr<Poly> minpoly_;
  std::string name_;
  int depth_ = 0;
};

}  // namespace nmf
