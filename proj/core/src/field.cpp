#include "nmf/field.hpp"

#include <sstream>
#include <stdexcept>

#include "nmf/poly.hpp"

namespace nmf {

bool is_ancestor(const TowerPtr& anc, const TowerPtr& t) {
  if (!anc) return true;
  for (const Tower* p = t.get(); p != nullptr; p = p->parent().get())
    if (p == anc.get()) return true;
  return false;
}

TowerPtr join(const TowerPtr& a, const TowerPtr& b) {
  if (a == b || !b) return a;
  if (!a) return b;
  if (is_ancestor(a, b)) return b;
  if (is_ancestor(b, a)) return a;
  throw std::logic_error("join: elements from unrelated field towers");
}

Fe Fe::from_string(const std::string& s) {
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  q.canonicalize();
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  return Fe(q);
}

Fe Fe::generator(const TowerPtr& t) {
  if (!t) throw std::logic_error("Q has no generator");
  return from_coords(t, {Fe(), Fe(1)});
}

Fe Fe::from_coords(const TowerPtr& t, std::vector<Fe> coords) {
  if (!t) {
    if (coords.size() > 1) throw std::logic_error("coords over Q");
    return coords.empty() ? Fe() : coords[0];
  }
  Fe r;
  r.t_ = t;
  for (auto& x : coords) x = x.lift(t->parent());
  r.c_ = std::move(coords);
  if (static_cast<int>(r.c_.size()) > t->degree()) {
    Poly a(r.c_);
    r.c_ = (a % t->minpoly()).c;
  }
  r.trim();
  return r;
}

int Fe::depth() const { return t_ ? t_->depth() : 0; }

void Fe::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

bool Fe::is_zero() const { return t_ ? c_.empty() : sgn(q_) == 0; }

bool Fe::is_rational() const {
  if (!t_) return true;
  return c_.empty() || (c_.size() == 1 && c_[0].is_rational());
}

mpq_class Fe::rational() const {
  if (!t_) return q_;
  if (c_.empty()) return mpq_class(0);
  if (c_.size() == 1) return c_[0].rational();
  throw std::logic_error("field element is not rational");
}

bool Fe::is_one() const { return is_rational() && rational() == 1; }

Fe Fe::lift(const TowerPtr& t) const {
  if (t == t_) return *this;
  if (!t || !is_ancestor(t_, t))
    throw std::logic_error("lift: target tower does not contain element");
  Fe below = lift(t->parent());
  Fe r;
  r.t_ = t;
  if (!below.is_zero()) r.c_.push_back(std::move(below));
  return r;
}

Fe Fe::simplify() const {
  if (!t_ || c_.size() > 1) return *this;
  return c_.empty() ? Fe() : c_[0].simplify();
}

Fe Fe::operator-() const {
  Fe r = *this;
  if (!t_) {
    r.q_ = -q_;
  } else {
    for (auto& x : r.c_) x = -x;
  }
  return r;
}

Fe& Fe::operator+=(const Fe& o) {
  TowerPtr t = join(t_, o.t_);
  if (!t) {
    q_ += o.q_;
    return *this;
  }
  *this = lift(t);
  Fe b = o.lift(t);
  if (c_.size() < b.c_.size()) c_.resize(b.c_.size(), Fe().lift(t->parent()));
  for (size_t i = 0; i < b.c_.size(); ++i) c_[i] += b.c_[i];
  trim();
  return *this;
}

Fe& Fe::operator-=(const Fe& o) { return *this += -o; }

Fe& Fe::operator*=(const Fe& o) {
  TowerPtr t = join(t_, o.t_);
  if (!t) {
    q_ *= o.q_;
    return *this;
  }
  Fe a = lift(t);
  Fe b = o.lift(t);
  if (a.c_.empty() || b.c_.empty()) {
    c_.clear();
    t_ = t;
    return *this;
  }
  std::vector<Fe> r(a.c_.size() + b.c_.size() - 1, Fe().lift(t->parent()));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  const auto& m = t->minpoly().c;
  const int n = t->degree();
  for (int i = static_cast<int>(r.size()) - 1; i >= n; --i) {
    if (r[i].is_zero()) continue;
    Fe k = r[i];
    for (int j = 0; j <= n; ++j) r[i - n + j] -= k * m[j];
  }
  if (static_cast<int>(r.size()) > n) r.resize(n);
  t_ = t;
  c_ = std::move(r);
  trim();
  return *this;
}

Fe& Fe::operator/=(const Fe& o) { return *this *= o.inverse(); }

bool operator==(const Fe& a, const Fe& b) {
  TowerPtr t = join(a.t_, b.t_);
  if (!t) return a.q_ == b.q_;
  Fe x = a.lift(t), y = b.lift(t);
  if (x.c_.size() != y.c_.size()) return false;
  for (size_t i = 0; i < x.c_.size(); ++i)
    if (x.c_[i] != y.c_[i]) return false;
  return true;
}

Fe Fe::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  if (!t_) return Fe(mpq_class(1) / q_);
  Poly a(c_);
  Xgcd e = xgcd(a, t_->minpoly());
  if (e.g.deg() != 0) throw std::logic_error("inverse: minpoly not irreducible");
  return from_coords(t_, (e.s % t_->minpoly()).c);
}

Fe Fe::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Fe r(1), b = *this;
  while (e > 0) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

Fe Fe::norm_to_parent() const {
  if (!t_) return *this;
  return resultant(t_->minpoly(), Poly(c_));
}

Fe Fe::norm_to_q() const {
  Fe r = *this;
  while (r.t_) r = r.norm_to_parent();
  return r;
}

std::string Fe::str() const {
  if (!t_) return q_.get_str();
  if (c_.empty()) return "0";
  Poly p(c_);
  if (p.deg() == 0) return c_[0].str();
  return "(" + p.str(t_->name()) + ")";
}

TowerPtr Tower::extend(const TowerPtr& base, const Poly& minpoly,
                       std::string name) {
  if (minpoly.deg() < 2) throw std::logic_error("extension degree must be >= 2");
  if (!minpoly.lc().is_one()) throw std::logic_error("minpoly must be monic");
  std::shared_ptr<Tower> t(new Tower());
  t->parent_ = base;
  t->depth_ = base ? base->depth() + 1 : 1;
  t->minpoly_ = std::make_shared<Poly>(minpoly.lift(base));
  t->name_ = name.empty() ? "w" + std::to_string(t->depth_) : std::move(name);
  return t;
}

int Tower::degree() const { return minpoly_->deg(); }

long Tower::absolute_degree() const {
  long d = 1;
  for (const Tower* p = this; p != nullptr; p = p->parent().get()) d *= p->degree();
  return d;
}

std::string Tower::describe() const {
  std::string s = parent_ ? parent_->describe() : "Q";
  return s + "(" + name_ + ": " + minpoly_->str(name_) + " = 0)";
}

}  // namespace nmf
