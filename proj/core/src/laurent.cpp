#include "nmf/laurent.hpp"

namespace nmf {

Laurent Laurent::L(int e, long k) {
  Laurent r;
  if (k != 0) r.c[e] = k;
  return r;
}

long Laurent::at(int e) const {
  auto it = c.find(e);
  return it == c.end() ? 0 : it->second;
}

long Laurent::eval_at_one() const {
  long s = 0;
  for (const auto& [e, k] : c) s += k;
  return s;
}

Laurent Laurent::operator-() const {
  Laurent r = *this;
  for (auto& [e, k] : r.c) k = -k;
  return r;
}

Laurent& Laurent::operator+=(const Laurent& o) {
  for (const auto& [e, k] : o.c) {
    long& v = c[e];
    v += k;
    if (v == 0) c.erase(e);
  }
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) { return *this += -o; }

Laurent operator*(const Laurent& a, const Laurent& b) {
  Laurent r;
  for (const auto& [e1, k1] : a.c)
    for (const auto& [e2, k2] : b.c) r += Laurent::L(e1 + e2, k1 * k2);
  return r;
}

std::string Laurent::str() const {
  if (c.empty()) return "0";
  std::string s;
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    auto [e, k] = *it;
    const bool neg = k < 0;
    const long a = neg ? -k : k;
    if (s.empty())
      s += neg ? "-" : "";
    else
      s += neg ? " - " : " + ";
    if (e == 0) {
      s += std::to_string(a);
      continue;
    }
    if (a != 1) s += std::to_string(a) + "*";
    s += "L";
    if (e != 1) s += "^" + (e < 0 ? "(" + std::to_string(e) + ")" : std::to_string(e));
  }
  return s;
}

}  // namespace nmf
