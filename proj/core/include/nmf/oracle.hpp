#pragma once

#include <cstdint>
#include <vector>

#include "nmf/engine.hpp"

namespace nmf {

constexpr long kInfinite = -1;

// Local intersection number of F = 0 and G = 0 at (x0, y0); kInfinite on a
// common component through the point.
long intersection_multiplicity(const BiPoly& F, const BiPoly& G, const Fe& x0 = Fe(),
                               const Fe& y0 = Fe());
long milnor_number(const BiPoly& F, const Fe& x0 = Fe(), const Fe& y0 = Fe());

struct ChiViaMu {
  long mu_generic = 0;
  long mu_value = 0;
  long chi = 0;  // mu_generic - mu_value
  std::vector<Fe> probes;
  std::vector<long> probe_mus;
};

class OracleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Random rational probe values, deterministic in the seed.
std::vector<Fe> random_probes(int n, std::uint64_t seed);

// Generic Milnor number of the pencil P - cQ: min over the probes, which
// must all agree.
long generic_mu(const BiPoly& P, const BiPoly& Q, const Fe& x0, const Fe& y0,
                const std::vector<Fe>& probes, std::vector<long>* mus = nullptr);
ChiViaMu chi_via_mu(const BiPoly& P, const BiPoly& Q, const Fe& x0, const Fe& y0,
                    const Value& v, int probes = 3, std::uint64_t seed = 1);

// Milnor number from Newton data at the origin:
//   mu = 1 + 2S - [b_h = 0] a_h - [a_v = 0] b_v - sum over transforms of chi.
struct NewtonMu {
  long twice_area = 0;  // sum over segments of (distinct roots) * m(p, q)
  long axis_h = 0;      // [b_h = 0] a_h
  long axis_v = 0;      // [a_v = 0] b_v
  long children = 0;    // sum of the Euler characteristics of the transforms
  long mu = 0;
};
NewtonMu mu_via_newton(const BiPoly& F);
// Euler characteristic of the Milnor fibre of F at the origin.
long milnor_fiber_chi(const BiPoly& F, int budget = 0);

}  // namespace nmf
