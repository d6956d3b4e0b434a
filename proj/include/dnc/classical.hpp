#pragma once
#include "dnc/center.hpp"
#include "dnc/groebner.hpp"

namespace dnc {

// Classical oracle: everything here is elimination-based commutative algebra
// on polynomial data only; it reads no presentation built by the dg side.

struct ClassicalReesIdeal {
  ContextPtr ring;  // ambient [+ t^-1 when extended] + X variables
  std::vector<Polynomial> basis;  // reduced
  bool extended = false;
};

// kernel of Q[z][X] -> Q[z][t], X_i -> f_i * t; the extended version adjoins
// t^-1 and computes the kernel of Q[z][t^-1][X] -> Q[z][t, t^-1]
ClassicalReesIdeal classical_rees(const CenterPresentation& center, bool extended);

// chart j of the classical blow-up: dehomogenization of the Rees ideal at
// X_j, in the chart ring supplied by the caller (variables y_i, i != j)
std::vector<Polynomial> classical_blowup_chart(const CenterPresentation& center, int j,
                                               const ContextPtr& chart_ring,
                                               const std::vector<std::string>& y_names);

// associated graded presentation: Rees ideal + (f_1..f_n)
ClassicalReesIdeal classical_normal_cone(const CenterPresentation& center);

}  // namespace dnc
