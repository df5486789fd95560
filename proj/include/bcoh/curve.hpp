#pragma once

#include <vector>

#include "bcoh/action.hpp"
#include "bcoh/graded.hpp"

namespace bcoh::curve {

// Coordinate ring of the affine curve in X_o x C whose components are the
// orbit closures through the torus-fixed points. Realised inside
// (+)_{j=1..r} Q[v] by restricting functions to components: it is
// generated by v = (1, ..., 1)@1 and, for each chart coordinate u_i, the
// tuple of its coefficients on the components, in degree d_i.
struct CurveRing {
  action::ActionModel model;
  std::vector<action::CurveComponent> components;
  GradedSubalgebra algebra;

  [[nodiscard]] std::size_t r() const { return components.size(); }
  // 2 * r * max d_i.
  [[nodiscard]] int default_degree_bound() const { return algebra.default_degree_bound(); }
};

// Throws InvariantViolation if the ring does not reach rank r within the
// default degree bound.
CurveRing build_curve_ring(const action::ActionModel& model);

// Betti numbers b_0, b_2, b_4, ... from dim of the pieces of ring / (v),
// truncated after the last nonzero entry.
std::vector<long> betti_numbers(const CurveRing& cr, int max_degree);

// Coordinate ring of the sub-curve over the fixed points s.
GradedSubalgebra restrict(const CurveRing& cr, const ComponentSet& s);

// dim I_d for d = 0..D, I the ideal of the sub-curve over s.
std::vector<std::size_t> ideal_hilbert(const CurveRing& cr, const ComponentSet& s, int max_degree);

}  // namespace bcoh::curve
