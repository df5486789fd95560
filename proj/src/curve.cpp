#include "bcoh/curve.hpp"

#include "bcoh/error.hpp"

namespace bcoh::curve {

CurveRing build_curve_ring(const action::ActionModel& model) {
  action::ActionModel valid = action::validate(model);
  const auto r = static_cast<std::size_t>(valid.n) + 1;

  std::vector<action::CurveComponent> components;
  for (std::size_t j = 1; j <= r; ++j) components.push_back(action::component_parametrization(valid, j));

  std::vector<Tuple> generators{Tuple::ones(r, 1)};
  const std::vector<int> degrees = action::big_cell_degrees(valid);
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    Tuple g;
    g.degree = degrees[i];
    for (const auto& c : components) g.coeffs.push_back(c.coefficients[i]);
    generators.push_back(std::move(g));
  }

  CurveRing cr{std::move(valid), std::move(components), GradedSubalgebra(r, std::move(generators))};
  if (cr.algebra.dimension(cr.default_degree_bound()) != r)
    throw InvariantViolation("curve ring does not reach rank r within the degree bound");
  return cr;
}

std::vector<long> betti_numbers(const CurveRing& cr, int max_degree) {
  std::vector<long> dims = quotient_by_v_dims(cr.algebra, max_degree);
  while (dims.size() > 1 && dims.back() == 0) dims.pop_back();
  return dims;
}

GradedSubalgebra restrict(const CurveRing& cr, const ComponentSet& s) {
  return restrict_to(cr.algebra, s);
}

std::vector<std::size_t> ideal_hilbert(const CurveRing& cr, const ComponentSet& s, int max_degree) {
  std::vector<std::size_t> dims;
  for (int d = 0; d <= max_degree; ++d) dims.push_back(kernel_basis(cr.algebra, s, d).size());
  return dims;
}

}  // namespace bcoh::curve
