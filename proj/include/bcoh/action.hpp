#pragma once

#include <cstddef>
#include <vector>

#include "bcoh/matrix.hpp"
#include "bcoh/poly.hpp"
#include "bcoh/rational.hpp"

namespace bcoh::action {

// A B-action on P^n = P(Q^{n+1}): the torus acts through h = diag(h_weights)
// and the unipotent radical through exp(v e). Regular means [h, e] = 2e and
// e is a single nilpotent Jordan block.
struct ActionModel {
  int n = 0;
  std::vector<long> h_weights;
  Matrix<Rational> e;
  // coordinate_order[i] = index in the caller's coordinates of normalised
  // coordinate i. Identity until validate() reorders.
  std::vector<std::size_t> coordinate_order;

  friend bool operator==(const ActionModel&, const ActionModel&) = default;
};

// h = (n, n-2, ..., -n), e = standard Jordan block (ones above the diagonal).
ActionModel principal_model(int n);

// Checks regularity and reorders coordinates so h_weights strictly
// decrease (coordinate point 1 is then o). Idempotent. Throws
// ValidationError naming the failed condition.
ActionModel validate(const ActionModel& model);

// exp(s e) as the finite sum over e^k s^k / k!; T may be Rational, Poly, ...
template <class T>
Matrix<T> exp_phi(const ActionModel& model, const T& s) {
  const std::size_t dim = model.e.rows();
  Matrix<T> e = Matrix<T>::template from<Rational>(model.e);
  Matrix<T> result = Matrix<T>::identity(dim);
  Matrix<T> term = Matrix<T>::identity(dim);
  for (std::size_t k = 1; k < dim; ++k) {
    term = (T(Rational(1L, static_cast<long>(k))) * s) * (term * e);
    if (term.is_zero()) break;
    result += term;
  }
  return result;
}

using ProjectivePoint = std::vector<Rational>;

// Coordinate points zeta_1 = o, ..., zeta_{n+1}, by decreasing h-weight.
std::vector<ProjectivePoint> fixed_points(const ActionModel& model);

// d_i = (h_0 - h_i) / 2, i = 1..n: degrees of the big-cell coordinates.
std::vector<int> big_cell_degrees(const ActionModel& model);

// Component j of the curve, the orbit closure through zeta_j, written in
// the big-cell chart around o. chart_coords[i - 1] = coefficients[i - 1] *
// v^{degrees[i - 1]} is the i-th chart coordinate.
struct CurveComponent {
  std::size_t index = 0;  // 1-based
  std::vector<Poly> chart_coords;
  std::vector<int> degrees;
  std::vector<Rational> coefficients;
};

// phi(1/v) zeta_j, denominators cleared, divided by the o-coordinate.
CurveComponent component_parametrization(const ActionModel& model, std::size_t j);

// Homogeneous point [1, u_1(v0), ..., u_n(v0)] of component j.
ProjectivePoint component_point(const CurveComponent& c, const Rational& v0);

// True iff phi(-1/v0) maps the point of component j at v0 exactly onto zeta_j.
bool check_box(const ActionModel& model, std::size_t j, const Rational& v0);

// SL2 identities behind the trace formula for Chern classes.
Matrix<Rational> mat_id_lhs(const Rational& a, const Rational& v);
Matrix<Rational> mat_id_rhs(const Rational& a, const Rational& v);
// phi(u) W phi(-u) with W = diag(1, -1).
Matrix<Rational> conjugated_w(const Rational& u);
// s(v) = v W - 2 V with V = [[0, 1], [0, 0]].
Matrix<Poly> section_s();

struct LimitSample {
  Rational epsilon;
  int sign = 1;                 // a = sign * (1 + epsilon v)
  Matrix<Rational> limit;       // of the conjugated torus element as v -> 0
  bool unipotent_up_to_sign = false;
  bool converges = false;       // monotone approach along v = 2^-k
};

struct Sl2Report {
  bool mat_id = false;
  bool conjugation = false;        // phi(u) W phi(-u) = W - 2u V
  bool section = false;            // v Ad(phi(1/v)) W = s(v)
  bool section_at_zero_in_lie_u = false;
  std::vector<LimitSample> limits;
};

// Runs every check; throws InvariantViolation if any exact identity fails.
Sl2Report sl2_family_checks();

}  // namespace bcoh::action
