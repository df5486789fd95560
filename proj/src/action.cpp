#include "bcoh/action.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "bcoh/error.hpp"
#include "bcoh/laurent.hpp"
#include "bcoh/linalg.hpp"

namespace bcoh::action {
namespace {

std::vector<std::size_t> identity_order(std::size_t dim) {
  std::vector<std::size_t> order(dim);
  std::iota(order.begin(), order.end(), 0);
  return order;
}

void require(bool ok, const char* what) {
  if (!ok) throw InvariantViolation(std::string("SL2 identity failed: ") + what);
}

template <class T>
Matrix<T> phi_2x2(const T& u) {
  return Matrix<T>{{T(1), u}, {T(0), T(1)}};
}

template <class T>
Matrix<T> w_2x2() {
  return Matrix<T>{{T(1), T(0)}, {T(0), T(-1)}};
}

template <class T>
Matrix<T> v_2x2() {
  return Matrix<T>{{T(0), T(1)}, {T(0), T(0)}};
}

}  // namespace

ActionModel principal_model(int n) {
  if (n < 1) throw ValidationError("P^n needs n >= 1");
  const auto dim = static_cast<std::size_t>(n) + 1;
  ActionModel m;
  m.n = n;
  for (int i = 0; i <= n; ++i) m.h_weights.push_back(n - 2L * i);
  m.e = Matrix<Rational>(dim, dim);
  for (std::size_t i = 0; i + 1 < dim; ++i) m.e(i, i + 1) = Rational(1);
  m.coordinate_order = identity_order(dim);
  return m;
}

ActionModel validate(const ActionModel& model) {
  if (model.n < 1) throw ValidationError("P^n needs n >= 1");
  const auto dim = static_cast<std::size_t>(model.n) + 1;
  if (model.h_weights.size() != dim)
    throw ValidationError("h_weights must have n+1 = " + std::to_string(dim) + " entries");
  if (model.e.rows() != dim || model.e.cols() != dim)
    throw ValidationError("e_matrix must be (n+1)x(n+1)");
  std::vector<std::size_t> caller_order =
      model.coordinate_order.empty() ? identity_order(dim) : model.coordinate_order;
  if (caller_order.size() != dim) throw ValidationError("coordinate_order has wrong length");

  std::vector<long> sorted = model.h_weights;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw ValidationError("repeated h-weights: torus-fixed points are not isolated");

  std::vector<std::size_t> perm = identity_order(dim);
  std::stable_sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    return model.h_weights[a] > model.h_weights[b];
  });

  ActionModel out;
  out.n = model.n;
  out.e = Matrix<Rational>(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    out.h_weights.push_back(model.h_weights[perm[i]]);
    out.coordinate_order.push_back(caller_order[perm[i]]);
    for (std::size_t j = 0; j < dim; ++j) out.e(i, j) = model.e(perm[i], perm[j]);
  }

  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      if (out.e(i, j).is_zero()) continue;
      if (out.h_weights[i] - out.h_weights[j] != 2)
        throw ValidationError("commutation [h,e] = 2e fails at entry (" + std::to_string(i + 1) +
                              "," + std::to_string(j + 1) + ")");
    }
  const std::size_t kernel = dim - rank(out.e);
  if (kernel != 1)
    throw ValidationError("not regular: dim ker e = " + std::to_string(kernel) +
                          " (e must be a single Jordan block)");
  return out;
}

std::vector<ProjectivePoint> fixed_points(const ActionModel& model) {
  const auto dim = static_cast<std::size_t>(model.n) + 1;
  std::vector<ProjectivePoint> out;
  for (std::size_t j = 0; j < dim; ++j) {
    ProjectivePoint p(dim, Rational(0));
    p[j] = Rational(1);
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<int> big_cell_degrees(const ActionModel& model) {
  std::vector<int> out;
  for (std::size_t i = 1; i < model.h_weights.size(); ++i) {
    long diff = model.h_weights[0] - model.h_weights[i];
    if (diff <= 0 || diff % 2 != 0)
      throw InvariantViolation("h-weight differences must be positive and even");
    out.push_back(static_cast<int>(diff / 2));
  }
  return out;
}

CurveComponent component_parametrization(const ActionModel& model, std::size_t j) {
  const auto dim = static_cast<std::size_t>(model.n) + 1;
  if (j < 1 || j > dim) throw ValidationError("component index out of range");
  const std::vector<int> degrees = big_cell_degrees(model);

  // Column j of exp(w e) with w = 1/v, then multiplied by v^top.
  Matrix<Poly> m = exp_phi(model, Poly::variable());
  std::vector<Poly> column = m.column(j - 1);
  int top = 0;
  for (const auto& p : column) top = std::max(top, p.degree());
  std::vector<Poly> homogeneous;
  for (const auto& p : column) homogeneous.push_back(p.reversed(top));

  const Poly& o_coord = homogeneous[0];
  if (o_coord.is_zero() || !o_coord.is_monomial())
    throw InvariantViolation("component does not meet the big cell for v != 0");

  CurveComponent out;
  out.index = j;
  out.degrees = degrees;
  for (std::size_t i = 1; i < dim; ++i) {
    auto [q, rem] = homogeneous[i].divmod(o_coord);
    if (!rem.is_zero() || !q.is_monomial())
      throw InvariantViolation("chart coordinate is not a monomial in v");
    if (!q.is_zero() && q.degree() != degrees[i - 1])
      throw InvariantViolation("chart coordinate has the wrong principal degree");
    out.coefficients.push_back(q.coeff(degrees[i - 1]));
    out.chart_coords.push_back(std::move(q));
  }
  return out;
}

ProjectivePoint component_point(const CurveComponent& c, const Rational& v0) {
  ProjectivePoint p{Rational(1)};
  for (const auto& u : c.chart_coords) p.push_back(u.eval(v0));
  return p;
}

bool check_box(const ActionModel& model, std::size_t j, const Rational& v0) {
  if (v0.is_zero()) throw ValidationError("check_box needs v0 != 0");
  CurveComponent c = component_parametrization(model, j);
  ProjectivePoint y = exp_phi(model, -v0.inverse()) * component_point(c, v0);
  std::size_t nonzero = 0, where = 0;
  for (std::size_t i = 0; i < y.size(); ++i)
    if (!y[i].is_zero()) {
      ++nonzero;
      where = i;
    }
  return nonzero == 1 && where == j - 1;
}

Matrix<Rational> mat_id_lhs(const Rational& a, const Rational& v) {
  Matrix<Rational> torus{{a, Rational(0)}, {Rational(0), a.inverse()}};
  return phi_2x2(v.inverse()) * torus * phi_2x2(-v.inverse());
}

Matrix<Rational> mat_id_rhs(const Rational& a, const Rational& v) {
  return Matrix<Rational>{{a, (Rational(1) - a * a) / (a * v)}, {Rational(0), a.inverse()}};
}

Matrix<Rational> conjugated_w(const Rational& u) {
  return phi_2x2(u) * w_2x2<Rational>() * phi_2x2(-u);
}

Matrix<Poly> section_s() {
  return Poly::variable() * w_2x2<Poly>() - Poly(2) * v_2x2<Poly>();
}

Sl2Report sl2_family_checks() {
  Sl2Report report;

  {
    const Laurent2 v_inv = Laurent2::monomial(Rational(1), 0, -1);
    const Laurent2 a = Laurent2::monomial(Rational(1), 1, 0);
    const Laurent2 a_inv = Laurent2::monomial(Rational(1), -1, 0);
    Matrix<Laurent2> torus{{a, Laurent2(0)}, {Laurent2(0), a_inv}};
    Matrix<Laurent2> lhs = phi_2x2(v_inv) * torus * phi_2x2(Laurent2(0) - v_inv);
    Laurent2 corner = (Laurent2(1) - a * a) * Laurent2::monomial(Rational(1), -1, -1);
    Matrix<Laurent2> rhs{{a, corner}, {Laurent2(0), a_inv}};
    report.mat_id = lhs == rhs;
    require(report.mat_id, "conjugated torus element");
  }

  {
    const Poly u = Poly::variable();
    Matrix<Poly> lhs = phi_2x2(u) * w_2x2<Poly>() * phi_2x2(-u);
    Matrix<Poly> rhs = w_2x2<Poly>() - (Poly(2) * u) * v_2x2<Poly>();
    report.conjugation = lhs == rhs;
    require(report.conjugation, "phi(u) W phi(-u) = W - 2u V");
  }

  {
    const Laurent2 v = Laurent2::monomial(Rational(1), 0, 1);
    const Laurent2 v_inv = Laurent2::monomial(Rational(1), 0, -1);
    Matrix<Laurent2> ad = phi_2x2(v_inv) * w_2x2<Laurent2>() * phi_2x2(Laurent2(0) - v_inv);
    Matrix<Laurent2> lhs = v * ad;
    Matrix<Laurent2> rhs = v * w_2x2<Laurent2>() - Laurent2(2) * v_2x2<Laurent2>();
    report.section = lhs == rhs;
    require(report.section, "v Ad(phi(1/v)) W = v W - 2 V");
  }

  {
    Matrix<Poly> s = section_s();
    Matrix<Rational> at_zero(2, 2);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) at_zero(i, j) = s(i, j).eval(Rational(0));
    const bool strictly_upper = at_zero(0, 0).is_zero() && at_zero(1, 0).is_zero() &&
                                at_zero(1, 1).is_zero() && !at_zero(0, 1).is_zero();
    report.section_at_zero_in_lie_u = strictly_upper && at_zero == Rational(-2) * v_2x2<Rational>();
    require(report.section_at_zero_in_lie_u, "s(0) = -2V lies in Lie(U)");
  }

  // a = sign (1 + eps v): the corner (1 - a^2) / (a v) stays finite as v -> 0
  // and the limit is +-(unipotent).
  const Rational epsilons[] = {Rational(1), Rational(-1), Rational(1, 2), Rational(3),
                               Rational(-2, 5)};
  for (const Rational& eps : epsilons)
    for (int sign : {1, -1}) {
      LimitSample sample;
      sample.epsilon = eps;
      sample.sign = sign;
      const Poly a = Poly(Rational(sign)) * (Poly(1) + Poly::monomial(eps, 1));
      auto [q, rem] = (Poly(1) - a * a).divmod(Poly::variable());
      require(rem.is_zero(), "a(0)^2 = 1 along the sample sequence");
      const Rational a0 = a.eval(Rational(0));
      const Rational corner0 = q.eval(Rational(0)) / a0;
      sample.limit = Matrix<Rational>{{a0, corner0}, {Rational(0), a0.inverse()}};
      sample.unipotent_up_to_sign = a0 == Rational(sign) && a0.inverse() == Rational(sign);
      require(sample.unipotent_up_to_sign, "limit lies in U or -U");

      sample.converges = true;
      Rational previous(-1);
      for (unsigned k = 1; k <= 10; ++k) {
        const Rational vk = Rational(1L, 1L << k);
        Matrix<Rational> at = mat_id_rhs(a.eval(vk), vk) - sample.limit;
        Rational dist(0);
        for (std::size_t i = 0; i < 2; ++i)
          for (std::size_t j = 0; j < 2; ++j) dist += at(i, j).abs();
        if (previous.sign() >= 0 && !(dist < previous)) sample.converges = false;
        previous = dist;
      }
      require(sample.converges, "sample sequence approaches its limit");
      report.limits.push_back(std::move(sample));
    }
  return report;
}

}  // namespace bcoh::action
