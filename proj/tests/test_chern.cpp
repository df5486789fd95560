#include <random>

#include "bcoh/chern.hpp"
#include "bcoh/error.hpp"
#include "bcoh/linalg.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace bcoh;
using namespace bcoh::chern;

namespace {

// Irreducible sl2-representation of dimension m + 1 restricted to Lie(B).
MatrixPair sl2_irrep(std::size_t m) {
  MatrixPair p{Matrix<Rational>(m + 1, m + 1), Matrix<Rational>(m + 1, m + 1)};
  for (std::size_t i = 0; i <= m; ++i) {
    p.rho_w(i, i) = Rational(static_cast<long>(m) - 2 * static_cast<long>(i));
    if (i < m) p.rho_v(i, i + 1) = Rational(static_cast<long>(i + 1));
  }
  return p;
}

MatrixPair conjugate(const MatrixPair& p, const Matrix<Rational>& q) {
  const Matrix<Rational> qi = inverse(q);
  return {q * p.rho_w * qi, q * p.rho_v * qi};
}

Weights random_weights(std::mt19937_64& rng, std::size_t n) {
  Weights w;
  for (std::size_t i = 0; i < n; ++i) w.push_back(static_cast<long>(rng() % 9) - 4);
  return w;
}

}  // namespace

TEST_CASE("characteristic polynomial and exterior traces against minors") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + rng() % 5;
    Matrix<Rational> m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = oracle::random_rational(rng, 4);
    const auto poly = characteristic_polynomial(m);
    REQUIRE(poly.size() == n + 1);
    CHECK(poly[0] == Rational(1));
    for (std::size_t k = 0; k <= n; ++k) CHECK(exterior_trace(m, k) == oracle::principal_minor_sum(m, k));
    // det(tI - M) at t = 0 is (-1)^n det M.
    CHECK(poly[n] == (n % 2 == 0 ? Rational(1) : Rational(-1)) * oracle::determinant(m));
  }
  CHECK_THROWS_AS(exterior_trace(Matrix<Rational>::identity(2), 3), ValidationError);
}

TEST_CASE("elementary symmetric functions") {
  const std::vector<Rational> x{1, 2, 3};
  CHECK(elementary_symmetric(x, 0) == Rational(1));
  CHECK(elementary_symmetric(x, 1) == Rational(6));
  CHECK(elementary_symmetric(x, 2) == Rational(11));
  CHECK(elementary_symmetric(x, 3) == Rational(6));
  CHECK(elementary_symmetric(x, 4) == Rational(0));
}

TEST_CASE("tangent bundle of P^2 (frozen)") {
  const auto model = action::principal_model(2);
  const curve::CurveRing cr = curve::build_curve_ring(model);
  const BundleData t = tangent_bundle(model);
  CHECK(t.rank() == 2);
  CHECK(std::get<Weights>(t.fibres().at(1)) == Weights{2, 4});
  CHECK(std::get<Weights>(t.fibres().at(2)) == Weights{-2, 2});
  CHECK(chern_tuple(t, 1, cr) == Tuple(1, {6, 0, -6}));
  CHECK(chern_tuple(t, 2, cr) == Tuple(2, {8, -4, 8}));
  CHECK(chern_tuple(t, 0, cr) == Tuple(0, {1, 1, 1}));
  CHECK(chern_membership(t, 1, cr));
  CHECK(chern_membership(t, 2, cr));
  CHECK_THROWS_AS(chern_tuple(t, 3, cr), ValidationError);
}

TEST_CASE("tangent bundle Chern classes of P^n lie in the curve ring") {
  for (int n = 1; n <= 4; ++n) {
    const auto model = action::principal_model(n);
    const curve::CurveRing cr = curve::build_curve_ring(model);
    const BundleData t = tangent_bundle(model);
    for (std::size_t k = 1; k <= static_cast<std::size_t>(n); ++k) CHECK(chern_membership(t, k, cr));
  }
}

TEST_CASE("matrix fibres and weight fibres agree") {
  const curve::CurveRing cr = curve::build_curve_ring(action::principal_model(2));
  std::map<std::size_t, Fibre> pairs, weights;
  for (std::size_t j = 1; j <= 3; ++j) {
    pairs.emplace(j, sl2_irrep(2));
    weights.emplace(j, Weights{2, 0, -2});
  }
  const BundleData a(3, pairs), b(3, weights);
  for (std::size_t k = 0; k <= 3; ++k) CHECK(chern_tuple(a, k, cr) == chern_tuple(b, k, cr));
}

TEST_CASE("Chern tuples are invariant under conjugating the fibres (property)") {
  std::mt19937_64 rng(43);
  const curve::CurveRing cr = curve::build_curve_ring(action::principal_model(3));
  for (int trial = 0; trial < 15; ++trial) {
    std::map<std::size_t, Fibre> plain, moved;
    const std::size_t m = 1 + rng() % 3;
    for (std::size_t j = 1; j <= 4; ++j) {
      const MatrixPair p = sl2_irrep(m);
      plain.emplace(j, p);
      moved.emplace(j, conjugate(p, oracle::random_invertible(rng, m + 1)));
    }
    const BundleData a(m + 1, plain), b(m + 1, moved);
    for (std::size_t k = 0; k <= m + 1; ++k) CHECK(chern_tuple(a, k, cr) == chern_tuple(b, k, cr));
  }
}

TEST_CASE("Whitney sum: c(E + F) = c(E) c(F) (property)") {
  std::mt19937_64 rng(47);
  const curve::CurveRing cr = curve::build_curve_ring(action::principal_model(2));
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t re = 1 + rng() % 3, rf = 1 + rng() % 2;
    std::map<std::size_t, Fibre> fe, ff;
    for (std::size_t j = 1; j <= 3; ++j) {
      fe.emplace(j, random_weights(rng, re));
      if (trial % 2 == 0)
        ff.emplace(j, random_weights(rng, rf));
      else
        ff.emplace(j, conjugate(sl2_irrep(rf - 1), oracle::random_invertible(rng, rf)));
    }
    const BundleData e(re, fe), f(rf, ff);
    const BundleData sum = direct_sum(e, f);
    CHECK(sum.rank() == re + rf);
    for (std::size_t k = 0; k <= re + rf; ++k) {
      Tuple expected = Tuple::zero(3, static_cast<int>(k));
      for (std::size_t i = 0; i <= k; ++i)
        if (i <= re && k - i <= rf) expected = expected + chern_tuple(e, i, cr) * chern_tuple(f, k - i, cr);
      CHECK(chern_tuple(sum, k, cr) == expected);
    }
  }
}

TEST_CASE("bundle validation") {
  MatrixPair bad = sl2_irrep(1);
  bad.rho_v(0, 1) = Rational(0);
  bad.rho_v(1, 0) = Rational(1);
  CHECK_THROWS_AS(BundleData(2, {{1, bad}}), ValidationError);
  MatrixPair not_nilpotent{Matrix<Rational>(1, 1), Matrix<Rational>::identity(1)};
  CHECK_THROWS_AS(BundleData(1, {{1, not_nilpotent}}), ValidationError);
  CHECK_THROWS_AS(BundleData(2, {{1, Weights{1}}}), ValidationError);
  CHECK_THROWS_AS(BundleData(1, {}), ValidationError);
  CHECK_THROWS_AS(BundleData(1, {{0, Weights{1}}}), ValidationError);
  const BundleData one(1, {{1, Weights{1}}}), two(1, {{2, Weights{1}}});
  CHECK_THROWS_AS(direct_sum(one, two), ValidationError);
  const curve::CurveRing cr = curve::build_curve_ring(action::principal_model(1));
  CHECK_THROWS_AS(chern_tuple(BundleData(1, {{3, Weights{1}}}), 1, cr), ValidationError);
}

TEST_CASE("subalgebra verdicts") {
  const gkm::Graph g({1, 2, 3}, {{1, 2, 1}, {1, 3, 1}});
  const SubalgebraVerdict v =
      chern_subalgebra_verdict({Tuple(1, {1, -1, -1}), Tuple(1, {1, 1, 1})}, g, 6);
  CHECK(v.status == SubalgebraStatus::ProperSubalgebra);
  REQUIRE(v.witness);
  CHECK(*v.witness == 1);
  CHECK(v.subalgebra_hilbert[1] == 2);
  CHECK(v.gkm_hilbert[1] == 3);
  CHECK(status_name(v.status) == "ProperSubalgebra");

  const SubalgebraVerdict all =
      chern_subalgebra_verdict({Tuple(1, {1, 0, 0}), Tuple(1, {0, 1, 0})}, g, 4);
  CHECK(all.status == SubalgebraStatus::Generates);
  CHECK(chern_subalgebra_verdict({Tuple(1, {1, 0, 0}), Tuple(1, {0, 1, 0})}, g, 0).status ==
        SubalgebraStatus::InconclusiveAtBound);
  CHECK_THROWS_AS(chern_subalgebra_verdict({Tuple(0, {1, 0, 0})}, g, 2), ValidationError);
  CHECK_THROWS_AS(chern_subalgebra_verdict({Tuple(1, {1, 0})}, g, 2), ValidationError);
  CHECK_THROWS_AS(chern_subalgebra_verdict({}, g, -1), ValidationError);
}
