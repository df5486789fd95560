#include <random>

#include "bcoh/curve.hpp"
#include "bcoh/error.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace bcoh;
using namespace bcoh::curve;

namespace {

std::vector<ComponentSet> proper_subsets(std::size_t r) {
  std::vector<ComponentSet> out;
  for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << r); ++mask) {
    ComponentSet s;
    for (std::size_t i = 0; i < r; ++i)
      if (mask & (std::size_t{1} << i)) s.push_back(i + 1);
    out.push_back(s);
  }
  return out;
}

}  // namespace

TEST_CASE("P^2 curve ring (frozen)") {
  const CurveRing cr = build_curve_ring(action::principal_model(2));
  CHECK(cr.r() == 3);
  const auto& gens = cr.algebra.generators();
  REQUIRE(gens.size() == 3);
  CHECK(gens[0] == Tuple(1, {1, 1, 1}));
  CHECK(gens[1] == Tuple(1, {0, 1, 2}));
  CHECK(gens[2] == Tuple(2, {0, 0, 2}));
  CHECK(cr.default_degree_bound() == 12);
  CHECK(hilbert_function(cr.algebra, 5) == std::vector<std::size_t>{1, 2, 3, 3, 3, 3});
  CHECK(betti_numbers(cr, cr.default_degree_bound()) == std::vector<long>{1, 1, 1});
}

TEST_CASE("Betti numbers of P^n are all ones") {
  for (int n = 1; n <= 6; ++n) {
    CAPTURE(n);
    const CurveRing cr = build_curve_ring(action::principal_model(n));
    CHECK(betti_numbers(cr, cr.default_degree_bound()) ==
          std::vector<long>(static_cast<std::size_t>(n + 1), 1));
  }
}

TEST_CASE("P^1 curve ring") {
  const CurveRing cr = build_curve_ring(action::principal_model(1));
  CHECK(cr.algebra.generators()[1] == Tuple(1, {0, 1}));
  CHECK(hilbert_function(cr.algebra, 2) == std::vector<std::size_t>{1, 2, 2});
}

TEST_CASE("Hilbert function does not depend on the scale of e") {
  for (int n = 1; n <= 4; ++n) {
    action::ActionModel base = action::principal_model(n);
    action::ActionModel scaled = base;
    scaled.e = Rational(-5, 2) * base.e;
    const CurveRing a = build_curve_ring(base), b = build_curve_ring(scaled);
    const int bound = a.default_degree_bound();
    CHECK(hilbert_function(a.algebra, bound) == hilbert_function(b.algebra, bound));
    CHECK(betti_numbers(a, bound) == betti_numbers(b, bound));
  }
}

TEST_CASE("restriction to sub-curves of P^2") {
  const CurveRing cr = build_curve_ring(action::principal_model(2));
  CHECK(hilbert_function(restrict(cr, {1, 2}), 3) == std::vector<std::size_t>{1, 2, 2, 2});
  CHECK(hilbert_function(restrict(cr, {1}), 2) == std::vector<std::size_t>{1, 1, 1});
  CHECK(hilbert_function(restrict(cr, {2, 3}), 2) == std::vector<std::size_t>{1, 2, 2});
  CHECK_THROWS_AS(restrict(cr, {4}), ValidationError);
  CHECK_THROWS_AS(restrict(cr, {}), ValidationError);
}

TEST_CASE("ideal Hilbert functions (frozen, P^2)") {
  const CurveRing cr = build_curve_ring(action::principal_model(2));
  CHECK(ideal_hilbert(cr, {1}, 3) == std::vector<std::size_t>{0, 1, 2, 2});
  CHECK(ideal_hilbert(cr, {1, 2}, 3) == std::vector<std::size_t>{0, 0, 1, 1});
  CHECK(ideal_hilbert(cr, {1, 2, 3}, 3) == std::vector<std::size_t>{0, 0, 0, 0});
}

TEST_CASE("rank-nullity for every proper subset (P^2, P^3)") {
  for (int n : {2, 3}) {
    const CurveRing cr = build_curve_ring(action::principal_model(n));
    const int bound = cr.default_degree_bound();
    const auto whole = hilbert_function(cr.algebra, bound);
    for (const ComponentSet& s : proper_subsets(cr.r())) {
      const auto ideal = ideal_hilbert(cr, s, bound);
      const auto image = hilbert_function(restrict(cr, s), bound);
      for (int d = 0; d <= bound; ++d) {
        const auto k = static_cast<std::size_t>(d);
        CHECK(ideal[k] + image[k] == whole[k]);
      }
      // Stabilised ideal rank is the number of components outside s.
      CHECK(ideal.back() == cr.r() - s.size());
      for (const Tuple& t : kernel_basis(cr.algebra, s, bound))
        for (std::size_t i : s) CHECK(t.coeffs[i - 1].is_zero());
    }
  }
}

TEST_CASE("building from an invalid model fails validation") {
  action::ActionModel m = action::principal_model(2);
  m.e = Matrix<Rational>(3, 3);
  CHECK_THROWS_AS(build_curve_ring(m), ValidationError);
}
