#include "bcoh/error.hpp"
#include "bcoh/rootsystems.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace bcoh;
using namespace bcoh::roots;

namespace {

using Coeffs = std::vector<long long>;

}  // namespace

TEST_CASE("root counts and Weyl orders") {
  struct Case { Family f; int rank; std::size_t positives; long long order; };
  const Case cases[] = {
      {Family::A, 1, 1, 2},   {Family::A, 3, 6, 24},   {Family::B, 2, 4, 8},    {Family::B, 3, 9, 48},
      {Family::C, 3, 9, 48},  {Family::D, 4, 12, 192}, {Family::G, 2, 6, 12},   {Family::F, 4, 24, 1152},
      {Family::A, 8, 36, 362880}, {Family::D, 5, 20, 1920}};
  for (const auto& c : cases) {
    CAPTURE(family_name(c.f));
    CAPTURE(c.rank);
    const RootSystem rs = positive_roots(c.f, c.rank);
    CHECK(rs.positive_roots.size() == c.positives);
    CHECK(rs.simple_roots.size() == static_cast<std::size_t>(c.rank));
    CHECK(weyl_group_order(c.f, c.rank) == c.order);
    CHECK(km_poincare(rs).value_at_one() == c.order);
  }
}

TEST_CASE("heights of small systems") {
  auto sorted_heights = [](Family f, int r) {
    auto h = positive_roots(f, r).heights();
    std::sort(h.begin(), h.end());
    return h;
  };
  CHECK(sorted_heights(Family::A, 2) == std::vector<int>{1, 1, 2});
  CHECK(sorted_heights(Family::B, 2) == std::vector<int>{1, 1, 2, 3});
  CHECK(sorted_heights(Family::G, 2) == std::vector<int>{1, 1, 2, 3, 4, 5});
  // Highest root heights are the Coxeter number minus one.
  CHECK(sorted_heights(Family::F, 4).back() == 11);
  CHECK(sorted_heights(Family::D, 4).back() == 5);
  CHECK(sorted_heights(Family::C, 3).back() == 5);
}

TEST_CASE("simple coordinates reconstruct the root") {
  for (auto [f, r] : {std::pair{Family::B, 3}, {Family::G, 2}, {Family::F, 4}, {Family::D, 4}}) {
    const RootSystem rs = positive_roots(f, r);
    for (const auto& root : rs.positive_roots) {
      const IntVector c = rs.simple_coordinates(root);
      IntVector back(root.size(), 0);
      for (std::size_t k = 0; k < c.size(); ++k) {
        CHECK(c[k] >= 0);
        for (std::size_t i = 0; i < root.size(); ++i) back[i] += c[k] * rs.simple_roots[k][i];
      }
      CHECK(back == root);
    }
  }
}

TEST_CASE("Poincare polynomials: frozen values") {
  CHECK(km_poincare(positive_roots(Family::A, 2)).coeffs == Coeffs{1, 2, 2, 1});
  CHECK(km_poincare(positive_roots(Family::B, 2)).coeffs == Coeffs{1, 2, 2, 2, 1});
  CHECK(km_poincare(positive_roots(Family::G, 2)).coeffs == Coeffs{1, 2, 2, 2, 2, 2, 1});
  CHECK(km_poincare(positive_roots(Family::A, 3)).coeffs == Coeffs{1, 3, 5, 6, 5, 3, 1});
  const PoincarePoly f4 = km_poincare(positive_roots(Family::F, 4));
  CHECK(f4.coeffs.size() == 25);
  CHECK(f4.is_palindromic());
}

TEST_CASE("A_n lengths agree with inversion counting") {
  for (int n = 1; n <= 5; ++n) {
    CAPTURE(n);
    const Coeffs expected = oracle::symmetric_group_lengths(n);
    CHECK(km_poincare(positive_roots(Family::A, n)).coeffs == expected);
    CHECK(weyl_length_genfun(Family::A, n).coeffs == expected);
  }
}

TEST_CASE("Kostant-Macdonald agrees with Weyl enumeration") {
  for (auto [f, r] : {std::pair{Family::B, 4}, {Family::C, 4}, {Family::D, 5}, {Family::G, 2},
                      {Family::F, 4}, {Family::B, 2}}) {
    CAPTURE(family_name(f));
    CAPTURE(r);
    CHECK(km_poincare(positive_roots(f, r)) == weyl_length_genfun(f, r));
  }
  CHECK_THROWS_AS(weyl_length_genfun(Family::B, 8), ValidationError);
}

TEST_CASE("degrees product formula") {
  for (int n = 1; n <= 8; ++n) {
    std::vector<int> degrees;
    for (int d = 1; d <= n; ++d) degrees.push_back(d);
    CHECK(poincare_from_degrees(degrees).coeffs == Coeffs(static_cast<std::size_t>(n + 1), 1));
  }
  // The multiset of heights of A_2 gives [1,2,2,1].
  CHECK(poincare_from_degrees({1, 1, 2}).coeffs == Coeffs{1, 2, 2, 1});
  CHECK(poincare_from_degrees({}).coeffs == Coeffs{1});
  CHECK_THROWS_AS(poincare_from_degrees({2}), ValidationError);
  CHECK_THROWS_AS(poincare_from_degrees({0, 1}), ValidationError);
  CHECK_THROWS_WITH_AS(poincare_from_degrees({1, 3}), "degrees do not come from a B-regular variety",
                       ValidationError);
}

TEST_CASE("unsupported ranks and families") {
  CHECK_THROWS_AS(positive_roots(Family::A, 0), ValidationError);
  CHECK_THROWS_AS(positive_roots(Family::A, 9), ValidationError);
  CHECK_THROWS_AS(positive_roots(Family::B, 1), ValidationError);
  CHECK_THROWS_AS(positive_roots(Family::D, 2), ValidationError);
  CHECK_THROWS_AS(positive_roots(Family::G, 3), ValidationError);
  CHECK_THROWS_AS(positive_roots(Family::F, 2), ValidationError);
  CHECK_THROWS_AS(parse_family("E"), ValidationError);
  CHECK(parse_family("G2") == Family::G);
  CHECK(family_name(Family::F) == "F4");
}
