#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace bcoh::roots {

enum class Family { A, B, C, D, G, F };

Family parse_family(std::string_view name);
std::string family_name(Family f);

using IntVector = std::vector<long>;

// Positive roots of a reduced irreducible root system in its standard
// orthonormal-coordinate realization. F4 coordinates are doubled so that
// every root is an integer vector; heights don't depend on the scale.
struct RootSystem {
  Family family;
  int rank;
  std::vector<IntVector> positive_roots;
  std::vector<IntVector> simple_roots;  // also contained in positive_roots

  // Coefficients of a root in the simple-root basis.
  [[nodiscard]] IntVector simple_coordinates(const IntVector& root) const;
  // Sum of simple-root coordinates, one entry per positive root.
  [[nodiscard]] std::vector<int> heights() const;
};

// Generating polynomial sum_k c_k t^k with non-negative integer coefficients.
struct PoincarePoly {
  std::vector<long long> coeffs;

  [[nodiscard]] long long value_at_one() const;
  [[nodiscard]] bool is_palindromic() const;
  friend bool operator==(const PoincarePoly&, const PoincarePoly&) = default;
};

// Supported: A_1..A_8, B_2..B_8, C_2..C_8, D_3..D_8, G_2, F_4.
RootSystem positive_roots(Family family, int rank);

// prod over positive roots of (1 - t^{ht+1}) / (1 - t^{ht}); throws
// InvariantViolation if the division is not exact.
PoincarePoly km_poincare(const RootSystem& rs);

// prod_i (1 - t^{d_i+1}) / (1 - t^{d_i}); throws ValidationError if some
// d_i < 1 or the quotient is not a polynomial with non-negative integer
// coefficients.
PoincarePoly poincare_from_degrees(const std::vector<int>& degrees);

long long weyl_group_order(Family family, int rank);

// Length generating function of the Weyl group, by breadth-first search
// over the orbit of 2*rho under simple reflections (the orbit is a regular
// W-torsor, and BFS depth equals Coxeter length). Refuses |W| > 10^6.
PoincarePoly weyl_length_genfun(Family family, int rank);

}  // namespace bcoh::roots
