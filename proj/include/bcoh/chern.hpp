#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "bcoh/curve.hpp"
#include "bcoh/error.hpp"
#include "bcoh/gkm.hpp"
#include "bcoh/matrix.hpp"

namespace bcoh::chern {

// Coefficients of det(tI - M) from t^n down to t^0, by Berkowitz's
// division-free algorithm; valid over any commutative ring T.
template <class T>
std::vector<T> characteristic_polynomial(const Matrix<T>& m) {
  if (!m.is_square()) throw ValidationError("characteristic polynomial of a non-square matrix");
  const std::size_t n = m.rows();
  std::vector<T> poly{T(1)};
  for (std::size_t k = 0; k < n; ++k) {
    // Leading (k+1)x(k+1) block [[A, c], [r, a]] with A the k x k block.
    // Its polynomial is the Toeplitz product with first column
    // (1, -a, -r c, -r A c, ..., -r A^{k-1} c).
    std::vector<T> column{T(1), T(0) - m(k, k)};
    std::vector<T> vec(k);
    for (std::size_t i = 0; i < k; ++i) vec[i] = m(i, k);
    for (std::size_t p = 0; p < k; ++p) {
      T dot(0);
      for (std::size_t i = 0; i < k; ++i) dot += m(k, i) * vec[i];
      column.push_back(T(0) - dot);
      std::vector<T> next(k, T(0));
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) next[i] += m(i, j) * vec[j];
      vec = std::move(next);
    }
    std::vector<T> grown(k + 2, T(0));
    for (std::size_t row = 0; row < k + 2; ++row)
      for (std::size_t col = 0; col <= std::min(row, k); ++col)
        grown[row] += column[row - col] * poly[col];
    poly = std::move(grown);
  }
  return poly;
}

// Trace of M on the k-th exterior power: e_k of the eigenvalues.
template <class T>
T exterior_trace(const Matrix<T>& m, std::size_t k) {
  if (k > m.rows()) throw ValidationError("exterior power degree exceeds the rank");
  std::vector<T> poly = characteristic_polynomial(m);
  return k % 2 == 0 ? poly[k] : T(0) - poly[k];
}

// Fibre of a bundle at a fixed point: either split (torus weights) or the
// action of W = diag(1,-1) and V = [[0,1],[0,0]] from Lie(B).
struct MatrixPair {
  Matrix<Rational> rho_w;
  Matrix<Rational> rho_v;
};
using Weights = std::vector<long>;
using Fibre = std::variant<Weights, MatrixPair>;

// A B-equivariant bundle recorded by its fibres over some fixed points.
class BundleData {
 public:
  // Checks common rank, [rho_W, rho_V] = 2 rho_V and rho_V nilpotent.
  BundleData(std::size_t rank, std::map<std::size_t, Fibre> fibres);

  [[nodiscard]] std::size_t rank() const { return rank_; }
  [[nodiscard]] const std::map<std::size_t, Fibre>& fibres() const { return fibres_; }
  [[nodiscard]] ComponentSet support() const;

 private:
  std::size_t rank_;
  std::map<std::size_t, Fibre> fibres_;
};

// Fibre weights at zeta_j are h_j - h_i, i != j.
BundleData tangent_bundle(const action::ActionModel& model);

// Fibrewise direct sum over the common support.
BundleData direct_sum(const BundleData& a, const BundleData& b);

// k-th elementary symmetric function.
Rational elementary_symmetric(const std::vector<Rational>& values, std::size_t k);

// Degree-k tuple over bd.support() (ascending labels): component j is
// e_k(W_j), or the coefficient c_j of Tr_{wedge^k}(v rho_W - 2 rho_V) = c_j v^k.
// The trace must be a monomial; otherwise InvariantViolation.
Tuple chern_tuple(const BundleData& bd, std::size_t k, const curve::CurveRing& cr);

// Whether c_k lies in the coordinate ring of the sub-curve over the support.
bool chern_membership(const BundleData& bd, std::size_t k, const curve::CurveRing& cr);

enum class SubalgebraStatus { Generates, ProperSubalgebra, InconclusiveAtBound };
std::string status_name(SubalgebraStatus s);

struct SubalgebraVerdict {
  SubalgebraStatus status = SubalgebraStatus::InconclusiveAtBound;
  std::optional<int> witness;
  int bound = 0;
  std::vector<std::size_t> subalgebra_hilbert;
  std::vector<std::size_t> gkm_hilbert;
};

// Subalgebra generated by the given classes, the unit and v, compared with
// the congruence ring of g. Throws ValidationError if a generator violates
// the congruences.
SubalgebraVerdict chern_subalgebra_verdict(const std::vector<Tuple>& generators,
                                           const gkm::Graph& g, int max_degree);

}  // namespace bcoh::chern
