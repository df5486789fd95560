#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "bcoh/matrix.hpp"
#include "bcoh/rational.hpp"

namespace bcoh {

using RationalVector = std::vector<Rational>;

// Reduced row-echelon basis of the span of `rows`. Rows are first scaled
// to primitive integer vectors and eliminated fraction-free, choosing at
// each step the candidate pivot of least height; only the final
// normalisation (pivot = 1) introduces denominators. Output rows are
// ordered by pivot column. All rows must have length `width`.
std::vector<RationalVector> reduced_row_echelon(std::vector<RationalVector> rows,
                                                std::size_t width);

// A linear subspace of Q^width held as a reduced row-echelon basis.
class RowSpace {
 public:
  explicit RowSpace(std::size_t width) : width_(width) {}
  RowSpace(std::size_t width, std::vector<RationalVector> spanning);

  [[nodiscard]] std::size_t width() const { return width_; }
  [[nodiscard]] std::size_t rank() const { return basis_.size(); }
  [[nodiscard]] const std::vector<RationalVector>& basis() const { return basis_; }
  [[nodiscard]] const std::vector<std::size_t>& pivots() const { return pivots_; }

  // Coefficients c with sum_k c[k] * basis()[k] == x, if x lies in the span.
  [[nodiscard]] std::optional<RationalVector> coordinates(const RationalVector& x) const;
  [[nodiscard]] bool contains(const RationalVector& x) const { return coordinates(x).has_value(); }
  // True iff every basis vector of `other` lies in this space.
  [[nodiscard]] bool contains(const RowSpace& other) const;

  // Span of this space and the extra vectors.
  [[nodiscard]] RowSpace extended(const std::vector<RationalVector>& extra) const;

 private:
  std::size_t width_;
  std::vector<RationalVector> basis_;
  std::vector<std::size_t> pivots_;
};

std::size_t rank(const Matrix<Rational>& m);

// Some x with a * x == b, or nullopt when the system is inconsistent.
std::optional<RationalVector> solve_linear(const Matrix<Rational>& a, const RationalVector& b);

// Throws ValidationError when singular.
Matrix<Rational> inverse(const Matrix<Rational>& m);

RationalVector linear_combination(const std::vector<RationalVector>& vectors,
                                  const RationalVector& coefficients, std::size_t width);

}  // namespace bcoh
