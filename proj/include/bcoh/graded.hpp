#pragma once

#include <concepts>
#include <cstddef>
#include <deque>
#include <memory>
#include <mutex>
#include <vector>

#include "bcoh/linalg.hpp"
#include "bcoh/tuple.hpp"

namespace bcoh {

// Subset of curve components, as 1-based labels (label 1 is the component
// over the U-fixed point o).
using ComponentSet = std::vector<std::size_t>;

// Sorts, checks range 1..r and uniqueness; throws ValidationError on an
// empty set or a bad label.
ComponentSet normalize_components(ComponentSet s, std::size_t r);

// Anything with finite-dimensional graded pieces inside Q^r.
template <class G>
concept GradedSpace = requires(const G& g, int d) {
  { g.components() } -> std::convertible_to<std::size_t>;
  { g.dimension(d) } -> std::convertible_to<std::size_t>;
};

// Graded subalgebra of (+)_{i=1..r} Q[v] generated by homogeneous tuples.
//
// The degree-d piece V_d is a subspace of Q^r (every homogeneous element of
// degree d is (c_i v^d)_i), built degree by degree:
//   V_d = span{ g * w : g generator of degree e >= 1, w in V_{d-e} }
//         + span{ generators of degree d } (+ the unit when d == 0),
// closed under multiplication by the degree-0 generators.
//
// Pieces are memoised; the cache is shared between copies and guarded, so
// a GradedSubalgebra can be queried from several threads.
class GradedSubalgebra {
 public:
  GradedSubalgebra(std::size_t r, std::vector<Tuple> generators, bool contains_unit = true);

  [[nodiscard]] std::size_t components() const { return r_; }
  [[nodiscard]] const std::vector<Tuple>& generators() const { return generators_; }
  [[nodiscard]] bool contains_unit() const { return contains_unit_; }
  [[nodiscard]] int max_generator_degree() const;

  // 2 * (max generator degree) * r, at least 1.
  [[nodiscard]] int default_degree_bound() const;

  [[nodiscard]] const RowSpace& piece(int d) const;
  [[nodiscard]] std::size_t dimension(int d) const { return piece(d).rank(); }

 private:
  struct Cache {
    std::mutex mutex;
    std::deque<RowSpace> pieces;
  };

  RowSpace compute_piece(int d) const;

  std::size_t r_;
  std::vector<Tuple> generators_;
  bool contains_unit_;
  std::shared_ptr<Cache> cache_;
};

// Row-reduced basis of the degree-d piece, as degree-d tuples.
std::vector<Tuple> graded_basis(const GradedSubalgebra& a, int d);

// [dim V_0, ..., dim V_D].
template <GradedSpace G>
std::vector<std::size_t> hilbert_function(const G& a, int max_degree) {
  std::vector<std::size_t> dims;
  for (int d = 0; d <= max_degree; ++d) dims.push_back(a.dimension(d));
  return dims;
}

bool member(const Tuple& t, const GradedSubalgebra& a);

// Coefficients expressing t in graded_basis(a, t.degree), if t is a member.
std::optional<RationalVector> basis_coordinates(const Tuple& t, const GradedSubalgebra& a);

// [h_0, h_1 - h_0, ..., h_D - h_{D-1}] for a non-decreasing Hilbert function.
std::vector<long> successive_differences(const std::vector<std::size_t>& hilbert);

// Dimensions of the graded pieces of A / vA. Requires the all-ones degree-1
// tuple (the element v) to lie in A; throws ValidationError otherwise.
std::vector<long> quotient_by_v_dims(const GradedSubalgebra& a, int max_degree);

// Basis of { x in V_d : x_i = 0 for all i in s }.
std::vector<Tuple> kernel_basis(const GradedSubalgebra& a, const ComponentSet& s, int d);

// Subalgebra of (+)_{i in s} Q[v] generated by the projections of a's
// generators; components keep the ascending order of s.
GradedSubalgebra restrict_to(const GradedSubalgebra& a, const ComponentSet& s);

// Number of classes of components that no generator separates.
std::size_t separated_classes(const GradedSubalgebra& a);

}  // namespace bcoh
