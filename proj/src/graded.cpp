#include "bcoh/graded.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "bcoh/error.hpp"

namespace bcoh {

ComponentSet normalize_components(ComponentSet s, std::size_t r) {
  if (s.empty()) throw ValidationError("component set must be nonempty");
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end())
    throw ValidationError("component set has repeated labels");
  if (s.front() < 1 || s.back() > r)
    throw ValidationError("component label out of range 1.." + std::to_string(r));
  return s;
}

GradedSubalgebra::GradedSubalgebra(std::size_t r, std::vector<Tuple> generators, bool contains_unit)
    : r_(r), generators_(std::move(generators)), contains_unit_(contains_unit),
      cache_(std::make_shared<Cache>()) {
  for (const auto& g : generators_) {
    if (g.size() != r_) throw ValidationError("generator component count differs from r");
    if (g.degree < 0) throw ValidationError("generator of negative degree");
  }
}

int GradedSubalgebra::max_generator_degree() const {
  int m = 0;
  for (const auto& g : generators_) m = std::max(m, g.degree);
  return m;
}

int GradedSubalgebra::default_degree_bound() const {
  return std::max(1, 2 * max_generator_degree() * static_cast<int>(r_));
}

const RowSpace& GradedSubalgebra::piece(int d) const {
  if (d < 0) throw ValidationError("negative degree");
  std::lock_guard<std::mutex> lock(cache_->mutex);
  while (static_cast<int>(cache_->pieces.size()) <= d)
    cache_->pieces.push_back(compute_piece(static_cast<int>(cache_->pieces.size())));
  return cache_->pieces[static_cast<std::size_t>(d)];
}

// Called with the cache lock held and all lower pieces present.
RowSpace GradedSubalgebra::compute_piece(int d) const {
  std::vector<RationalVector> spanning;
  if (d == 0 && contains_unit_) spanning.emplace_back(r_, Rational(1));
  for (const auto& g : generators_) {
    if (g.degree == d) spanning.push_back(g.coeffs);
    if (g.degree < 1 || g.degree > d) continue;
    for (const auto& w : cache_->pieces[static_cast<std::size_t>(d - g.degree)].basis())
      spanning.push_back((g * Tuple(d - g.degree, w)).coeffs);
  }
  RowSpace space(r_, std::move(spanning));

  // Close under multiplication by degree-0 generators.
  for (;;) {
    std::vector<RationalVector> products;
    for (const auto& g : generators_) {
      if (g.degree != 0) continue;
      for (const auto& b : space.basis()) products.push_back((g * Tuple(d, b)).coeffs);
    }
    if (products.empty()) break;
    RowSpace bigger = space.extended(products);
    if (bigger.rank() == space.rank()) break;
    space = std::move(bigger);
  }
  return space;
}

std::vector<Tuple> graded_basis(const GradedSubalgebra& a, int d) {
  std::vector<Tuple> out;
  for (const auto& b : a.piece(d).basis()) out.emplace_back(d, b);
  return out;
}

std::optional<RationalVector> basis_coordinates(const Tuple& t, const GradedSubalgebra& a) {
  if (t.size() != a.components()) throw ValidationError("tuple component count differs from r");
  if (t.degree < 0) return std::nullopt;
  return a.piece(t.degree).coordinates(t.coeffs);
}

bool member(const Tuple& t, const GradedSubalgebra& a) {
  if (t.size() != a.components()) throw ValidationError("tuple component count differs from r");
  if (t.is_zero()) return true;
  return basis_coordinates(t, a).has_value();
}

std::vector<long> successive_differences(const std::vector<std::size_t>& hilbert) {
  std::vector<long> out;
  long previous = 0;
  for (std::size_t h : hilbert) {
    out.push_back(static_cast<long>(h) - previous);
    previous = static_cast<long>(h);
  }
  return out;
}

std::vector<long> quotient_by_v_dims(const GradedSubalgebra& a, int max_degree) {
  if (!member(Tuple::ones(a.components(), 1), a))
    throw ValidationError("v is not in the algebra; the quotient by (v) is undefined");
  auto dims = successive_differences(hilbert_function(a, max_degree));
  for (long x : dims)
    if (x < 0) throw InvariantViolation("graded pieces not nested although v is in the algebra");
  return dims;
}

std::vector<Tuple> kernel_basis(const GradedSubalgebra& a, const ComponentSet& s, int d) {
  const std::size_t r = a.components();
  ComponentSet zeroed = normalize_components(s, r);
  // Reorder columns so the constrained ones come first; rows of the RREF
  // whose pivot lies past them vanish on s and span the kernel.
  std::vector<std::size_t> order;
  std::vector<bool> in_s(r, false);
  for (std::size_t label : zeroed) {
    order.push_back(label - 1);
    in_s[label - 1] = true;
  }
  for (std::size_t i = 0; i < r; ++i)
    if (!in_s[i]) order.push_back(i);

  std::vector<RationalVector> permuted;
  for (const auto& b : a.piece(d).basis()) {
    RationalVector row;
    for (std::size_t i : order) row.push_back(b[i]);
    permuted.push_back(std::move(row));
  }
  RowSpace reduced(r, std::move(permuted));

  std::vector<Tuple> out;
  for (std::size_t k = 0; k < reduced.rank(); ++k) {
    if (reduced.pivots()[k] < zeroed.size()) continue;
    RationalVector x(r, Rational(0));
    for (std::size_t p = 0; p < r; ++p) x[order[p]] = reduced.basis()[k][p];
    out.emplace_back(d, std::move(x));
  }
  return out;
}

GradedSubalgebra restrict_to(const GradedSubalgebra& a, const ComponentSet& s) {
  ComponentSet kept = normalize_components(s, a.components());
  std::vector<Tuple> projected;
  for (const auto& g : a.generators()) {
    Tuple p;
    p.degree = g.degree;
    for (std::size_t label : kept) p.coeffs.push_back(g.coeffs[label - 1]);
    projected.push_back(std::move(p));
  }
  return GradedSubalgebra(kept.size(), std::move(projected), a.contains_unit());
}

std::size_t separated_classes(const GradedSubalgebra& a) {
  std::map<std::vector<Rational>, int> signatures;
  for (std::size_t i = 0; i < a.components(); ++i) {
    std::vector<Rational> sig;
    for (const auto& g : a.generators()) sig.push_back(g.coeffs[i]);
    signatures.emplace(std::move(sig), 0);
  }
  return signatures.size();
}

}  // namespace bcoh
