#pragma once
// Independent reference implementations used by the tests. They are slow
// and naive on purpose and share no code with the library algorithms.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <random>
#include <vector>

#include "bcoh/matrix.hpp"
#include "bcoh/rational.hpp"
#include "bcoh/tuple.hpp"

namespace oracle {

using bcoh::Matrix;
using bcoh::Rational;

// Textbook Gaussian elimination with division, first nonzero pivot.
inline std::size_t rank(std::vector<std::vector<Rational>> rows) {
  std::size_t r = 0;
  const std::size_t width = rows.empty() ? 0 : rows[0].size();
  for (std::size_t col = 0; col < width && r < rows.size(); ++col) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][col].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][col].is_zero()) continue;
      const Rational f = rows[i][col] / rows[r][col];
      for (std::size_t j = 0; j < width; ++j) rows[i][j] -= f * rows[r][j];
    }
    ++r;
  }
  return r;
}

// Leibniz expansion over all permutations.
inline Rational determinant(const Matrix<Rational>& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Rational total(0);
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Rational term(inversions % 2 == 0 ? 1 : -1);
    for (std::size_t i = 0; i < n; ++i) term *= m(i, perm[i]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// Sum of the k x k principal minors = trace on the k-th exterior power.
inline Rational principal_minor_sum(const Matrix<Rational>& m, std::size_t k) {
  const std::size_t n = m.rows();
  if (k == 0) return Rational(1);
  Rational total(0);
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
  do {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      if (pick[i]) idx.push_back(i);
    Matrix<Rational> sub(k, k);
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = 0; b < k; ++b) sub(a, b) = m(idx[a], idx[b]);
    total += determinant(sub);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return total;
}

// Length generating function of S_{n+1} by counting inversions.
inline std::vector<long long> symmetric_group_lengths(int n) {
  std::vector<int> perm(static_cast<std::size_t>(n + 1));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<long long> counts;
  do {
    std::size_t inv = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
      for (std::size_t j = i + 1; j < perm.size(); ++j)
        if (perm[i] > perm[j]) ++inv;
    if (counts.size() <= inv) counts.resize(inv + 1, 0);
    ++counts[inv];
  } while (std::next_permutation(perm.begin(), perm.end()));
  return counts;
}

// exp(s N) = sum_k s^k N^k / k! with explicit powers and factorials.
inline Matrix<Rational> exp_nilpotent(const Matrix<Rational>& nil, const Rational& s) {
  const std::size_t dim = nil.rows();
  Matrix<Rational> out(dim, dim);
  Rational factorial(1);
  for (unsigned k = 0; k <= dim; ++k) {
    if (k > 0) factorial *= Rational(static_cast<long>(k));
    out += (s.pow(k) / factorial) * nil.pow(k);
  }
  return out;
}

// Dimension of the degree-d piece of the algebra generated by the unit and
// positive-degree generators: rank of all generator monomials of degree d.
inline std::size_t monomial_span_dimension(const std::vector<bcoh::Tuple>& gens, std::size_t r,
                                           int d) {
  std::vector<std::vector<Rational>> rows;
  // Enumerate multisets of generators by non-decreasing index.
  std::vector<std::size_t> stack;
  auto rec = [&](auto&& self, std::size_t start, int remaining, bcoh::Tuple acc) -> void {
    if (remaining == 0) {
      rows.push_back(acc.coeffs);
      return;
    }
    for (std::size_t g = start; g < gens.size(); ++g)
      if (gens[g].degree >= 1 && gens[g].degree <= remaining) self(self, g, remaining - gens[g].degree, acc * gens[g]);
  };
  rec(rec, 0, d, bcoh::Tuple::ones(r, 0));
  return rank(rows);
}

inline Rational random_rational(std::mt19937_64& rng, long bound = 5) {
  std::uniform_int_distribution<long> num(-bound, bound);
  std::uniform_int_distribution<long> den(1, bound);
  return Rational(num(rng), den(rng));
}

inline Matrix<Rational> random_invertible(std::mt19937_64& rng, std::size_t n) {
  while (true) {
    Matrix<Rational> p(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) p(i, j) = random_rational(rng, 3);
    if (!determinant(p).is_zero()) return p;
  }
}

}  // namespace oracle
