#include "bcoh/linalg.hpp"

#include <algorithm>
#include <utility>

#include "bcoh/error.hpp"

namespace bcoh {
namespace {

using IntRow = std::vector<mpz_class>;

void make_primitive(IntRow& row) {
  mpz_class g = 0;
  for (const auto& x : row) {
    if (x != 0) g = gcd(g, x);
    if (g == 1) return;
  }
  if (g == 0 || g == 1) return;
  for (auto& x : row) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

IntRow to_primitive_integers(const RationalVector& row) {
  mpz_class common = 1;
  for (const auto& x : row) common = lcm(common, x.denominator());
  IntRow out;
  out.reserve(row.size());
  for (const auto& x : row) out.push_back(x.numerator() * (common / x.denominator()));
  make_primitive(out);
  return out;
}

bool is_zero_row(const IntRow& row) {
  return std::all_of(row.begin(), row.end(), [](const mpz_class& x) { return x == 0; });
}

}  // namespace

std::vector<RationalVector> reduced_row_echelon(std::vector<RationalVector> rows,
                                                std::size_t width) {
  std::vector<IntRow> work;
  work.reserve(rows.size());
  for (const auto& r : rows) {
    if (r.size() != width) throw ValidationError("row length does not match ambient width");
    IntRow ints = to_primitive_integers(r);
    if (!is_zero_row(ints)) work.push_back(std::move(ints));
  }

  std::vector<std::size_t> pivot_cols;
  std::size_t next = 0;
  for (std::size_t col = 0; col < width && next < work.size(); ++col) {
    std::size_t best = work.size();
    for (std::size_t r = next; r < work.size(); ++r) {
      if (work[r][col] == 0) continue;
      if (best == work.size() || mpz_cmpabs(work[r][col].get_mpz_t(), work[best][col].get_mpz_t()) < 0) best = r;
    }
    if (best == work.size()) continue;
    std::swap(work[next], work[best]);
    const IntRow& pivot_row = work[next];
    const mpz_class pivot = pivot_row[col];
    for (std::size_t r = 0; r < work.size(); ++r) {
      if (r == next || work[r][col] == 0) continue;
      const mpz_class factor = work[r][col];
      for (std::size_t k = 0; k < width; ++k) work[r][k] = pivot * work[r][k] - factor * pivot_row[k];
      make_primitive(work[r]);
    }
    pivot_cols.push_back(col);
    ++next;
  }

  std::vector<RationalVector> out;
  out.reserve(pivot_cols.size());
  for (std::size_t k = 0; k < pivot_cols.size(); ++k) {
    const mpz_class& pivot = work[k][pivot_cols[k]];
    RationalVector row;
    row.reserve(width);
    for (std::size_t c = 0; c < width; ++c) row.emplace_back(mpq_class(work[k][c], pivot));
    out.push_back(std::move(row));
  }
  return out;
}

RowSpace::RowSpace(std::size_t width, std::vector<RationalVector> spanning)
    : width_(width), basis_(reduced_row_echelon(std::move(spanning), width)) {
  for (const auto& row : basis_) {
    auto it = std::find_if(row.begin(), row.end(), [](const Rational& x) { return !x.is_zero(); });
    pivots_.push_back(static_cast<std::size_t>(it - row.begin()));
  }
}

std::optional<RationalVector> RowSpace::coordinates(const RationalVector& x) const {
  if (x.size() != width_) throw ValidationError("vector length does not match ambient width");
  RationalVector coeffs;
  coeffs.reserve(basis_.size());
  RationalVector residual = x;
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    Rational c = residual[pivots_[k]];
    coeffs.push_back(c);
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j < width_; ++j) residual[j] -= c * basis_[k][j];
  }
  for (const auto& r : residual)
    if (!r.is_zero()) return std::nullopt;
  return coeffs;
}

bool RowSpace::contains(const RowSpace& other) const {
  return std::all_of(other.basis_.begin(), other.basis_.end(),
                     [this](const RationalVector& b) { return contains(b); });
}

RowSpace RowSpace::extended(const std::vector<RationalVector>& extra) const {
  std::vector<RationalVector> all = basis_;
  all.insert(all.end(), extra.begin(), extra.end());
  return RowSpace(width_, std::move(all));
}

std::size_t rank(const Matrix<Rational>& m) {
  std::vector<RationalVector> rows;
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
  return reduced_row_echelon(std::move(rows), m.cols()).size();
}

std::optional<RationalVector> solve_linear(const Matrix<Rational>& a, const RationalVector& b) {
  if (b.size() != a.rows()) throw ValidationError("right-hand side length mismatch");
  std::vector<RationalVector> rows;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    RationalVector row = a.row(i);
    row.push_back(b[i]);
    rows.push_back(std::move(row));
  }
  RowSpace reduced(a.cols() + 1, std::move(rows));
  RationalVector x(a.cols(), Rational(0));
  for (std::size_t k = 0; k < reduced.rank(); ++k) {
    std::size_t p = reduced.pivots()[k];
    if (p == a.cols()) return std::nullopt;
    x[p] = reduced.basis()[k][a.cols()];
  }
  return x;
}

Matrix<Rational> inverse(const Matrix<Rational>& m) {
  if (!m.is_square()) throw ValidationError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return m;
  std::vector<RationalVector> rows;
  for (std::size_t i = 0; i < n; ++i) {
    RationalVector row = m.row(i);
    row.resize(2 * n, Rational(0));
    row[n + i] = Rational(1);
    rows.push_back(std::move(row));
  }
  RowSpace reduced(2 * n, std::move(rows));
  if (reduced.rank() != n || reduced.pivots().back() != n - 1)
    throw ValidationError("matrix is singular");
  Matrix<Rational> inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = reduced.basis()[i][n + j];
  return inv;
}

RationalVector linear_combination(const std::vector<RationalVector>& vectors,
                                  const RationalVector& coefficients, std::size_t width) {
  if (vectors.size() != coefficients.size())
    throw ValidationError("coefficient count does not match vector count");
  RationalVector out(width, Rational(0));
  for (std::size_t k = 0; k < vectors.size(); ++k)
    for (std::size_t j = 0; j < width; ++j) out[j] += coefficients[k] * vectors[k][j];
  return out;
}

}  // namespace bcoh
