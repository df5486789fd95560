#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "bcoh/error.hpp"

namespace bcoh {

// Dense row-major matrix over a commutative ring T (Rational, Poly, ...).
// T must be constructible from int and support +, -, *.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    for (const auto& row : rows) {
      if (row.size() != cols_) throw ValidationError("ragged matrix literal");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  // Entry-wise conversion, e.g. Matrix<Rational> -> Matrix<Poly>.
  template <class U>
  static Matrix from(const Matrix<U>& other) {
    Matrix m(other.rows(), other.cols());
    for (std::size_t i = 0; i < other.rows(); ++i)
      for (std::size_t j = 0; j < other.cols(); ++j) m(i, j) = T(other(i, j));
    return m;
  }

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  [[nodiscard]] std::vector<T> row(std::size_t i) const {
    return std::vector<T>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                          data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }
  [[nodiscard]] std::vector<T> column(std::size_t j) const {
    std::vector<T> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out.push_back((*this)(i, j));
    return out;
  }

  [[nodiscard]] bool is_zero() const {
    for (const auto& x : data_)
      if (!(x == T(0))) return false;
    return true;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw ValidationError("matrix shape mismatch in product");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == T(0)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
      }
    return out;
  }

  friend Matrix operator*(const T& s, Matrix m) {
    for (auto& x : m.data_) x = s * x;
    return m;
  }

  friend std::vector<T> operator*(const Matrix& m, const std::vector<T>& x) {
    if (m.cols_ != x.size()) throw ValidationError("matrix-vector shape mismatch");
    std::vector<T> out(m.rows_, T(0));
    for (std::size_t i = 0; i < m.rows_; ++i)
      for (std::size_t j = 0; j < m.cols_; ++j) out[i] += m(i, j) * x[j];
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) = default;

  [[nodiscard]] Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  [[nodiscard]] Matrix pow(unsigned k) const {
    if (!is_square()) throw ValidationError("power of a non-square matrix");
    Matrix result = identity(rows_);
    for (unsigned i = 0; i < k; ++i) result = result * *this;
    return result;
  }

 private:
  void check_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ValidationError("matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

// [a, b] = ab - ba.
template <class T>
Matrix<T> commutator(const Matrix<T>& a, const Matrix<T>& b) {
  return a * b - b * a;
}

}  // namespace bcoh
