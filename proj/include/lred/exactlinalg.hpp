#pragma once

// Exact integer/rational linear algebra on small dense matrices.

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "lred/exactnum.hpp"

namespace lred {

/// Dense row-major matrix. Most operations require it to be square.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  explicit Matrix(std::size_t n) : Matrix(n, n) {}
  Matrix(std::initializer_list<std::initializer_list<T>> rows);

  static Matrix identity(std::size_t n) {
    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t dim() const { return rows_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<T> column(std::size_t c) const {
    std::vector<T> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
  }
  void set_column(std::size_t c, std::span<const T> v) {
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
  }

  /// Copy with row `skip_row` and column `skip_col` removed.
  Matrix minor(std::size_t skip_row, std::size_t skip_col) const {
    Matrix out(rows_ - 1, cols_ - 1);
    for (std::size_t r = 0, rr = 0; r < rows_; ++r) {
      if (r == skip_row) continue;
      for (std::size_t c = 0, cc = 0; c < cols_; ++c) {
        if (c == skip_col) continue;
        out(rr, cc++) = (*this)(r, c);
      }
      ++rr;
    }
    return out;
  }

  /// Top-left k x k block.
  Matrix leading(std::size_t k) const {
    Matrix out(k, k);
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = 0; c < k; ++c) out(r, c) = (*this)(r, c);
    return out;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <class T>
Matrix<T>::Matrix(std::initializer_list<std::initializer_list<T>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    for (const auto& v : row) data_.push_back(v);
  }
}

using IntMatrix = Matrix<BigInt>;
using RatMatrix = Matrix<Rat>;

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntVector operator*(const IntMatrix& a, std::span<const BigInt> v);
RatVector operator*(const IntMatrix& a, std::span<const Rat> v);
IntMatrix transpose(const IntMatrix& a);

enum class Norm { L1, L2, Linf };

/// An exact norm. For L2 `value` holds the squared norm so every
/// comparison stays in the rationals.
struct NormValue {
  Norm kind = Norm::Linf;
  Rat value;

  /// Ordering between values of the same kind; mixing kinds throws.
  friend std::strong_ordering operator<=>(const NormValue& a, const NormValue& b);
  friend bool operator==(const NormValue& a, const NormValue& b);
};

NormValue norm(std::span<const Rat> v, Norm kind);
NormValue norm(std::span<const BigInt> v, Norm kind);

/// u <= alpha * w for a rational alpha >= 0 (alpha is squared for L2).
bool scaled_le(const NormValue& u, const Rat& alpha, const NormValue& w);

/// Fraction-free (Bareiss) determinant.
BigInt det(const IntMatrix& m);

/// Transposed cofactor matrix; m * adjugate(m) == det(m) * Id, singular or not.
IntMatrix adjugate(const IntMatrix& m);

/// Solves m * x = v exactly by Cramer's rule; throws on singular m.
RatVector solve_rational(const IntMatrix& m, std::span<const Rat> v);

/// Result of moving the maximal-magnitude entry of a matrix to position
/// (n-1, 0) with a positive sign: normalized(r, c) ==
/// row_sign[r] * original(row_perm[r], col_perm[c]).
struct PivotNormalization {
  IntMatrix normalized;
  std::vector<std::size_t> row_perm;
  std::vector<int> row_sign;
  std::vector<std::size_t> col_perm;

  /// Maps a coefficient vector for `normalized` to one for the original
  /// matrix with the same image norm.
  IntVector map_back(std::span<const BigInt> q) const;
  bool is_identity() const;
};

PivotNormalization normalize_pivot(const IntMatrix& m);

/// Exact operator norm for L1 (max column sum) and Linf (max row sum); for L2
/// the squared Frobenius norm, which bounds the squared operator norm.
Rat op_norm_bound(const IntMatrix& m, Norm kind);

}  // namespace lred
