#pragma once

// Integer polynomials, the coefficient matrix C(f1, f2) and determinants of
// matrices whose entries are polynomials of degree at most one.

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "lred/exactlinalg.hpp"
#include "lred/exactnum.hpp"

namespace lred {

/// Polynomial in Z[x], constant term first, never with a trailing zero
/// coefficient (the zero polynomial has no coefficients).
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs);
  IntPoly(std::initializer_list<long> coeffs);
  static IntPoly constant(const BigInt& c);
  static IntPoly linear(const BigInt& slope, const BigInt& intercept);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  /// Coefficient of x^k (zero beyond the degree).
  BigInt coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : BigInt(0); }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  const BigInt& leading() const { return coeffs_.back(); }

  BigInt evaluate(const BigInt& v) const;
  Rat evaluate(const Rat& v) const;

  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator-(const IntPoly& a);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const BigInt& s, const IntPoly& a);
  friend bool operator==(const IntPoly&, const IntPoly&) = default;

  std::string to_string() const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

/// a / b when b divides a exactly in Z[x]; throws otherwise.
IntPoly divide_exact(const IntPoly& a, const IntPoly& b);

using PolyMatrix = Matrix<IntPoly>;

/// Matrix with entries linear(i, j) * x + constant(i, j).
struct LinPolyMatrix {
  IntMatrix constant;
  IntMatrix linear;

  std::size_t dim() const { return constant.dim(); }
  IntPoly entry(std::size_t i, std::size_t j) const {
    return IntPoly::linear(linear(i, j), constant(i, j));
  }
  PolyMatrix to_poly() const;
  /// Integer matrix obtained by substituting x = v.
  IntMatrix substitute(const BigInt& v) const;
  /// Top-left k x k block.
  LinPolyMatrix leading(std::size_t k) const;
};

/// Fraction-free determinant over Z[x].
IntPoly det(const PolyMatrix& m);

/// The 2d x 2d matrix C(f1, f2), d = max(deg f1, deg f2): column k of the
/// left block holds f1's coefficients from x^d (row k) down to x^0 (row
/// k + d); the right block does the same for f2.
IntMatrix coeff_matrix(const IntPoly& f1, const IntPoly& f2);
BigInt det_coeff_matrix(const IntPoly& f1, const IntPoly& f2);

/// det C(f1, f2) together with g1, g2 of degree < d and f1*g1 + f2*g2 == det.
struct CoeffMatrixCertificate {
  BigInt det;
  IntPoly g1;
  IntPoly g2;
};
CoeffMatrixCertificate coeff_matrix_certificate(const IntPoly& f1, const IntPoly& f2);

/// True when f1 and f2 have no common root over the algebraic closure of Q.
/// Uses det C(f1, f2) when either has positive degree; two constants share
/// no root unless both are zero.
bool share_no_root(const IntPoly& f1, const IntPoly& f2);

/// Determinant of m with one row and one column deleted (0-based).
IntPoly linpoly_minor_det(const LinPolyMatrix& m, std::size_t deleted_row, std::size_t deleted_col);
IntPoly linpoly_det(const LinPolyMatrix& m);

/// (adj m)(i, j) = (-1)^(i+j) det(m without row j and column i), 0-based.
IntPoly adj_entry(const LinPolyMatrix& m, std::size_t i, std::size_t j);

}  // namespace lred
