#include "lred/polyalg.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "lred/errors.hpp"

namespace lred {

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPoly IntPoly::constant(const BigInt& c) { return IntPoly(std::vector<BigInt>{c}); }

IntPoly IntPoly::linear(const BigInt& slope, const BigInt& intercept) {
  return IntPoly(std::vector<BigInt>{intercept, slope});
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPoly::evaluate(const BigInt& v) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * v + *it;
  return acc;
}

Rat IntPoly::evaluate(const Rat& v) const {
  Rat acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * v + Rat(*it);
  return acc;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

IntPoly operator-(const IntPoly& a) {
  std::vector<BigInt> c = a.coeffs_;
  for (auto& v : c) v = -v;
  return IntPoly(std::move(c));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return IntPoly();
  std::vector<BigInt> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPoly(std::move(c));
}

IntPoly operator*(const BigInt& s, const IntPoly& a) {
  std::vector<BigInt> c = a.coeffs_;
  for (auto& v : c) v *= s;
  return IntPoly(std::move(c));
}

std::string IntPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const BigInt& c = coeffs_[k];
    if (c == 0) continue;
    if (!first) out << (c < 0 ? " - " : " + ");
    else if (c < 0) out << "-";
    const BigInt mag = abs(c);
    if (mag != 1 || k == 0) out << mag;
    if (k >= 1) out << "x";
    if (k >= 2) out << "^" << k;
    first = false;
  }
  return out.str();
}

IntPoly divide_exact(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw PreconditionError("polynomial division by zero");
  if (a.is_zero()) return IntPoly();
  if (a.degree() < b.degree()) throw ContractError("inexact polynomial division");
  std::vector<BigInt> rem = a.coeffs();
  const std::size_t db = static_cast<std::size_t>(b.degree());
  std::vector<BigInt> quot(rem.size() - db);
  const BigInt& lb = b.leading();
  for (std::size_t k = quot.size(); k-- > 0;) {
    const BigInt& top = rem[k + db];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) {
      throw ContractError("inexact polynomial division");
    }
    BigInt q;
    mpz_divexact(q.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
    for (std::size_t t = 0; t <= db; ++t) rem[k + t] -= q * b.coeffs()[t];
    quot[k] = q;
  }
  for (const auto& r : rem) {
    if (r != 0) throw ContractError("inexact polynomial division");
  }
  return IntPoly(std::move(quot));
}

PolyMatrix LinPolyMatrix::to_poly() const {
  const std::size_t n = dim();
  PolyMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = entry(i, j);
  return out;
}

IntMatrix LinPolyMatrix::substitute(const BigInt& v) const {
  const std::size_t n = dim();
  IntMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = linear(i, j) * v + constant(i, j);
  return out;
}

LinPolyMatrix LinPolyMatrix::leading(std::size_t k) const {
  return LinPolyMatrix{constant.leading(k), linear.leading(k)};
}

IntPoly det(const PolyMatrix& m) {
  if (!m.is_square()) throw PreconditionError("det: matrix is not square");
  const std::size_t n = m.dim();
  if (n == 0) return IntPoly::constant(1);
  PolyMatrix a = m;
  bool negate = false;
  IntPoly prev = IntPoly::constant(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k).is_zero()) {
      std::size_t r = k + 1;
      while (r < n && a(r, k).is_zero()) ++r;
      if (r == n) return IntPoly();
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(r, c));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = divide_exact(a(i, j) * a(k, k) - a(i, k) * a(k, j), prev);
      }
    }
    prev = a(k, k);
  }
  return negate ? -a(n - 1, n - 1) : a(n - 1, n - 1);
}

IntMatrix coeff_matrix(const IntPoly& f1, const IntPoly& f2) {
  const long dl = std::max(f1.degree(), f2.degree());
  if (dl < 1) throw PreconditionError("coeff_matrix: both polynomials are constant");
  const std::size_t d = static_cast<std::size_t>(dl);
  IntMatrix c(2 * d);
  for (std::size_t k = 0; k < d; ++k) {
    for (std::size_t t = 0; t <= d; ++t) {
      c(k + t, k) = f1.coeff(d - t);
      c(k + t, d + k) = f2.coeff(d - t);
    }
  }
  return c;
}

BigInt det_coeff_matrix(const IntPoly& f1, const IntPoly& f2) {
  return det(coeff_matrix(f1, f2));
}

CoeffMatrixCertificate coeff_matrix_certificate(const IntPoly& f1, const IntPoly& f2) {
  const IntMatrix c = coeff_matrix(f1, f2);
  const std::size_t size = c.dim();
  const std::size_t d = size / 2;
  // C * adj(C) e_last = det(C) e_last, and e_last is the x^0 coefficient.
  std::vector<BigInt> w(size);
  for (std::size_t i = 0; i < size; ++i) {
    BigInt cof = det(c.minor(size - 1, i));
    w[i] = ((i + size - 1) % 2 == 0) ? cof : BigInt(-cof);
  }
  std::vector<BigInt> g1(d), g2(d);
  for (std::size_t k = 0; k < d; ++k) {
    g1[d - 1 - k] = w[k];
    g2[d - 1 - k] = w[d + k];
  }
  return CoeffMatrixCertificate{det(c), IntPoly(std::move(g1)), IntPoly(std::move(g2))};
}

bool share_no_root(const IntPoly& f1, const IntPoly& f2) {
  if (std::max(f1.degree(), f2.degree()) < 1) return !(f1.is_zero() && f2.is_zero());
  return det_coeff_matrix(f1, f2) != 0;
}

IntPoly linpoly_minor_det(const LinPolyMatrix& m, std::size_t deleted_row, std::size_t deleted_col) {
  const std::size_t n = m.dim();
  if (n < 2 || deleted_row >= n || deleted_col >= n) {
    throw PreconditionError("linpoly_minor_det: minor would be empty or index out of range");
  }
  return det(m.to_poly().minor(deleted_row, deleted_col));
}

IntPoly linpoly_det(const LinPolyMatrix& m) { return det(m.to_poly()); }

IntPoly adj_entry(const LinPolyMatrix& m, std::size_t i, std::size_t j) {
  const std::size_t n = m.dim();
  if (i >= n || j >= n) throw PreconditionError("adj_entry: index out of range");
  if (n == 1) return IntPoly::constant(1);
  IntPoly minor = linpoly_minor_det(m, j, i);
  return ((i + j) % 2 == 0) ? minor : -minor;
}

}  // namespace lred
