#include "lred/exactlinalg.hpp"

#include <numeric>
#include <utility>

#include "lred/errors.hpp"

namespace lred {

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw PreconditionError("matrix product: shape mismatch");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  }
  return out;
}

IntVector operator*(const IntMatrix& a, std::span<const BigInt> v) {
  if (a.cols() != v.size()) throw PreconditionError("matrix-vector product: shape mismatch");
  IntVector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out[i] += a(i, j) * v[j];
  }
  return out;
}

RatVector operator*(const IntMatrix& a, std::span<const Rat> v) {
  if (a.cols() != v.size()) throw PreconditionError("matrix-vector product: shape mismatch");
  RatVector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out[i] += a(i, j) * v[j];
  }
  return out;
}

IntMatrix transpose(const IntMatrix& a) {
  IntMatrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
  return out;
}

std::strong_ordering operator<=>(const NormValue& a, const NormValue& b) {
  if (a.kind != b.kind) throw PreconditionError("comparing norm values of different kinds");
  const int c = cmp(a.value, b.value);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

bool operator==(const NormValue& a, const NormValue& b) {
  return (a <=> b) == std::strong_ordering::equal;
}

namespace {

template <class T>
NormValue norm_impl(std::span<const T> v, Norm kind) {
  Rat acc = 0;
  for (const auto& x : v) {
    switch (kind) {
      case Norm::L1:
        acc += abs(x);
        break;
      case Norm::L2:
        acc += x * x;
        break;
      case Norm::Linf:
        if (abs(x) > acc) acc = abs(x);
        break;
    }
  }
  return NormValue{kind, acc};
}

}  // namespace

NormValue norm(std::span<const Rat> v, Norm kind) { return norm_impl(v, kind); }
NormValue norm(std::span<const BigInt> v, Norm kind) { return norm_impl(v, kind); }

bool scaled_le(const NormValue& u, const Rat& alpha, const NormValue& w) {
  if (u.kind != w.kind) throw PreconditionError("comparing norm values of different kinds");
  if (alpha < 0) throw PreconditionError("negative scale factor");
  if (u.kind == Norm::L2) return u.value <= alpha * alpha * w.value;
  return u.value <= alpha * w.value;
}

BigInt det(const IntMatrix& m) {
  if (!m.is_square()) throw PreconditionError("det: matrix is not square");
  const std::size_t n = m.dim();
  if (n == 0) return 1;
  IntMatrix a = m;
  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && a(r, k) == 0) ++r;
      if (r == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(r, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

IntMatrix adjugate(const IntMatrix& m) {
  if (!m.is_square() || m.dim() == 0) throw PreconditionError("adjugate: need a square matrix");
  const std::size_t n = m.dim();
  IntMatrix out(n);
  if (n == 1) {
    out(0, 0) = 1;
    return out;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      BigInt cof = det(m.minor(j, i));
      out(i, j) = ((i + j) % 2 == 0) ? cof : BigInt(-cof);
    }
  }
  return out;
}

RatVector solve_rational(const IntMatrix& m, std::span<const Rat> v) {
  if (!m.is_square() || m.dim() != v.size()) throw PreconditionError("solve_rational: shape mismatch");
  const BigInt d = det(m);
  if (d == 0) throw PreconditionError("solve_rational: matrix is singular");
  RatVector x = adjugate(m) * v;
  for (auto& xi : x) xi /= Rat(d);
  return x;
}

IntVector PivotNormalization::map_back(std::span<const BigInt> q) const {
  IntVector out(q.size());
  for (std::size_t c = 0; c < q.size(); ++c) out[col_perm[c]] = q[c];
  return out;
}

bool PivotNormalization::is_identity() const {
  for (std::size_t i = 0; i < row_perm.size(); ++i) {
    if (row_perm[i] != i || col_perm[i] != i || row_sign[i] != 1) return false;
  }
  return true;
}

PivotNormalization normalize_pivot(const IntMatrix& m) {
  if (!m.is_square() || m.dim() == 0) throw PreconditionError("normalize_pivot: need a square matrix");
  const std::size_t n = m.dim();
  BigInt best = 0;
  std::size_t bi = n - 1, bj = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (abs(m(i, j)) > best) {
        best = abs(m(i, j));
        bi = i;
        bj = j;
      }
    }
  }
  if (best == 0) throw PreconditionError("normalize_pivot: zero matrix");
  // Keep (n-1, 0) when it already attains the maximum.
  if (abs(m(n - 1, 0)) == best) {
    bi = n - 1;
    bj = 0;
  }

  PivotNormalization p;
  p.row_perm.resize(n);
  p.col_perm.resize(n);
  std::iota(p.row_perm.begin(), p.row_perm.end(), std::size_t{0});
  std::iota(p.col_perm.begin(), p.col_perm.end(), std::size_t{0});
  std::swap(p.row_perm[bi], p.row_perm[n - 1]);
  std::swap(p.col_perm[bj], p.col_perm[0]);
  p.row_sign.assign(n, 1);
  if (m(bi, bj) < 0) p.row_sign[n - 1] = -1;

  p.normalized = IntMatrix(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      p.normalized(r, c) = p.row_sign[r] * m(p.row_perm[r], p.col_perm[c]);
    }
  }
  return p;
}

Rat op_norm_bound(const IntMatrix& m, Norm kind) {
  BigInt best = 0;
  switch (kind) {
    case Norm::L1:
      for (std::size_t c = 0; c < m.cols(); ++c) {
        BigInt s = 0;
        for (std::size_t r = 0; r < m.rows(); ++r) s += abs(m(r, c));
        if (s > best) best = s;
      }
      break;
    case Norm::Linf:
      for (std::size_t r = 0; r < m.rows(); ++r) {
        BigInt s = 0;
        for (std::size_t c = 0; c < m.cols(); ++c) s += abs(m(r, c));
        if (s > best) best = s;
      }
      break;
    case Norm::L2:
      for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) best += m(r, c) * m(r, c);
      break;
  }
  return Rat(best);
}

}  // namespace lred
