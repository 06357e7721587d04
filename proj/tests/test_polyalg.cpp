#include <gtest/gtest.h>

#include "lred/errors.hpp"
#include "lred/polyalg.hpp"
#include "support.hpp"

using namespace lred;
using lred::testing::Rng;

namespace {

LinPolyMatrix random_linpoly(Rng& rng, std::size_t n, long k) {
  return LinPolyMatrix{rng.matrix(n, k), rng.matrix(n, k)};
}

// Lagrange interpolation through (t, values[t]) for t = 0..deg, over Q.
IntPoly interpolate(const std::vector<BigInt>& values) {
  const std::size_t count = values.size();
  std::vector<Rat> coeffs(count, Rat(0));
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<Rat> basis{Rat(1)};
    Rat denom = 1;
    for (std::size_t j = 0; j < count; ++j) {
      if (j == i) continue;
      std::vector<Rat> next(basis.size() + 1, Rat(0));
      for (std::size_t k = 0; k < basis.size(); ++k) {
        next[k + 1] += basis[k];
        next[k] -= basis[k] * Rat(static_cast<long>(j));
      }
      basis = std::move(next);
      denom *= Rat(static_cast<long>(i) - static_cast<long>(j));
    }
    for (std::size_t k = 0; k < basis.size(); ++k) coeffs[k] += Rat(values[i]) * basis[k] / denom;
  }
  std::vector<BigInt> out;
  for (const auto& c : coeffs) {
    EXPECT_EQ(c.get_den(), 1);
    out.push_back(c.get_num());
  }
  return IntPoly(out);
}

IntMatrix evaluate(const LinPolyMatrix& m, long t) { return m.substitute(t); }

}  // namespace

TEST(IntPoly, Arithmetic) {
  const IntPoly a{3, 1};   // x + 3
  const IntPoly b{-6, 2};  // 2x - 6
  EXPECT_EQ(a * b, (IntPoly{-18, 0, 2}));
  EXPECT_EQ(a - a, IntPoly());
  EXPECT_EQ(IntPoly({0, 0}).degree(), -1);
  EXPECT_EQ(divide_exact(a * b, b), a);
  EXPECT_THROW(divide_exact(a, b), ContractError);
}

TEST(IntPoly, Evaluate) {
  EXPECT_EQ((IntPoly{3, 1}).evaluate(BigInt(262144)), 262147);
  EXPECT_EQ(IntPoly().evaluate(BigInt(17)), 0);
  EXPECT_EQ((IntPoly{-6, 2}).evaluate(BigInt(262144)), 524282);
}

TEST(CoeffMatrix, Examples) {
  EXPECT_EQ(coeff_matrix(IntPoly{0, 1}, IntPoly{1, 1}), (IntMatrix{{1, 1}, {0, 1}}));
  EXPECT_EQ(coeff_matrix(IntPoly{-1, 0, 1}, IntPoly{-1, 1}),
            (IntMatrix{{1, 0, 0, 0}, {0, 1, 1, 0}, {-1, 0, -1, 1}, {0, -1, 0, -1}}));
  EXPECT_EQ(det_coeff_matrix(IntPoly{0, 1}, IntPoly{1, 1}), 1);
  EXPECT_EQ(det_coeff_matrix(IntPoly{1, 1}, IntPoly{1, 1}), 0);
  EXPECT_EQ(det_coeff_matrix(IntPoly{-1, 0, 1}, IntPoly{-1, 1}), 0);
  const IntPoly f{2, -3, 0, 1};
  EXPECT_EQ(det_coeff_matrix(f, f), 0);
  EXPECT_THROW(coeff_matrix(IntPoly{2}, IntPoly{3}), PreconditionError);
}

TEST(CoeffMatrix, WorkedTraceDeterminant) {
  // adjugate entries (2,1) and (2,2) of [[x+3, -x], [-2x+6, x+3]]
  EXPECT_EQ(det_coeff_matrix(IntPoly{-6, 2}, IntPoly{3, 1}), 12);
}

TEST(CoeffMatrix, CertificateIdentity) {
  Rng rng(31);
  for (int i = 0; i < 300; ++i) {
    std::vector<BigInt> a(static_cast<std::size_t>(rng.uniform(1, 6)));
    std::vector<BigInt> b(static_cast<std::size_t>(rng.uniform(1, 6)));
    for (auto& v : a) v = rng.uniform(-20, 20);
    for (auto& v : b) v = rng.uniform(-20, 20);
    const IntPoly f1(a), f2(b);
    if (f1.degree() < 1 && f2.degree() < 1) continue;
    const CoeffMatrixCertificate c = coeff_matrix_certificate(f1, f2);
    const long d = std::max(f1.degree(), f2.degree());
    EXPECT_EQ(c.det, det_coeff_matrix(f1, f2));
    EXPECT_EQ(c.det, det(coeff_matrix(f1, f2)));
    EXPECT_EQ(f1 * c.g1 + f2 * c.g2, IntPoly::constant(c.det));
    EXPECT_LE(c.g1.degree(), d - 1);
    EXPECT_LE(c.g2.degree(), d - 1);
  }
}

TEST(ShareNoRoot, ConstantCases) {
  EXPECT_TRUE(share_no_root(IntPoly{3}, IntPoly{5}));
  EXPECT_FALSE(share_no_root(IntPoly(), IntPoly()));
  EXPECT_FALSE(share_no_root(IntPoly(), IntPoly{1, 1}));
  EXPECT_TRUE(share_no_root(IntPoly{2}, IntPoly{1, 1}));
  EXPECT_TRUE(share_no_root(IntPoly{-6, 2}, IntPoly{3, 1}));
}

TEST(LinPoly, MinorExamples) {
  LinPolyMatrix one{IntMatrix{{4}}, IntMatrix{{3}}};
  EXPECT_EQ(linpoly_det(one), (IntPoly{4, 3}));
  LinPolyMatrix xid{IntMatrix(2), IntMatrix::identity(2)};
  EXPECT_EQ(linpoly_det(xid), (IntPoly{0, 0, 1}));
  LinPolyMatrix xid3{IntMatrix(3), IntMatrix::identity(3)};
  EXPECT_EQ(linpoly_minor_det(xid3, 0, 0), (IntPoly{0, 0, 1}));
  EXPECT_EQ(linpoly_minor_det(xid3, 0, 1), IntPoly());
}

TEST(LinPoly, MinorMatchesInterpolation) {
  Rng rng(32);
  for (int i = 0; i < 150; ++i) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(2, 4));
    const LinPolyMatrix m = random_linpoly(rng, n, 9);
    const std::size_t r = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 1));
    const std::size_t c = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 1));
    std::vector<BigInt> values;
    for (long t = 0; t <= static_cast<long>(n); ++t) values.push_back(lred::testing::cofactor_det(evaluate(m, t).minor(r, c)));
    EXPECT_EQ(linpoly_minor_det(m, r, c), interpolate(values));

    std::vector<BigInt> full;
    for (long t = 0; t <= static_cast<long>(n); ++t) full.push_back(lred::testing::cofactor_det(evaluate(m, t)));
    EXPECT_EQ(linpoly_det(m), interpolate(full));
    EXPECT_EQ(det(m.to_poly()), interpolate(full));
  }
}

TEST(LinPoly, AdjEntryExamples) {
  // [[x+3, -x], [-2x+6, x+3]]
  const LinPolyMatrix m{IntMatrix{{3, 0}, {6, 3}}, IntMatrix{{1, -1}, {-2, 1}}};
  EXPECT_EQ(adj_entry(m, 1, 0), (IntPoly{-6, 2}));
  EXPECT_EQ(adj_entry(m, 1, 1), (IntPoly{3, 1}));
  EXPECT_EQ(adj_entry(m, 0, 1), (IntPoly{0, 1}));
}

TEST(LinPoly, AdjugateIdentityAtIntegerPoints) {
  Rng rng(33);
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(2, 4));
    const LinPolyMatrix m = random_linpoly(rng, n, 7);
    const BigInt t = rng.uniform(-10, 10);
    const IntMatrix a = m.substitute(t);
    IntMatrix adj(n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) adj(r, c) = adj_entry(m, r, c).evaluate(t);
    const BigInt d = lred::testing::cofactor_det(a);
    IntMatrix expected(n);
    for (std::size_t k = 0; k < n; ++k) expected(k, k) = d;
    EXPECT_EQ(a * adj, expected);
  }
}
