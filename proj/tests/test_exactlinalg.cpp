#include <gtest/gtest.h>

#include <boost/multiprecision/cpp_dec_float.hpp>

#include "lred/errors.hpp"
#include "lred/exactlinalg.hpp"
#include "support.hpp"

using namespace lred;
using lred::testing::Rng;
using Real = boost::multiprecision::cpp_dec_float_100;

namespace {

IntMatrix scaled_identity(std::size_t n, long k) {
  IntMatrix m = IntMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = k;
  return m;
}

Real to_real(const Rat& r) {
  return Real(r.get_num().get_str()) / Real(r.get_den().get_str());
}

Real real_norm(const RatVector& v, Norm kind) {
  Real acc = 0;
  for (const auto& x : v) {
    const Real a = boost::multiprecision::abs(to_real(x));
    if (kind == Norm::L1) acc += a;
    if (kind == Norm::L2) acc += a * a;
    if (kind == Norm::Linf) acc = std::max(acc, a);
  }
  return kind == Norm::L2 ? Real(boost::multiprecision::sqrt(acc)) : acc;
}

}  // namespace

TEST(Det, Examples) {
  EXPECT_EQ(det(IntMatrix{{2, 0}, {0, 3}}), 6);
  EXPECT_EQ(det(IntMatrix{{1, 2}, {3, 4}}), -2);
  EXPECT_EQ(det(IntMatrix{{0, 1}, {1, 0}}), -1);
  EXPECT_EQ(det(IntMatrix{{0, 0}, {0, 0}}), 0);
}

TEST(Det, MatchesCofactorExpansion) {
  Rng rng(21);
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 5));
    IntMatrix m = rng.matrix(n, 9);
    // force an occasional dependent row
    if (i % 7 == 0 && n >= 2) {
      for (std::size_t c = 0; c < n; ++c) m(n - 1, c) = 2 * m(0, c);
    }
    EXPECT_EQ(det(m), lred::testing::cofactor_det(m));
  }
}

TEST(Adjugate, Examples) {
  EXPECT_EQ(adjugate(IntMatrix{{1, 1}, {2, 1}}), (IntMatrix{{1, -1}, {-2, 1}}));
  EXPECT_EQ(adjugate(IntMatrix{{4, 7}, {-2, 5}}), (IntMatrix{{5, -7}, {2, 4}}));
  EXPECT_EQ(adjugate(IntMatrix::identity(3)), IntMatrix::identity(3));
}

TEST(Adjugate, IdentityIncludingSingular) {
  Rng rng(22);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 5));
    IntMatrix m = rng.matrix(n, 6);
    if (i % 3 == 0 && n >= 2) {
      for (std::size_t r = 0; r < n; ++r) m(r, n - 1) = m(r, 0) - m(r, 1 % n);
    }
    const IntMatrix adj = adjugate(m);
    EXPECT_EQ(m * adj, scaled_identity(n, det(m).get_si()));
    EXPECT_EQ(adj * m, scaled_identity(n, det(m).get_si()));
    // entries are cofactors
    for (std::size_t r = 0; r < n && n >= 2; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        BigInt cof = lred::testing::cofactor_det(m.minor(c, r));
        if ((r + c) % 2) cof = -cof;
        EXPECT_EQ(adj(r, c), cof);
      }
    }
  }
}

TEST(SolveRational, Examples) {
  const RatVector v{Rat(1, 3), Rat(-2)};
  EXPECT_EQ(solve_rational(IntMatrix::identity(2), v), v);
  EXPECT_EQ(solve_rational(IntMatrix{{2, 0}, {0, 4}}, RatVector{Rat(1), Rat(1)}), (RatVector{Rat(1, 2), Rat(1, 4)}));
  EXPECT_THROW(solve_rational(IntMatrix{{1, 2}, {2, 4}}, v), PreconditionError);
}

TEST(SolveRational, ResidualIsZero) {
  Rng rng(23);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 4));
    const IntMatrix m = rng.matrix(n, 9);
    if (det(m) == 0) continue;
    RatVector v(n);
    for (auto& x : v) x = make_rat(BigInt(rng.uniform(-20, 20)), BigInt(rng.uniform(1, 9)));
    EXPECT_EQ(m * std::span<const Rat>(solve_rational(m, v)), v);
  }
}

TEST(Norms, Examples) {
  EXPECT_EQ(norm(RatVector{Rat(1, 3), Rat(-1, 3)}, Norm::Linf).value, Rat(1, 3));
  EXPECT_EQ(norm(IntVector{3, 4}, Norm::L2).value, 25);
  EXPECT_EQ(norm(RatVector{Rat(1, 2), Rat(-1, 3), Rat(1, 6)}, Norm::L1).value, 1);
  EXPECT_THROW((void)(norm(IntVector{1}, Norm::L1) < norm(IntVector{1}, Norm::L2)), PreconditionError);
}

TEST(Norms, ScaledComparisonSquaresAlphaForL2) {
  const NormValue u = norm(IntVector{3, 0}, Norm::L2);  // |u| = 3
  const NormValue w = norm(IntVector{2, 0}, Norm::L2);  // |w| = 2
  EXPECT_TRUE(scaled_le(u, Rat(3, 2), w));
  EXPECT_FALSE(scaled_le(u, Rat(7, 5), w));
  const NormValue a = norm(IntVector{3}, Norm::Linf);
  const NormValue b = norm(IntVector{2}, Norm::Linf);
  EXPECT_TRUE(scaled_le(a, Rat(3, 2), b));
  EXPECT_FALSE(scaled_le(a, Rat(7, 5), b));
}

TEST(Norms, OrderingMatchesHighPrecision) {
  Rng rng(24);
  for (Norm kind : {Norm::L1, Norm::L2, Norm::Linf}) {
    for (int i = 0; i < 500; ++i) {
      const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 4));
      RatVector u(n), v(n);
      for (auto& x : u) x = make_rat(BigInt(rng.uniform(-40, 40)), BigInt(rng.uniform(1, 30)));
      for (auto& x : v) x = make_rat(BigInt(rng.uniform(-40, 40)), BigInt(rng.uniform(1, 30)));
      if (i % 5 == 0) v = u;
      const Real ru = real_norm(u, kind);
      const Real rv = real_norm(v, kind);
      const auto cmp = norm(u, kind) <=> norm(v, kind);
      if (boost::multiprecision::abs(ru - rv) < Real("1e-60")) {
        EXPECT_TRUE(cmp == 0);
      } else {
        EXPECT_EQ(cmp < 0, ru < rv);
      }
    }
  }
}

TEST(Pivot, AlreadyNormalizedIsIdentity) {
  const PivotNormalization p = normalize_pivot(IntMatrix{{1, 1}, {2, 1}});
  EXPECT_TRUE(p.is_identity());
  EXPECT_EQ(p.normalized, (IntMatrix{{1, 1}, {2, 1}}));
}

TEST(Pivot, MovesMaximumToBottomLeft) {
  const PivotNormalization p = normalize_pivot(IntMatrix{{5, 1}, {1, 1}});
  EXPECT_EQ(p.normalized(1, 0), 5);
  const PivotNormalization q = normalize_pivot(IntMatrix{{1, -7}, {2, 3}});
  EXPECT_EQ(q.normalized(1, 0), 7);
  EXPECT_THROW(normalize_pivot(IntMatrix{{0, 0}, {0, 0}}), PreconditionError);
}

TEST(Pivot, TransformIsIsometry) {
  Rng rng(25);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 5));
    const IntMatrix m = rng.matrix(n, 9);
    if (m == IntMatrix(n)) continue;
    const PivotNormalization p = normalize_pivot(m);
    const IntMatrix& mp = p.normalized;
    BigInt max_abs = 0;
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        max_abs = std::max<BigInt>(max_abs, abs(m(r, c)));
        EXPECT_EQ(mp(r, c), p.row_sign[r] * m(p.row_perm[r], p.col_perm[c]));
      }
    }
    EXPECT_EQ(mp(n - 1, 0), max_abs);
    EXPECT_EQ(abs(det(mp)), abs(det(m)));
    IntVector q(n);
    for (auto& v : q) v = rng.uniform(-5, 5);
    const IntVector back = p.map_back(q);
    for (Norm kind : {Norm::L1, Norm::L2, Norm::Linf}) {
      EXPECT_EQ(norm(mp * std::span<const BigInt>(q), kind), norm(m * std::span<const BigInt>(back), kind));
    }
  }
}

TEST(OpNorm, Examples) {
  EXPECT_EQ(op_norm_bound(IntMatrix::identity(3), Norm::Linf), 1);
  EXPECT_EQ(op_norm_bound(IntMatrix{{1, -2}, {3, 4}}, Norm::L1), 6);
  EXPECT_EQ(op_norm_bound(IntMatrix{{1, -2}, {3, 4}}, Norm::Linf), 7);
  EXPECT_EQ(op_norm_bound(IntMatrix{{1, -2}, {3, 4}}, Norm::L2), 30);
}

TEST(OpNorm, BoundsImageNorm) {
  Rng rng(26);
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 4));
    const IntMatrix m = rng.matrix(n, 9);
    IntVector v(n);
    for (auto& x : v) x = rng.uniform(-9, 9);
    for (Norm kind : {Norm::L1, Norm::L2, Norm::Linf}) {
      const Rat image = norm(m * std::span<const BigInt>(v), kind).value;
      const Rat input = norm(v, kind).value;
      EXPECT_LE(image, op_norm_bound(m, kind) * input);
    }
  }
}
