#include "lred/lattice.hpp"

#include <algorithm>
#include <utility>
#include <vector>

#include "lred/errors.hpp"

namespace lred::lattice {

namespace {

BigInt dot(const IntVector& a, const IntVector& b) {
  BigInt s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

BigInt divexact(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Nearest integer to num/den (den > 0), ties rounding up.
BigInt round_div(const BigInt& num, const BigInt& den) {
  BigInt q;
  BigInt t = 2 * num + den;
  BigInt d2 = 2 * den;
  mpz_fdiv_q(q.get_mpz_t(), t.get_mpz_t(), d2.get_mpz_t());
  return q;
}

// Integral LLL in the formulation that keeps d_i = prod |b*_j|^2 and
// lambda_ij = d_j mu_ij as integers. Indices are 1-based to mirror it.
class IntegralLll {
 public:
  explicit IntegralLll(std::vector<IntVector> b) : n_(b.size()), b_(std::move(b)) {
    b_.insert(b_.begin(), IntVector{});
    d_.assign(n_ + 1, BigInt(0));
    lam_.assign(n_ + 1, std::vector<BigInt>(n_ + 1));
  }

  std::vector<IntVector> run() {
    if (n_ <= 1) return {b_.begin() + 1, b_.end()};
    std::size_t k = 2, kmax = 1;
    d_[0] = 1;
    d_[1] = dot(b_[1], b_[1]);
    while (k <= n_) {
      if (k > kmax) {
        kmax = k;
        extend_gram_schmidt(k);
      }
      while (true) {
        reduce(k, k - 1);
        // Lovasz with delta = 99/100.
        const BigInt lhs = 100 * d_[k] * d_[k - 2];
        const BigInt rhs = 99 * d_[k - 1] * d_[k - 1] - 100 * lam_[k][k - 1] * lam_[k][k - 1];
        if (lhs < rhs) {
          swap(k, kmax);
          k = std::max<std::size_t>(2, k - 1);
          continue;
        }
        for (std::size_t l = k - 1; l-- > 1;) reduce(k, l);
        ++k;
        break;
      }
    }
    return {b_.begin() + 1, b_.end()};
  }

 private:
  void extend_gram_schmidt(std::size_t k) {
    for (std::size_t j = 1; j <= k; ++j) {
      BigInt u = dot(b_[k], b_[j]);
      for (std::size_t i = 1; i < j; ++i) u = divexact(d_[i] * u - lam_[k][i] * lam_[j][i], d_[i - 1]);
      if (j < k) {
        lam_[k][j] = u;
      } else {
        if (u == 0) throw PreconditionError("lll_reduce: basis vectors are linearly dependent");
        d_[k] = u;
      }
    }
  }

  void reduce(std::size_t k, std::size_t l) {
    if (2 * abs(lam_[k][l]) <= d_[l]) return;
    const BigInt q = round_div(lam_[k][l], d_[l]);
    for (std::size_t r = 0; r < b_[k].size(); ++r) b_[k][r] -= q * b_[l][r];
    lam_[k][l] -= q * d_[l];
    for (std::size_t i = 1; i < l; ++i) lam_[k][i] -= q * lam_[l][i];
  }

  void swap(std::size_t k, std::size_t kmax) {
    std::swap(b_[k], b_[k - 1]);
    for (std::size_t j = 1; j + 1 < k; ++j) std::swap(lam_[k][j], lam_[k - 1][j]);
    const BigInt lam = lam_[k][k - 1];
    const BigInt big = divexact(d_[k - 2] * d_[k] + lam * lam, d_[k - 1]);
    for (std::size_t i = k + 1; i <= kmax; ++i) {
      const BigInt t = lam_[i][k];
      lam_[i][k] = divexact(d_[k] * lam_[i][k - 1] - lam * t, d_[k - 1]);
      lam_[i][k - 1] = divexact(big * t + lam * lam_[i][k], d_[k]);
    }
    d_[k - 1] = big;
  }

  std::size_t n_;
  std::vector<IntVector> b_;
  std::vector<BigInt> d_;
  std::vector<std::vector<BigInt>> lam_;
};

class Enumerator {
 public:
  Enumerator(const IntMatrix& basis, Norm kind, BigInt& bound, const Visitor& visit,
             std::uint64_t max_nodes)
      : n_(basis.dim()), basis_(basis), kind_(kind), bound_(bound), visit_(visit),
        max_nodes_(max_nodes), mu_(n_, RatVector(n_)), bstar_sq_(n_), w_(n_) {
    std::vector<RatVector> bstar(n_, RatVector(n_));
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t r = 0; r < n_; ++r) bstar[i][r] = basis(r, i);
      for (std::size_t j = 0; j < i; ++j) {
        Rat ip = 0;
        for (std::size_t r = 0; r < n_; ++r) ip += Rat(basis(r, i)) * bstar[j][r];
        mu_[i][j] = ip / bstar_sq_[j];
        for (std::size_t r = 0; r < n_; ++r) bstar[i][r] -= mu_[i][j] * bstar[j][r];
      }
      Rat sq = 0;
      for (std::size_t r = 0; r < n_; ++r) sq += bstar[i][r] * bstar[i][r];
      if (sq == 0) throw PreconditionError("enumerate: basis is singular");
      bstar_sq_[i] = sq;
    }
  }

  void run() { descend(n_ - 1, Rat(0)); }

 private:
  // Squared l2 radius of the ball containing {v : int_norm(v) <= bound}.
  Rat radius_sq() const {
    switch (kind_) {
      case Norm::L2:
        return Rat(bound_);
      case Norm::L1:
        return Rat(bound_ * bound_);
      case Norm::Linf:
        return Rat(bound_ * bound_ * static_cast<unsigned long>(n_));
    }
    return 0;
  }

  void descend(std::size_t k, const Rat& rho) {
    Rat center = 0;
    for (std::size_t j = k + 1; j < n_; ++j) center -= mu_[j][k] * Rat(w_[j]);
    BigInt lo = floor_of(center);
    BigInt hi = lo + 1;
    bool lo_open = true, hi_open = true;
    while (lo_open || hi_open) {
      bool take_lo;
      if (lo_open && hi_open) {
        take_lo = (center - Rat(lo)) <= (Rat(hi) - center);
      } else {
        take_lo = lo_open;
      }
      BigInt& cand = take_lo ? lo : hi;
      if (++nodes_ > max_nodes_) throw LimitExceeded("lattice enumeration exceeded its node budget");
      const Rat offset = Rat(cand) - center;
      const Rat partial = rho + offset * offset * bstar_sq_[k];
      if (partial > radius_sq()) {
        (take_lo ? lo_open : hi_open) = false;
        continue;
      }
      w_[k] = cand;
      if (k == 0) {
        leaf();
      } else {
        descend(k - 1, partial);
      }
      if (take_lo) {
        --lo;
      } else {
        ++hi;
      }
    }
    w_[k] = 0;
  }

  void leaf() {
    if (std::all_of(w_.begin(), w_.end(), [](const BigInt& v) { return v == 0; })) return;
    IntVector v = basis_ * std::span<const BigInt>(w_);
    BigInt nv = int_norm(v, kind_);
    if (nv <= bound_) visit_(v, nv);
  }

  std::size_t n_;
  const IntMatrix& basis_;
  Norm kind_;
  BigInt& bound_;
  const Visitor& visit_;
  std::uint64_t max_nodes_;
  std::uint64_t nodes_ = 0;
  std::vector<RatVector> mu_;
  RatVector bstar_sq_;
  IntVector w_;
};

}  // namespace

IntMatrix lll_reduce(const IntMatrix& basis) {
  const std::size_t n = basis.dim();
  std::vector<IntVector> cols;
  for (std::size_t c = 0; c < n; ++c) cols.push_back(basis.column(c));
  auto reduced = IntegralLll(std::move(cols)).run();
  IntMatrix out(n);
  for (std::size_t c = 0; c < n; ++c) out.set_column(c, std::span<const BigInt>(reduced[c]));
  return out;
}

BigInt int_norm(std::span<const BigInt> v, Norm kind) {
  BigInt acc = 0;
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
  return acc;
}

void enumerate(const IntMatrix& basis, Norm kind, BigInt& bound, const Visitor& visit,
               std::uint64_t max_nodes) {
  if (!basis.is_square() || basis.dim() == 0) throw PreconditionError("enumerate: need a square basis");
  Enumerator(basis, kind, bound, visit, max_nodes).run();
}

}  // namespace lred::lattice
