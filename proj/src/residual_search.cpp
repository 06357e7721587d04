#include "residual_search.hpp"

#include <cstdlib>
#include <vector>

#include "lred/errors.hpp"
#include "lred/lattice.hpp"

namespace lred::detail {

namespace {

long long minres_ll(long long a, long long m) {
  long long r = a % m;
  if (r < 0) r += m;
  if (2 * r > m) r -= m;
  return r;
}

}  // namespace

ResidualLattice::ResidualLattice(std::span<const Rat> x, Norm kind) : kind_(kind) {
  const std::size_t n = x.size();
  if (n == 0) throw PreconditionError("empty vector");
  d_ = lcd(x);
  if (d_ < 2) throw PreconditionError("x is integral, so no nonzero residual exists");
  for (const auto& v : x) y_.push_back(BigInt(v * Rat(d_)));

  basis_ = IntMatrix(n);
  qcoef_.resize(n);
  IntVector u(n);
  for (std::size_t i = 0; i < n; ++i) u[i] = minimal_residue(y_[i], d_);
  BigInt qu = 1;
  for (std::size_t k = 0; k < n; ++k) {
    const ExtGcd e = ext_gcd(u[k], d_);
    IntVector b(n);
    for (std::size_t i = k; i < n; ++i) b[i] = e.s * u[i];
    b[k] += e.t * d_;
    for (std::size_t i = k + 1; i < n; ++i) b[i] = minimal_residue(b[i], d_);
    basis_.set_column(k, std::span<const BigInt>(b));
    qcoef_[k] = minimal_residue(e.s * qu, d_);

    BigInt dg, ug;
    mpz_divexact(dg.get_mpz_t(), d_.get_mpz_t(), e.g.get_mpz_t());
    mpz_divexact(ug.get_mpz_t(), u[k].get_mpz_t(), e.g.get_mpz_t());
    for (std::size_t i = k + 1; i < n; ++i) u[i] = minimal_residue(dg * u[i], d_);
    u[k] = 0;
    qu = minimal_residue(dg * qu, d_);
  }
  reduced_ = lattice::lll_reduce(basis_);
}

BigInt ResidualLattice::residual_int_norm(const BigInt& q) const {
  IntVector r(y_.size());
  for (std::size_t i = 0; i < y_.size(); ++i) r[i] = minimal_residue(q * y_[i], d_);
  return lattice::int_norm(r, kind_);
}

NormValue ResidualLattice::to_norm_value(const BigInt& int_norm) const {
  const BigInt den = kind_ == Norm::L2 ? BigInt(d_ * d_) : d_;
  return NormValue{kind_, make_rat(int_norm, den)};
}

BigInt ResidualLattice::class_of(std::span<const BigInt> v) const {
  const std::size_t n = v.size();
  IntVector w(n);
  for (std::size_t i = 0; i < n; ++i) {
    BigInt rest = v[i];
    for (std::size_t k = 0; k < i; ++k) rest -= basis_(i, k) * w[k];
    if (!mpz_divisible_p(rest.get_mpz_t(), basis_(i, i).get_mpz_t())) {
      throw ContractError("vector is not in the residual lattice");
    }
    mpz_divexact(w[i].get_mpz_t(), rest.get_mpz_t(), basis_(i, i).get_mpz_t());
  }
  BigInt q = 0;
  for (std::size_t k = 0; k < n; ++k) q += w[k] * qcoef_[k];
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), q.get_mpz_t(), d_.get_mpz_t());
  return r;
}

void ResidualLattice::visit_classes(BigInt& bound,
                                    const std::function<void(const BigInt&, const BigInt&)>& visit,
                                    std::uint64_t max_nodes) const {
  lattice::enumerate(
      reduced_, kind_, bound,
      [&](const IntVector& v, const BigInt&) {
        const BigInt r = class_of(v);
        if (r == 0) return;
        const BigInt nv = residual_int_norm(r);
        if (nv <= bound) visit(r, nv);
      },
      max_nodes);
}

void ResidualLattice::scan(const BigInt& hi,
                           const std::function<void(const BigInt&, const BigInt&)>& visit) const {
  if (d_.fits_slong_p() && d_ < (BigInt(1) << 31)) {
    const long long d = d_.get_si();
    std::vector<long long> y;
    for (const auto& v : y_) y.push_back(minres_ll(v.get_si(), d));
    const long long top = hi.get_si();
    for (long long q = 1; q <= top; ++q) {
      long long acc = 0;
      for (long long yi : y) {
        const long long r = minres_ll(q * yi, d);
        switch (kind_) {
          case Norm::L1:
            acc += std::llabs(r);
            break;
          case Norm::L2:
            acc += r * r;
            break;
          case Norm::Linf:
            if (std::llabs(r) > acc) acc = std::llabs(r);
            break;
        }
      }
      visit(BigInt(static_cast<long>(q)), BigInt(static_cast<long>(acc)));
    }
    return;
  }
  for (BigInt q = 1; q <= hi; ++q) visit(q, residual_int_norm(q));
}

std::pair<BigInt, BigInt> ResidualLattice::scan_min(const BigInt& hi) const {
  BigInt best_q = 0, best = -1;
  scan(hi, [&](const BigInt& q, const BigInt& nv) {
    if (best < 0 || nv < best) {
      best = nv;
      best_q = q;
    }
  });
  return {best_q, best};
}

}  // namespace lred::detail
