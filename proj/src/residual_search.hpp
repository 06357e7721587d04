#pragma once

// The lattice d*Z^n + Z*(d x) whose vectors outside d*Z^n are exactly the
// scaled residuals d*{q x}, with bookkeeping to recover q mod d.

#include <cstdint>
#include <functional>

#include "lred/exactlinalg.hpp"
#include "lred/exactnum.hpp"

namespace lred::detail {

class ResidualLattice {
 public:
  ResidualLattice(std::span<const Rat> x, Norm kind);

  const BigInt& d() const { return d_; }
  const IntMatrix& basis() const { return basis_; }

  /// int_norm of d*{q x}.
  BigInt residual_int_norm(const BigInt& q) const;
  NormValue to_norm_value(const BigInt& int_norm) const;

  /// q mod d for a lattice vector v = q*(d x) + d*k.
  BigInt class_of(std::span<const BigInt> v) const;

  /// Calls visit(r, int_norm) for every class r in [1, d-1] whose residual
  /// int_norm is at most `bound`, possibly more than once per class. The
  /// visitor may lower `bound`.
  void visit_classes(BigInt& bound, const std::function<void(const BigInt&, const BigInt&)>& visit,
                     std::uint64_t max_nodes) const;

  /// Smallest q in [1, hi] minimising the residual; hi < d.
  std::pair<BigInt, BigInt> scan_min(const BigInt& hi) const;
  /// Calls visit(q, int_norm) for q = 1..hi in order.
  void scan(const BigInt& hi, const std::function<void(const BigInt&, const BigInt&)>& visit) const;

 private:
  BigInt d_;
  IntVector y_;
  Norm kind_;
  IntMatrix basis_;    // lower triangular, columns span the lattice
  IntVector qcoef_;    // q mod d of each basis column
  IntMatrix reduced_;  // LLL-reduced copy of basis_
};

}  // namespace lred::detail
