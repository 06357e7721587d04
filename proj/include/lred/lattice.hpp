#pragma once

// Exact lattice machinery behind the brute-force solvers: integral LLL and
// Schnorr-Euchner enumeration of every lattice vector inside an l_p ball.

#include <cstdint>
#include <functional>
#include <span>

#include "lred/exactlinalg.hpp"
#include "lred/exactnum.hpp"

namespace lred::lattice {

/// LLL-reduces (delta = 99/100) the lattice spanned by the columns of a
/// nonsingular integer matrix, in exact integer arithmetic.
IntMatrix lll_reduce(const IntMatrix& basis);

/// Integer proxy for an l_p norm of an integer vector: the l1 sum, the
/// l_inf maximum, or the squared l2 norm.
BigInt int_norm(std::span<const BigInt> v, Norm kind);

/// Receives each lattice vector v with int_norm(v) <= bound. The visitor may
/// lower `bound`; pruning picks up the new value immediately.
using Visitor = std::function<void(const IntVector& v, const BigInt& norm_value)>;

/// Enumerates every nonzero vector of the lattice spanned by the columns of
/// `basis` whose int_norm is at most `bound`, visiting both v and -v. The
/// search walks the l2 ball that covers the requested l_p ball. Throws
/// LimitExceeded after `max_nodes` tree nodes.
void enumerate(const IntMatrix& basis, Norm kind, BigInt& bound, const Visitor& visit,
               std::uint64_t max_nodes);

}  // namespace lred::lattice
