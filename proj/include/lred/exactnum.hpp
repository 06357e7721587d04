#pragma once

// Exact scalars: arbitrary-precision integers and rationals (GMP), plus the
// number-theoretic helpers the reductions are written in terms of.

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lred {

using BigInt = mpz_class;
using Rat = mpq_class;
using IntVector = std::vector<BigInt>;
using RatVector = std::vector<Rat>;

/// Builds num/den in lowest terms with a positive denominator.
Rat make_rat(const BigInt& num, const BigInt& den);

BigInt floor_of(const Rat& x);
BigInt ceil_of(const Rat& x);

/// Fractional part with the (-1/2, 1/2] convention: x - frac(x) is the
/// nearest integer to x, ties rounding down.
Rat frac(const Rat& x);
RatVector frac(std::span<const Rat> x);

/// Representative of a mod m with |r| <= m/2; the tie m/2 resolves to +m/2.
BigInt minimal_residue(const BigInt& a, const BigInt& m);

/// Least common denominator: the smallest d > 0 with d*x integral.
BigInt lcd(std::span<const Rat> x);

struct ExtGcd {
  BigInt g;  // gcd(a, b) > 0
  BigInt s;
  BigInt t;  // s*a + t*b == g
};
ExtGcd ext_gcd(const BigInt& a, const BigInt& b);

BigInt gcd_of(std::span<const BigInt> values);

bool is_prime(const BigInt& n);
BigInt least_prime_not_dividing(const BigInt& n);

/// Smallest j >= 0 with |base|^j >= bound, by exact comparison.
BigInt ceil_log(const BigInt& base, const Rat& bound);

/// floor(sqrt(n)) for n >= 0.
BigInt isqrt(const BigInt& n);
/// floor(sqrt(r)) for rational r >= 0.
BigInt floor_sqrt(const Rat& r);

BigInt pow(const BigInt& base, unsigned long exponent);
std::size_t bit_length(const BigInt& n);
std::size_t bit_length(const Rat& x);

std::string to_string(const BigInt& n);
/// "num/den" in lowest terms, or just "num" when the value is an integer.
std::string to_string(const Rat& x);
BigInt parse_int(std::string_view text);
/// Accepts "n", "n/d" and "-n/d"; the result is canonicalized.
Rat parse_rat(std::string_view text);

}  // namespace lred
