#include "lred/exactnum.hpp"

#include <algorithm>
#include <cctype>

#include "lred/errors.hpp"

namespace lred {

Rat make_rat(const BigInt& num, const BigInt& den) {
  if (den == 0) throw PreconditionError("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

BigInt floor_of(const Rat& x) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

BigInt ceil_of(const Rat& x) {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

Rat frac(const Rat& x) {
  // x - ceil(x - 1/2) lands in (-1/2, 1/2].
  const Rat shifted = x - Rat(1, 2);
  return x - Rat(ceil_of(shifted));
}

RatVector frac(std::span<const Rat> x) {
  RatVector out;
  out.reserve(x.size());
  for (const auto& v : x) out.push_back(frac(v));
  return out;
}

BigInt minimal_residue(const BigInt& a, const BigInt& m) {
  if (m <= 0) throw PreconditionError("minimal_residue: modulus must be positive");
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  if (2 * r > m) r -= m;
  return r;
}

BigInt lcd(std::span<const Rat> x) {
  BigInt d = 1;
  for (const auto& v : x) {
    mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), v.get_den_mpz_t());
  }
  return d;
}

ExtGcd ext_gcd(const BigInt& a, const BigInt& b) {
  if (a == 0 && b == 0) throw PreconditionError("ext_gcd: both arguments are zero");
  ExtGcd r;
  mpz_gcdext(r.g.get_mpz_t(), r.s.get_mpz_t(), r.t.get_mpz_t(), a.get_mpz_t(),
             b.get_mpz_t());
  return r;
}

BigInt gcd_of(std::span<const BigInt> values) {
  BigInt g = 0;
  for (const auto& v : values) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  return g;
}

bool is_prime(const BigInt& n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (mpz_even_p(n.get_mpz_t())) return false;
  for (BigInt f = 3; f * f <= n; f += 2) {
    if (mpz_divisible_p(n.get_mpz_t(), f.get_mpz_t())) return false;
  }
  return true;
}

BigInt least_prime_not_dividing(const BigInt& n) {
  if (n == 0) throw PreconditionError("least_prime_not_dividing: argument is zero");
  // Every prime below the answer divides n, so the search stays short.
  for (BigInt p = 2;; ++p) {
    if (!is_prime(p)) continue;
    if (!mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) return p;
  }
}

BigInt ceil_log(const BigInt& base, const Rat& bound) {
  const BigInt b = abs(base);
  if (b < 2) throw PreconditionError("ceil_log: |base| must be at least 2");
  if (bound <= 0) throw PreconditionError("ceil_log: bound must be positive");
  BigInt j = 0;
  BigInt power = 1;
  while (Rat(power) < bound) {
    power *= b;
    ++j;
  }
  return j;
}

BigInt isqrt(const BigInt& n) {
  if (n < 0) throw PreconditionError("isqrt of a negative number");
  BigInt r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

BigInt floor_sqrt(const Rat& r) {
  if (r < 0) throw PreconditionError("floor_sqrt of a negative number");
  // floor(sqrt(r)) == isqrt(floor(r)) since the squares bracketing the
  // answer are integers.
  return isqrt(floor_of(r));
}

BigInt pow(const BigInt& base, unsigned long exponent) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

std::size_t bit_length(const BigInt& n) {
  if (n == 0) return 0;
  return mpz_sizeinbase(n.get_mpz_t(), 2);
}

std::size_t bit_length(const Rat& x) {
  return std::max(bit_length(BigInt(x.get_num())), bit_length(BigInt(x.get_den())));
}

std::string to_string(const BigInt& n) { return n.get_str(10); }

std::string to_string(const Rat& x) { return x.get_str(10); }

namespace {

bool is_decimal(std::string_view s) {
  std::size_t i = 0;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

BigInt parse_int(std::string_view text) {
  if (!is_decimal(text)) throw ParseError("not a decimal integer: '" + std::string(text) + "'");
  std::string s(text);
  if (s[0] == '+') s.erase(0, 1);
  return BigInt(s, 10);
}

Rat parse_rat(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rat(parse_int(text));
  const BigInt num = parse_int(text.substr(0, slash));
  const auto den_text = text.substr(slash + 1);
  if (!den_text.empty() && den_text[0] == '-') {
    throw ParseError("denominator must be positive: '" + std::string(text) + "'");
  }
  const BigInt den = parse_int(den_text);
  if (den == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
  return make_rat(num, den);
}

}  // namespace lred
