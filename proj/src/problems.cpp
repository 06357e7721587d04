#include "lred/problems.hpp"

#include <algorithm>
#include <random>
#include <utility>

#include "lred/errors.hpp"
#include "lred/lattice.hpp"
#include "residual_search.hpp"

namespace lred {

Surd::Surd(Rat r, BigInt s) : ratio(std::move(r)), root(std::move(s)) {
  if (root < 1) throw PreconditionError("surd radicand must be positive");
  ratio.canonicalize();
  const BigInt s_root = isqrt(root);
  if (s_root * s_root == root) {
    ratio *= Rat(s_root);
    root = 1;
    return;
  }
  // small square factors only; radicands here are dimensions
  for (unsigned long p = 2; p <= 1000000 && BigInt(p * p) <= root; ++p) {
    const BigInt sq = BigInt(p * p);
    while (root % sq == 0) {
      root /= sq;
      ratio *= Rat(p);
    }
  }
}

Rat Surd::square() const { return ratio * ratio * Rat(root); }

BigInt Surd::floor() const {
  if (ratio < 0) throw PreconditionError("floor of a negative surd");
  return floor_sqrt(square());
}

std::string Surd::to_string() const {
  if (root == 1) return lred::to_string(ratio);
  return lred::to_string(ratio) + "*sqrt(" + lred::to_string(root) + ")";
}

Surd operator*(const Surd& a, const Surd& b) { return Surd(a.ratio * b.ratio, a.root * b.root); }

Surd operator/(const Surd& a, const Rat& b) {
  if (b == 0) throw PreconditionError("surd division by zero");
  return Surd(a.ratio / b, a.root);
}

Surd operator/(const Surd& a, const Surd& b) {
  if (b.ratio == 0) throw PreconditionError("surd division by zero");
  return Surd(a.ratio / (b.ratio * Rat(b.root)), a.root * b.root);
}

bool operator==(const Surd& a, const Surd& b) { return (a <=> b) == std::strong_ordering::equal; }

std::strong_ordering operator<=>(const Surd& a, const Surd& b) {
  const int c = cmp(a.square(), b.square());
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Surd norm_root(std::size_t n, Norm kind) {
  switch (kind) {
    case Norm::L1:
      return Surd(Rat(static_cast<unsigned long>(n)));
    case Norm::L2:
      return Surd(Rat(1), BigInt(static_cast<unsigned long>(n)));
    case Norm::Linf:
      return Surd(Rat(1));
  }
  return Surd(Rat(1));
}

Surd max_with_one(const Surd& g) { return g < Surd(Rat(1)) ? Surd(Rat(1)) : g; }
Surd min_with_one(const Surd& g) { return g < Surd(Rat(1)) ? g : Surd(Rat(1)); }

bool within_gap(const NormValue& u, const Surd& g, const NormValue& w) {
  if (u.kind != w.kind) throw PreconditionError("comparing norm values of different kinds");
  if (u.kind == Norm::L2) return u.value <= g.square() * w.value;
  return u.value * u.value <= g.square() * w.value * w.value;
}

Rat achieved_ratio(const NormValue& u, const NormValue& w) {
  if (u.kind != w.kind) throw PreconditionError("comparing norm values of different kinds");
  if (w.value == 0) throw PreconditionError("ratio against a zero reference");
  return u.value / w.value;
}

std::string problem_name(const Instance& inst) {
  switch (inst.index()) {
    case 0:
      return "svp";
    case 1:
      return "sap";
    default:
      return "gda";
  }
}

NormValue lattice_norm(const IntMatrix& m, std::span<const BigInt> q, Norm kind) {
  const IntVector v = m * q;
  return norm(std::span<const BigInt>(v), kind);
}

NormValue residual_norm(std::span<const Rat> x, const BigInt& q, Norm kind) {
  RatVector r;
  r.reserve(x.size());
  for (const auto& v : x) r.push_back(frac(Rat(q) * v));
  return norm(std::span<const Rat>(r), kind);
}

// ---------------------------------------------------------------------------
// SVP

namespace {

void check_svp(const SvpInstance& inst, const BruteLimits& limits) {
  if (!inst.m.is_square() || inst.m.dim() == 0) throw PreconditionError("svp: matrix must be square");
  if (inst.m.dim() > limits.max_dim) {
    throw LimitExceeded("svp: dimension " + std::to_string(inst.m.dim()) + " exceeds enumeration limit " +
                        std::to_string(limits.max_dim));
  }
  if (det(inst.m) == 0) throw PreconditionError("svp: matrix is singular");
}

IntVector canonical(IntVector q) {
  for (const auto& v : q) {
    if (v == 0) continue;
    if (v < 0) {
      for (auto& w : q) w = -w;
    }
    break;
  }
  return q;
}

bool lex_less(const IntVector& a, const IntVector& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      [](const BigInt& x, const BigInt& y) { return x < y; });
}

struct SvpBest {
  BigInt int_norm;
  IntVector q;
};

IntVector coefficients(const IntMatrix& adj, const BigInt& d, const IntVector& v) {
  IntVector q = adj * std::span<const BigInt>(v);
  for (auto& c : q) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
  return q;
}

SvpBest svp_search(const SvpInstance& inst, const BruteLimits& limits) {
  check_svp(inst, limits);
  const IntMatrix reduced = lattice::lll_reduce(inst.m);
  BigInt bound = -1;
  for (std::size_t c = 0; c < reduced.dim(); ++c) {
    const IntVector col = reduced.column(c);
    const BigInt nv = lattice::int_norm(col, inst.norm);
    if (bound < 0 || nv < bound) bound = nv;
  }
  std::vector<IntVector> minimal;
  lattice::enumerate(
      reduced, inst.norm, bound,
      [&](const IntVector& v, const BigInt& nv) {
        if (nv < bound) {
          bound = nv;
          minimal.clear();
        }
        minimal.push_back(v);
      },
      limits.max_nodes);
  const IntMatrix adj = adjugate(inst.m);
  const BigInt d = det(inst.m);
  SvpBest best{bound, {}};
  for (const auto& v : minimal) {
    IntVector q = canonical(coefficients(adj, d, v));
    if (best.q.empty() || lex_less(q, best.q)) best.q = std::move(q);
  }
  return best;
}

}  // namespace

IntVector brute_svp(const SvpInstance& inst, const BruteLimits& limits) {
  return svp_search(inst, limits).q;
}

NormValue svp_minimum(const SvpInstance& inst, const BruteLimits& limits) {
  return NormValue{inst.norm, Rat(svp_search(inst, limits).int_norm)};
}

// ---------------------------------------------------------------------------
// SAP and GDA

namespace {

void check_vector(std::span<const Rat> x, const BruteLimits& limits) {
  if (x.empty()) throw PreconditionError("empty vector");
  if (x.size() > limits.max_dim) {
    throw LimitExceeded("dimension " + std::to_string(x.size()) + " exceeds enumeration limit " +
                        std::to_string(limits.max_dim));
  }
}

struct Multiplier {
  BigInt q;
  BigInt int_norm;
};

// Smallest q in [1, d/2] with the least residual; every class has a
// representative there up to sign.
Multiplier sap_search(const detail::ResidualLattice& rl, const BruteLimits& limits) {
  const BigInt& d = rl.d();
  const BigInt hi = d / 2;
  if (hi <= limits.max_lcd) {
    auto [q, nv] = rl.scan_min(hi);
    return {q, nv};
  }
  Multiplier best{1, rl.residual_int_norm(1)};
  BigInt bound = best.int_norm;
  rl.visit_classes(
      bound,
      [&](const BigInt& r, const BigInt& nv) {
        const BigInt rep = std::min<BigInt>(r, d - r);
        if (nv < best.int_norm || (nv == best.int_norm && rep < best.q)) {
          best = {rep, nv};
          bound = nv;
        }
      },
      limits.max_nodes);
  return best;
}

Multiplier gda_search(const GdaInstance& inst, const BruteLimits& limits) {
  check_vector(inst.x, limits);
  const BigInt range = gda_search_range(inst);
  if (range < 1) throw PreconditionError("gda: floor(min(alpha, 1) * N) < 1, so no candidate exists");
  const BigInt d = lcd(inst.x);
  if (d == 1) return {1, 0};
  if (range >= d) return {d, 0};
  const detail::ResidualLattice rl(inst.x, inst.norm);
  if (range <= limits.max_lcd) {
    auto [q, nv] = rl.scan_min(range);
    return {q, nv};
  }
  const Multiplier sap = sap_search(rl, limits);
  if (sap.q <= range) return sap;
  // Widen the radius until some class with a representative in range shows up.
  const BigInt cap = rl.residual_int_norm(1);
  BigInt radius = sap.int_norm;
  while (true) {
    bool found = false;
    Multiplier best;
    BigInt bound = radius;
    rl.visit_classes(
        bound,
        [&](const BigInt& r, const BigInt& nv) {
          if (r > range) return;
          if (!found || nv < best.int_norm || (nv == best.int_norm && r < best.q)) {
            found = true;
            best = {r, nv};
            bound = nv;
          }
        },
        limits.max_nodes);
    if (found) return best;
    radius *= inst.norm == Norm::L2 ? 4 : 2;
    if (radius > cap) radius = cap;
  }
}

}  // namespace

BigInt brute_sap(const SapInstance& inst, const BruteLimits& limits) {
  check_vector(inst.x, limits);
  const detail::ResidualLattice rl(inst.x, inst.norm);
  return sap_search(rl, limits).q;
}

NormValue sap_minimum(const SapInstance& inst, const BruteLimits& limits) {
  check_vector(inst.x, limits);
  const detail::ResidualLattice rl(inst.x, inst.norm);
  return rl.to_norm_value(sap_search(rl, limits).int_norm);
}

BigInt gda_search_range(const GdaInstance& inst) { return (min_with_one(inst.alpha) * inst.bound).floor(); }

BigInt brute_gda(const GdaInstance& inst, const BruteLimits& limits) { return gda_search(inst, limits).q; }

NormValue gda_minimum(const GdaInstance& inst, const BruteLimits& limits) {
  return residual_norm(inst.x, gda_search(inst, limits).q, inst.norm);
}

// ---------------------------------------------------------------------------
// Worst admissible answers

namespace {

// Largest integer norm proxy allowed for a gap g over a minimum `least`.
BigInt admissible_bound(const BigInt& least, const Surd& g, Norm kind) {
  const Rat g2 = max_with_one(g).square();
  if (kind == Norm::L2) return floor_of(g2 * Rat(least));
  return floor_sqrt(g2 * Rat(least * least));
}

}  // namespace

IntVector worst_svp(const SvpInstance& inst, const BruteLimits& limits) {
  const SvpBest least = svp_search(inst, limits);
  const IntMatrix reduced = lattice::lll_reduce(inst.m);
  BigInt bound = admissible_bound(least.int_norm, inst.alpha, inst.norm);
  const BigInt fixed = bound;
  BigInt top = -1;
  std::vector<IntVector> widest;
  lattice::enumerate(
      reduced, inst.norm, bound,
      [&](const IntVector& v, const BigInt& nv) {
        if (nv > top) {
          top = nv;
          widest.clear();
        }
        if (nv == top) widest.push_back(v);
      },
      limits.max_nodes);
  if (bound != fixed) throw ContractError("worst_svp: enumeration bound moved");
  const IntMatrix adj = adjugate(inst.m);
  const BigInt d = det(inst.m);
  IntVector best;
  for (const auto& v : widest) {
    IntVector q = canonical(coefficients(adj, d, v));
    if (best.empty() || lex_less(q, best)) best = std::move(q);
  }
  return best;
}

BigInt worst_sap(const SapInstance& inst, const BruteLimits& limits) {
  check_vector(inst.x, limits);
  const detail::ResidualLattice rl(inst.x, inst.norm);
  const Multiplier least = sap_search(rl, limits);
  BigInt bound = admissible_bound(least.int_norm, inst.alpha, inst.norm);
  Multiplier best{0, -1};
  auto consider = [&](const BigInt& q, const BigInt& nv) {
    if (nv > bound) return;
    if (nv > best.int_norm || (nv == best.int_norm && q < best.q)) best = {q, nv};
  };
  const BigInt hi = rl.d() - 1;
  if (hi <= limits.max_lcd) {
    rl.scan(hi, consider);
  } else {
    rl.visit_classes(bound, consider, limits.max_nodes);
  }
  return best.q;
}

BigInt worst_gda(const GdaInstance& inst, const BruteLimits& limits) {
  const Multiplier least = gda_search(inst, limits);
  if (least.int_norm == 0) return least.q;
  const BigInt top = (inst.alpha * inst.bound).floor();
  const detail::ResidualLattice rl(inst.x, inst.norm);
  BigInt bound = admissible_bound(least.int_norm, inst.alpha, inst.norm);
  Multiplier best{0, -1};
  auto consider = [&](const BigInt& q, const BigInt& nv) {
    if (nv > bound || q > top) return;
    if (nv > best.int_norm || (nv == best.int_norm && q < best.q)) best = {q, nv};
  };
  const BigInt hi = top < rl.d() ? top : BigInt(rl.d() - 1);
  if (hi <= limits.max_lcd) {
    rl.scan(hi, consider);
  } else {
    rl.visit_classes(bound, consider, limits.max_nodes);
  }
  return best.q;
}

// ---------------------------------------------------------------------------
// Verification

namespace {

Verdict judge(const NormValue& achieved, const NormValue& reference, const Surd& alpha) {
  Verdict v;
  v.achieved = achieved;
  v.reference = reference;
  if (reference.value != 0) v.ratio = to_string(achieved_ratio(achieved, reference));
  v.ok = within_gap(achieved, max_with_one(alpha), reference);
  v.reason = v.ok ? "ok" : "gap";
  return v;
}

Verdict reject(std::string reason, Norm kind) {
  Verdict v;
  v.reason = std::move(reason);
  v.achieved = NormValue{kind, 0};
  v.reference = NormValue{kind, 0};
  return v;
}

}  // namespace

Verdict verify_svp(const SvpInstance& inst, std::span<const BigInt> q, const BruteLimits& limits) {
  if (q.size() != inst.m.cols()) return reject("shape", inst.norm);
  const NormValue achieved = lattice_norm(inst.m, q, inst.norm);
  if (achieved.value == 0) return reject("zero output", inst.norm);
  return judge(achieved, svp_minimum(inst, limits), inst.alpha);
}

Verdict verify_sap(const SapInstance& inst, const BigInt& q, const BruteLimits& limits) {
  check_vector(inst.x, limits);
  const NormValue achieved = residual_norm(inst.x, q, inst.norm);
  if (achieved.value == 0) return reject("zero output", inst.norm);
  return judge(achieved, sap_minimum(inst, limits), inst.alpha);
}

Verdict verify_gda(const GdaInstance& inst, const BigInt& q, const BruteLimits& limits) {
  check_vector(inst.x, limits);
  const BigInt top = (inst.alpha * inst.bound).floor();
  if (q < 1 || q > top) {
    Verdict v = reject("range", inst.norm);
    v.achieved = residual_norm(inst.x, q, inst.norm);
    return v;
  }
  return judge(residual_norm(inst.x, q, inst.norm), gda_minimum(inst, limits), inst.alpha);
}

// ---------------------------------------------------------------------------
// Generation

namespace {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  // Uniform on [0, n) by rejection, independent of the standard library's
  // distribution implementations.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t v;
    do {
      v = eng_();
    } while (v >= limit);
    return v % n;
  }

  long between(long lo, long hi) {
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

 private:
  std::mt19937_64 eng_;
};

RatVector random_vector(Rng& rng, std::size_t n, long max_den) {
  if (max_den < 2) throw PreconditionError("maximum denominator must be at least 2");
  while (true) {
    const long d = rng.between(2, max_den);
    RatVector x;
    for (std::size_t i = 0; i < n; ++i) x.push_back(make_rat(BigInt(rng.between(0, d - 1)), BigInt(d)));
    if (lcd(x) >= 2) return x;
  }
}

}  // namespace

SvpInstance gen_svp(std::size_t n, long max_entry, std::uint64_t seed, Norm norm, const Surd& alpha) {
  if (n == 0 || max_entry < 1) throw PreconditionError("gen_svp: need n >= 1 and max_entry >= 1");
  Rng rng(seed);
  while (true) {
    IntMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = rng.between(-max_entry, max_entry);
    if (det(m) != 0) return SvpInstance{alpha, std::move(m), norm};
  }
}

SapInstance gen_sap(std::size_t n, long max_den, std::uint64_t seed, Norm norm, const Surd& alpha) {
  if (n == 0) throw PreconditionError("gen_sap: need n >= 1");
  Rng rng(seed);
  return SapInstance{alpha, random_vector(rng, n, max_den), norm};
}

GdaInstance gen_gda(std::size_t n, long max_den, std::uint64_t seed, Norm norm, const Surd& alpha) {
  if (n == 0) throw PreconditionError("gen_gda: need n >= 1");
  Rng rng(seed);
  RatVector x = random_vector(rng, n, max_den);
  const BigInt d = lcd(x);
  const long shift = rng.between(0, static_cast<long>(bit_length(d)));
  BigInt bound = d >> static_cast<unsigned long>(shift);
  if (bound < 1) bound = 1;
  const Rat g2 = min_with_one(alpha).square();
  while (g2 * Rat(bound * bound) < 1) ++bound;
  return GdaInstance{alpha, Surd(Rat(bound)), std::move(x), norm};
}

}  // namespace lred
