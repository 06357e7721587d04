#pragma once

// Instances of the three problems, exact brute-force solvers, contract
// verifiers and a seeded generator.

#include <cstdint>
#include <string>
#include <variant>

#include "lred/exactlinalg.hpp"
#include "lred/exactnum.hpp"

namespace lred {

/// A nonnegative real ratio * sqrt(root). Gaps and GDA bounds take this form
/// once a factor n^(1/2) enters; everything else has root == 1.
struct Surd {
  Rat ratio = 1;
  BigInt root = 1;

  Surd() = default;
  Surd(Rat r) : ratio(std::move(r)) {}  // NOLINT: implicit on purpose
  Surd(Rat r, BigInt s);

  /// The exact square ratio^2 * root.
  Rat square() const;
  BigInt floor() const;
  bool is_rational() const { return root == 1; }
  std::string to_string() const;

  friend Surd operator*(const Surd& a, const Surd& b);
  friend Surd operator/(const Surd& a, const Rat& b);
  friend Surd operator/(const Surd& a, const Surd& b);
  friend bool operator==(const Surd& a, const Surd& b);
  friend std::strong_ordering operator<=>(const Surd& a, const Surd& b);
};

/// n^(1/p) for the given norm: n, sqrt(n) or 1.
Surd norm_root(std::size_t n, Norm kind);

Surd max_with_one(const Surd& g);
Surd min_with_one(const Surd& g);

/// u <= g * w with exact arithmetic (squared values for L2).
bool within_gap(const NormValue& u, const Surd& g, const NormValue& w);

/// The exact ratio u / w (its square under L2); throws if w is zero.
Rat achieved_ratio(const NormValue& u, const NormValue& w);

struct SvpInstance {
  Surd alpha;
  IntMatrix m;
  Norm norm = Norm::Linf;
};

struct SapInstance {
  Surd alpha;
  RatVector x;
  Norm norm = Norm::Linf;
};

struct GdaInstance {
  Surd alpha;
  Surd bound;  // N
  RatVector x;
  Norm norm = Norm::Linf;
};

using Instance = std::variant<SvpInstance, SapInstance, GdaInstance>;

std::string problem_name(const Instance& inst);

/// Norm of M q.
NormValue lattice_norm(const IntMatrix& m, std::span<const BigInt> q, Norm kind);
/// Norm of {q x}.
NormValue residual_norm(std::span<const Rat> x, const BigInt& q, Norm kind);

struct BruteLimits {
  std::size_t max_dim = 6;
  /// Multiplier ranges up to this size are scanned directly; larger ones go
  /// through lattice enumeration.
  BigInt max_lcd = 1000000;
  std::uint64_t max_nodes = 200000000;
};

/// Exact shortest nonzero vector; ties go to the lexicographically smallest
/// q with first nonzero coordinate positive.
IntVector brute_svp(const SvpInstance& inst, const BruteLimits& limits = {});
NormValue svp_minimum(const SvpInstance& inst, const BruteLimits& limits = {});

/// Smallest q in [1, lcd(x) - 1] minimising ||{q x}||.
BigInt brute_sap(const SapInstance& inst, const BruteLimits& limits = {});
NormValue sap_minimum(const SapInstance& inst, const BruteLimits& limits = {});

/// Number of multipliers a GDA solver searches: floor(min(alpha, 1) * N).
BigInt gda_search_range(const GdaInstance& inst);
/// Smallest q in [1, gda_search_range] minimising ||{q x}||.
BigInt brute_gda(const GdaInstance& inst, const BruteLimits& limits = {});
/// The minimum over [gda_search_range].
NormValue gda_minimum(const GdaInstance& inst, const BruteLimits& limits = {});

/// The admissible answers of largest norm: norm at most max(alpha, 1) times
/// the exact minimum (over the search range for GDA, with outputs anywhere in
/// [floor(alpha N)]). Ties break as for the brute solvers.
IntVector worst_svp(const SvpInstance& inst, const BruteLimits& limits = {});
BigInt worst_sap(const SapInstance& inst, const BruteLimits& limits = {});
BigInt worst_gda(const GdaInstance& inst, const BruteLimits& limits = {});

struct Verdict {
  bool ok = false;
  std::string reason;  // "ok", "zero output", "range", "gap", "shape"
  NormValue achieved;
  NormValue reference;
  /// achieved / reference (squared under L2), when the reference is nonzero.
  std::string ratio;
};

Verdict verify_svp(const SvpInstance& inst, std::span<const BigInt> q, const BruteLimits& limits = {});
Verdict verify_sap(const SapInstance& inst, const BigInt& q, const BruteLimits& limits = {});
Verdict verify_gda(const GdaInstance& inst, const BigInt& q, const BruteLimits& limits = {});

/// Seeded generators, identical across runs and platforms.
SvpInstance gen_svp(std::size_t n, long max_entry, std::uint64_t seed, Norm norm = Norm::Linf,
                    const Surd& alpha = Surd(1));
SapInstance gen_sap(std::size_t n, long max_den, std::uint64_t seed, Norm norm = Norm::Linf,
                    const Surd& alpha = Surd(1));
GdaInstance gen_gda(std::size_t n, long max_den, std::uint64_t seed, Norm norm = Norm::Linf,
                    const Surd& alpha = Surd(1));

}  // namespace lred
