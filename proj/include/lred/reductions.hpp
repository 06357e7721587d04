#pragma once

// The six reductions among SVP, SAP and GDA, each producing a replayable
// certificate of its intermediates and oracle calls.

#include <optional>
#include <string>
#include <vector>

#include "lred/oracles.hpp"
#include "lred/polyalg.hpp"
#include "lred/problems.hpp"

namespace lred {

/// 153/50, the constant dividing the gap of every SAP call made while
/// solving a GDA instance.
Rat series_constant();

/// ceil(log2(d / bound)), or 0 when d <= bound.
BigInt halving_call_bound(const BigInt& d, const Surd& bound);

/// Unimodular matrix with first column w; needs gcd(w) == 1 and w[0] != 0.
IntMatrix complete_to_unimodular(std::span<const BigInt> w);

/// Integer a with gcd(w_1, ..., w_{n-1}, w_n + d*a) == 1, or 0 when gcd(w)
/// is already 1. Needs n >= 2 and some nonzero entry among w_1..w_{n-1}.
BigInt find_coprime_shift(std::span<const BigInt> w, const BigInt& d);

/// Smallest j >= 1 with |c|^j >= (alpha + alpha') ||MA||_op / ((alpha - alpha') |det M|),
/// using the exact operator norm for l1/l_inf and the Frobenius norm for l2.
BigInt relaxed_substitution_exponent(const Rat& alpha, const Rat& alpha_prime, const IntMatrix& ma,
                                     const BigInt& det_m, const BigInt& c, Norm kind);

struct Alg1Step {
  BigInt response;  // raw oracle answer
  BigInt d;         // new working denominator
  RatVector x;      // new working vector
};

struct Alg1Record {
  Surd sap_gap;
  BigInt d0;
  BigInt call_bound;
  std::vector<Alg1Step> steps;
  BigInt output;
  Json to_json() const;
};

struct Alg2Record {
  BigInt d;
  bool direct = false;  // n == 1, answered by a modular inverse
  std::vector<std::size_t> order;  // coordinate order fed to the construction
  BigInt shift;
  IntMatrix unimodular;
  IntMatrix scaled;
  IntVector svp_response;
  bool fallback = false;  // svp answer was in d*Z^n, output is 1
  BigInt output;
  Json to_json() const;
};

struct Alg3Options {
  bool use_gda = false;
  /// Oracle gap for the relaxed substitution; must satisfy 1 <= a' < alpha.
  std::optional<Rat> relaxed_alpha;
};

struct Alg3Record {
  PivotNormalization pivot;
  BigInt det_m;
  BigInt p;
  std::vector<unsigned long> j_steps;  // j_i for i = 2..n
  LinPolyMatrix polymatrix;            // after the loop, before substitution
  BigInt c_raw;
  BigInt c;
  BigInt j;
  BigInt substitution;  // c^j
  IntMatrix m_prime;
  BigInt det_m_prime;
  BigInt adj_n1;
  BigInt adj_n2;
  BigInt b1;
  BigInt b2;
  RatVector x;
  std::string target;  // "sap" or "gda"
  Surd oracle_gap;
  Surd bound;  // N for the GDA call
  BigInt q0;
  IntVector q_prime;
  IntVector output;
  std::optional<Rat> relaxed_alpha;
  std::size_t max_bits = 0;
  Json to_json() const;
};

enum class Route { GdaToSap, SapToSvp, GdaToSvp, SvpToSap, SvpToGda, SapToGda };

std::string route_name(Route r);
Route parse_route(std::string_view text);

struct Certificate {
  Route route = Route::SvpToSap;
  Instance input;
  Json output;
  std::optional<Alg1Record> alg1;
  std::vector<Alg2Record> alg2;
  std::vector<Alg3Record> alg3;
  std::optional<Rat> relaxed_alpha;
  OracleTrace trace;

  std::size_t oracle_calls(const std::string& problem) const;
  Json to_json() const;
};

struct ScalarOutcome {
  BigInt q;
  Certificate cert;
};

struct VectorOutcome {
  IntVector q;
  Certificate cert;
};

/// GDA through repeated SAP calls.
ScalarOutcome gda_to_sap(const GdaInstance& inst, Oracle& oracle);
/// SAP through one SVP call.
ScalarOutcome sap_to_svp(const SapInstance& inst, Oracle& oracle);
/// SVP through one SAP call (or one GDA call with use_gda).
VectorOutcome svp_to_sap(const SvpInstance& inst, Oracle& oracle, const Alg3Options& options = {});
VectorOutcome svp_to_gda(const SvpInstance& inst, Oracle& oracle, Alg3Options options = {});
/// GDA through SVP: each SAP call of the first route answered by the second.
ScalarOutcome gda_to_svp(const GdaInstance& inst, Oracle& oracle);
/// SAP through GDA: the SVP instance built for SAP solved via one GDA call.
ScalarOutcome sap_to_gda(const SapInstance& inst, Oracle& oracle);

Certificate reduce(Route route, const Instance& inst, Oracle& oracle,
                   const std::optional<Rat>& relaxed_alpha = std::nullopt);

/// Re-runs the certificate's route against its recorded oracle answers and
/// reports whether the regenerated certificate is identical.
bool replay(const Json& certificate);

}  // namespace lred
