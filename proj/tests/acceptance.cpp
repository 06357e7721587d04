// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <mutex>
#include <sstream>

#include "lred/errors.hpp"
#include "lred/oracles.hpp"
#include "lred/polyalg.hpp"
#include "lred/reductions.hpp"
#include "support.hpp"

using namespace lred;
using lred::testing::parallel_for;

namespace {

std::mutex tally_mu;

struct Tally {
  std::size_t total = 0;
  std::size_t failed = 0;
  std::string first_failure;

  void record(bool ok, const std::string& what) {
    std::lock_guard lock(tally_mu);
    ++total;
    if (!ok) {
      if (failed++ == 0) first_failure = what;
    }
  }
  bool ok() const { return total > 0 && failed == 0; }
  std::string summary() const {
    std::ostringstream out;
    out << (total - failed) << "/" << total << " checks";
    if (failed) out << "; first failure: " << first_failure;
    return out.str();
  }
};

std::string label(const char* what, std::size_t n, Norm kind, std::uint64_t seed) {
  std::ostringstream out;
  out << what << " n=" << n << " norm=" << norm_name(kind) << " seed=" << seed;
  return out.str();
}

// Runs `body`, turning any exception into a failed check.
void guarded(Tally& t, const std::string& what, const std::function<bool()>& body) {
  try {
    t.record(body(), what);
  } catch (const std::exception& e) {
    t.record(false, what + ": " + e.what());
  }
}

bool alg3_invariants(const Alg3Record& r) {
  for (std::size_t k = 0; k < r.j_steps.size(); ++k) {
    const std::size_t i = k + 2;
    if (r.j_steps[k] > 2 * i - 2) return false;
  }
  if (gcd(r.adj_n1, r.adj_n2) != 1) return false;
  return !r.x.empty() && r.x.back() == make_rat(1, r.det_m_prime);
}

constexpr Norm kNorms[] = {Norm::L1, Norm::L2, Norm::Linf};

// GDA gaps start at the series constant: below it the SAP calls would need a
// gap under 1, which no oracle can meet.
Surd gda_gap(std::size_t i) {
  const Rat gaps[] = {series_constant(), Rat(4), Rat(6)};
  return Surd(gaps[i % 3]);
}

Tally criterion1() {
  Tally t;
  for (Norm kind : kNorms) {
    for (std::size_t n = 2; n <= 4; ++n) {
      parallel_for(200, [&](std::size_t i) {
        const std::uint64_t seed = 1000 + i;
        guarded(t, label("svp-to-sap", n, kind, seed), [&] {
          BruteOracle local;
          const SvpInstance inst = gen_svp(n, 9, seed, kind, Surd(1));
          const VectorOutcome out = svp_to_sap(inst, local);
          return lattice_norm(inst.m, out.q, kind) == svp_minimum(inst);
        });
      });
    }
  }
  return t;
}

Tally criterion2() {
  Tally t;
  for (Norm kind : {Norm::Linf, Norm::L2}) {
    for (std::size_t n = 2; n <= 4; ++n) {
      parallel_for(200, [&](std::size_t i) {
        const std::uint64_t seed = 1000 + i;
        guarded(t, label("svp-to-gda", n, kind, seed), [&] {
          BruteOracle local;
          const SvpInstance inst = gen_svp(n, 9, seed, kind, Surd(1));
          const VectorOutcome out = svp_to_gda(inst, local);
          const Alg3Record& rec = out.cert.alg3.at(0);
          if (!alg3_invariants(rec)) return false;
          if (kind == Norm::Linf) {
            if (!(rec.oracle_gap == inst.alpha)) return false;
            return lattice_norm(inst.m, out.q, kind) == svp_minimum(inst);
          }
          if (!(rec.oracle_gap == inst.alpha / Surd(Rat(1), BigInt(n)))) return false;
          return verify_svp(inst, out.q).ok;
        });
      });
    }
  }
  return t;
}

Tally criterion3() {
  Tally t;
  std::atomic<std::size_t> tight{0};
  parallel_for(500, [&](std::size_t i) {
    const std::size_t n = 1 + i % 4;
    const std::uint64_t seed = 3000 + i;
    guarded(t, label("gda-to-sap", n, Norm::Linf, seed), [&] {
      BruteOracle local;
      const GdaInstance inst = gen_gda(n, 10000, seed, Norm::Linf, gda_gap(i / 4));
      const ScalarOutcome out = gda_to_sap(inst, local);
      const BigInt calls = static_cast<unsigned long>(out.cert.oracle_calls("sap"));
      const BigInt bound = halving_call_bound(lcd(inst.x), inst.alpha * inst.bound);
      if (calls == bound) ++tight;
      return verify_gda(inst, out.q).ok && calls <= bound;
    });
  });
  t.record(tight > 0, "no instance reached the call bound");
  return t;
}

Tally criterion4() {
  Tally t;
  parallel_for(500, [&](std::size_t i) {
    const std::size_t n = 2 + i % 3;
    const std::uint64_t seed = 4000 + i;
    guarded(t, label("sap-to-svp", n, Norm::Linf, seed), [&] {
      BruteOracle local;
      const SapInstance inst = gen_sap(n, 50, seed, Norm::Linf, Surd(1));
      const ScalarOutcome out = sap_to_svp(inst, local);
      const Alg2Record& rec = out.cert.alg2.at(0);
      if (det(rec.unimodular) != 1) return false;
      if (abs(det(rec.scaled)) != pow(rec.d, static_cast<unsigned long>(n - 1))) return false;
      return residual_norm(inst.x, out.q, Norm::Linf) == sap_minimum(inst);
    });
  });
  return t;
}

Tally criterion5() {
  Tally t;
  parallel_for(200, [&](std::size_t i) {
    const std::size_t n = 1 + i % 4;
    const std::uint64_t seed = 5000 + i;
    guarded(t, label("gda-to-svp", n, Norm::Linf, seed), [&] {
      BruteOracle local;
      const GdaInstance inst = gen_gda(n, 10000, seed, Norm::Linf, gda_gap(i / 4));
      const ScalarOutcome out = gda_to_svp(inst, local);
      // n == 1 SAP calls are answered without an SVP call.
      const BigInt calls = static_cast<unsigned long>(out.cert.alg2.size());
      const BigInt bound = halving_call_bound(lcd(inst.x), inst.alpha * inst.bound);
      return verify_gda(inst, out.q).ok && calls <= bound &&
             out.cert.oracle_calls("svp") <= out.cert.alg2.size();
    });
  });
  parallel_for(200, [&](std::size_t i) {
    const std::size_t n = 2 + i % 3;
    const std::uint64_t seed = 5500 + i;
    guarded(t, label("sap-to-gda", n, Norm::Linf, seed), [&] {
      BruteOracle local;
      const SapInstance inst = gen_sap(n, 50, seed, Norm::Linf, Surd(1));
      const ScalarOutcome out = sap_to_gda(inst, local);
      return verify_sap(inst, out.q).ok && out.cert.oracle_calls("gda") == 1;
    });
  });
  return t;
}

// Exact polynomial gcd over Q[x] by the Euclidean algorithm.
using QPoly = std::vector<Rat>;

void trim(QPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

QPoly poly_mod(QPoly a, const QPoly& b) {
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    const Rat factor = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t k = 0; k < b.size(); ++k) a[shift + k] -= factor * b[k];
    trim(a);
  }
  return a;
}

long gcd_degree(QPoly a, QPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    QPoly r = poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return static_cast<long>(a.size()) - 1;
}

Tally criterion6() {
  Tally t;
  lred::testing::Rng rng(6000);
  for (int trial = 0; trial < 1000; ++trial) {
    auto random_poly = [&](long max_deg) {
      const long deg = rng.uniform(0, max_deg);
      std::vector<BigInt> c(static_cast<std::size_t>(deg + 1));
      for (auto& v : c) v = rng.uniform(-20, 20);
      return IntPoly(c);
    };
    IntPoly f1, f2;
    do {
      // an occasional shared factor keeps both outcomes well represented
      if (trial % 3 == 0) {
        const IntPoly shared = IntPoly::linear(rng.big(1, 4), rng.big(-6, 6));
        f1 = random_poly(4) * shared;
        f2 = random_poly(4) * shared;
      } else {
        f1 = random_poly(5);
        f2 = random_poly(5);
      }
    } while (f1.degree() < 1 && f2.degree() < 1);
    const std::string what = "pair " + f1.to_string() + ", " + f2.to_string();
    guarded(t, what, [&] {
      QPoly q1(f1.coeffs().begin(), f1.coeffs().end());
      QPoly q2(f2.coeffs().begin(), f2.coeffs().end());
      const bool common = f1.is_zero() || f2.is_zero() || gcd_degree(q1, q2) > 0;
      const CoeffMatrixCertificate cert = coeff_matrix_certificate(f1, f2);
      if (cert.det != det_coeff_matrix(f1, f2)) return false;
      if (f1 * cert.g1 + f2 * cert.g2 != IntPoly::constant(cert.det)) return false;
      return (cert.det == 0) == common;
    });
  }
  return t;
}

Tally criterion7() {
  Tally t;
  guarded(t, "worked 2x2 trace", [] {
    SvpInstance inst{Surd(1), IntMatrix{{1, 1}, {2, 1}}, Norm::Linf};
    BruteOracle oracle;
    const VectorOutcome out = svp_to_sap(inst, oracle);
    const Alg3Record& r = out.cert.alg3.at(0);
    return r.p == 3 && r.j_steps == std::vector<unsigned long>{1} && r.c_raw == 12 && r.c == 4 && r.j == 9 &&
           r.substitution == 262144 && lattice_norm(inst.m, out.q, Norm::Linf) == svp_minimum(inst);
  });
  return t;
}

Tally criterion8() {
  Tally t;
  const Route routes[] = {Route::GdaToSap, Route::SapToSvp, Route::GdaToSvp,
                          Route::SvpToSap, Route::SvpToGda, Route::SapToGda};
  const Rat gaps[] = {Rat(1), Rat(3, 2), Rat(2), Rat(4)};
  for (Route route : routes) {
    const std::size_t before = t.failed;
    parallel_for(100, [&](std::size_t i) {
      const std::uint64_t seed = 8000 + i;
      const Surd alpha(gaps[i % 4]);
      const std::size_t n = 2 + i % 3;
      guarded(t, label(route_name(route).c_str(), n, Norm::Linf, seed), [&] {
        WorstAdmissibleOracle worst;
        Instance inst;
        switch (route) {
          case Route::GdaToSap:
          case Route::GdaToSvp:
            inst = gen_gda(n, 10000, seed, Norm::Linf, gda_gap(i));
            break;
          case Route::SapToSvp:
          case Route::SapToGda:
            inst = gen_sap(n, 50, seed, Norm::Linf, alpha);
            break;
          default:
            inst = gen_svp(n, 9, seed, Norm::Linf, alpha);
        }
        const Certificate cert = reduce(route, inst, worst);
        if (const auto* s = std::get_if<SvpInstance>(&inst)) return verify_svp(*s, int_vector_from_json(cert.output)).ok;
        if (const auto* s = std::get_if<SapInstance>(&inst)) return verify_sap(*s, int_from_json(cert.output)).ok;
        return verify_gda(std::get<GdaInstance>(inst), int_from_json(cert.output)).ok;
      });
    });
    std::cout << "  " << route_name(route) << ": " << (100 - (t.failed - before)) << "/100 pass\n";
  }
  return t;
}

// Answers every call with the multiplier 1, so only the reduction's own work is timed.
class UnitOracle : public Oracle {
 public:
  std::string name() const override { return "unit"; }
  IntVector svp(const SvpInstance& inst) override {
    IntVector q(inst.m.dim(), 0);
    q[0] = 1;
    return q;
  }
  BigInt sap(const SapInstance&) override { return 1; }
  BigInt gda(const GdaInstance&) override { return 1; }
};

Tally criterion9() {
  Tally t;
  const std::size_t n = 6;
  const long m = 99;
  const double ceiling = 64.0 * std::pow(static_cast<double>(n), 4) * std::log2(static_cast<double>(m * n));
  for (std::uint64_t seed = 9000; seed < 9003; ++seed) {
    guarded(t, label("scaling", n, Norm::Linf, seed), [&] {
      const SvpInstance inst = gen_svp(n, m, seed, Norm::Linf, Surd(1));
      UnitOracle oracle;
      const auto start = std::chrono::steady_clock::now();
      const VectorOutcome out = svp_to_sap(inst, oracle);
      const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      const Alg3Record& r = out.cert.alg3.at(0);
      std::cout << "  scaling seed " << seed << ": " << secs << " s, max bits " << r.max_bits << " (ceiling "
                << static_cast<long>(ceiling) << ")\n";
      return secs < 60.0 && static_cast<double>(r.max_bits) < ceiling;
    });
  }
  return t;
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Tally()>> criteria[] = {
      {"gap preservation, SVP via SAP, three norms", criterion1},
      {"SVP via GDA with runtime invariants", criterion2},
      {"GDA via SAP with call bound", criterion3},
      {"SAP via SVP with determinant checks", criterion4},
      {"compositions gda-to-svp and sap-to-gda", criterion5},
      {"coefficient-matrix root test against Q[x] gcd", criterion6},
      {"worked 2x2 trace", criterion7},
      {"worst-admissible oracles on every route", criterion8},
      {"scaling smoke check at n = 6", criterion9},
  };
  int failures = 0;
  int index = 1;
  for (const auto& [name, run] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    const Tally t = run();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << "criterion " << index++ << " [" << (t.ok() ? "PASS" : "FAIL") << "] " << name << ": "
              << t.summary() << " (" << static_cast<long>(secs * 1000) << " ms)" << std::endl;
    if (!t.ok()) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
