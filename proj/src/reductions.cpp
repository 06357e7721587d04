#include "lred/reductions.hpp"

#include <algorithm>
#include <numeric>

#include "lred/errors.hpp"

namespace lred {

Rat series_constant() { return Rat(153, 50); }

BigInt halving_call_bound(const BigInt& d, const Surd& bound) {
  if (bound.ratio <= 0) throw PreconditionError("halving_call_bound: bound must be positive");
  if (Surd(Rat(d)) <= bound) return 0;
  return ceil_log(4, Rat(d * d) / bound.square());
}

IntMatrix complete_to_unimodular(std::span<const BigInt> w) {
  const std::size_t n = w.size();
  if (n == 0) throw PreconditionError("complete_to_unimodular: empty vector");
  if (gcd_of(w) != 1) throw PreconditionError("complete_to_unimodular: entries must have gcd 1");
  if (w[0] == 0) throw PreconditionError("complete_to_unimodular: first entry must be nonzero");
  IntMatrix m(n);
  m.set_column(0, w);
  if (n == 1) {
    if (w[0] != 1) throw PreconditionError("complete_to_unimodular: a 1x1 completion needs w = (1)");
    return m;
  }
  // g is the determinant of the top-left block built so far.
  BigInt g = w[0];
  for (std::size_t i = 1; i < n; ++i) {
    const ExtGcd e = ext_gcd(g, w[i]);
    const BigInt b2 = e.s;
    const BigInt b1 = -e.t;
    for (std::size_t k = 0; k < i; ++k) {
      BigInt v = b1 * w[k];
      mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
      m(k, i) = v;
    }
    m(i, i) = b2;
    g = e.g;
  }
  if (det(m) != 1) throw ContractError("complete_to_unimodular: determinant is not 1");
  return m;
}

BigInt find_coprime_shift(std::span<const BigInt> w, const BigInt& d) {
  const std::size_t n = w.size();
  if (n < 2) throw PreconditionError("find_coprime_shift: need at least two coordinates");
  if (gcd_of(w) == 1) return 0;
  BigInt a = gcd_of(w.first(n - 1));
  if (a == 0) throw PreconditionError("find_coprime_shift: the first n-1 coordinates are all zero");
  while (true) {
    BigInt h;
    mpz_gcd(h.get_mpz_t(), a.get_mpz_t(), w[n - 1].get_mpz_t());
    if (h == 1) break;
    mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), h.get_mpz_t());
  }
  IntVector shifted(w.begin(), w.end());
  shifted[n - 1] += d * a;
  if (gcd_of(shifted) != 1) {
    throw ContractError("find_coprime_shift: shifted vector is not primitive (is d the lcd?)");
  }
  return a;
}

BigInt relaxed_substitution_exponent(const Rat& alpha, const Rat& alpha_prime, const IntMatrix& ma,
                                     const BigInt& det_m, const BigInt& c, Norm kind) {
  if (alpha_prime < 1 || alpha_prime >= alpha) {
    throw PreconditionError("relaxed substitution needs 1 <= alpha' < alpha");
  }
  if (abs(c) < 2) throw PreconditionError("relaxed substitution needs |c| >= 2");
  if (det_m == 0) throw PreconditionError("relaxed substitution needs det M != 0");
  const Rat factor = (alpha + alpha_prime) / (alpha - alpha_prime);
  const Rat op = op_norm_bound(ma, kind);
  const Rat dm = Rat(abs(det_m));
  BigInt j;
  if (kind == Norm::L2) {
    j = ceil_log(c * c, factor * factor * op / (dm * dm));
  } else {
    j = ceil_log(c, factor * op / dm);
  }
  return j < 1 ? BigInt(1) : j;
}

namespace {

// ---------------------------------------------------------------------------
// The three algorithms, run against an untraced oracle.

BigInt alg1(const GdaInstance& inst, Oracle& oracle, Alg1Record& rec) {
  if (inst.x.empty()) throw PreconditionError("gda: x must be nonempty");
  if (inst.alpha.ratio <= 0 || inst.bound.ratio <= 0) throw PreconditionError("gda: alpha and N must be positive");
  RatVector x = inst.x;
  BigInt d = lcd(x);
  const Surd range = inst.alpha * inst.bound;
  rec.sap_gap = inst.alpha / series_constant();
  rec.d0 = d;
  rec.call_bound = halving_call_bound(d, range);
  while (Surd(Rat(d)) > range) {
    const BigInt response = oracle.sap(SapInstance{rec.sap_gap, x, inst.norm});
    const BigInt next = abs(minimal_residue(response, d));
    if (next == 0) throw ContractError("sap oracle returned a multiple of the denominator");
    const Rat scale(next);
    for (auto& xi : x) xi -= frac(scale * xi) / scale;
    for (const auto& xi : x) {
      if (Rat(scale * xi).get_den() != 1) throw ContractError("working denominator does not clear x");
    }
    d = next;
    rec.steps.push_back({response, d, x});
  }
  rec.output = d;
  return d;
}

BigInt alg2(const SapInstance& inst, Oracle& oracle, Alg2Record& rec) {
  const std::size_t n = inst.x.size();
  if (n == 0) throw PreconditionError("sap: x must be nonempty");
  rec.d = lcd(inst.x);
  const BigInt& d = rec.d;
  if (d == 1) throw PreconditionError("sap: x is integral, so no nonzero residual exists");
  if (n == 1) {
    rec.direct = true;
    const BigInt y = BigInt(inst.x[0] * Rat(d));
    BigInt inv;
    mpz_invert(inv.get_mpz_t(), y.get_mpz_t(), d.get_mpz_t());
    rec.output = std::min<BigInt>(inv, d - inv);
    return rec.output;
  }
  rec.order.resize(n);
  std::iota(rec.order.begin(), rec.order.end(), std::size_t{0});
  std::stable_partition(rec.order.begin(), rec.order.end(), [&](std::size_t i) { return inst.x[i] != 0; });
  IntVector w(n);
  for (std::size_t k = 0; k < n; ++k) w[k] = BigInt(inst.x[rec.order[k]] * Rat(d));
  rec.shift = find_coprime_shift(w, d);
  w[n - 1] += d * rec.shift;
  rec.unimodular = complete_to_unimodular(w);
  rec.scaled = rec.unimodular;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 1; c < n; ++c) rec.scaled(r, c) *= d;
  if (abs(det(rec.scaled)) != pow(d, static_cast<unsigned long>(n - 1))) {
    throw ContractError("scaled matrix does not have |det| = d^(n-1)");
  }
  rec.svp_response = oracle.svp(SvpInstance{inst.alpha, rec.scaled, inst.norm});
  if (rec.svp_response.size() != n) throw ContractError("svp oracle answer has the wrong dimension");
  rec.output = rec.svp_response[0];
  if (minimal_residue(rec.output, d) == 0) {
    // The answer v lies in d*Z^n, so |v| >= d and the oracle bound gives
    // alpha * min >= |v| / d. Any q whose residual fits under |v| / d is then
    // admissible; q = 1 always does for the max norm.
    const NormValue reach = lattice_norm(rec.scaled, rec.svp_response, inst.norm);
    if (!scaled_le(residual_norm(inst.x, BigInt(1), inst.norm), Rat(1) / Rat(d), reach)) {
      throw ContractError("svp oracle answer lies in d*Z^n and q = 1 does not fit under its norm");
    }
    rec.fallback = true;
    rec.output = 1;
  }
  return rec.output;
}

class BitTracker {
 public:
  void operator()(const BigInt& v) { bits_ = std::max(bits_, bit_length(v)); }
  void operator()(const Rat& v) { bits_ = std::max(bits_, bit_length(v)); }
  void operator()(const IntMatrix& m) {
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) (*this)(m(r, c));
  }
  std::size_t bits() const { return bits_; }

 private:
  std::size_t bits_ = 0;
};

IntVector alg3(const SvpInstance& inst, Oracle& oracle, const Alg3Options& options, Alg3Record& rec) {
  if (!inst.m.is_square()) throw PreconditionError("svp: matrix must be square");
  const std::size_t n = inst.m.dim();
  if (n < 2) throw PreconditionError("svp reduction needs n >= 2");
  if (!inst.alpha.is_rational() || inst.alpha.ratio < 1) {
    throw PreconditionError("svp reduction needs a rational gap alpha >= 1");
  }
  const Rat alpha = inst.alpha.ratio;
  const BigInt a = alpha.get_num();
  if (options.relaxed_alpha && (*options.relaxed_alpha < 1 || *options.relaxed_alpha >= alpha)) {
    throw PreconditionError("relaxed mode needs 1 <= alpha' < alpha");
  }
  if (det(inst.m) == 0) throw PreconditionError("svp: matrix is singular");

  BitTracker bits;
  rec.relaxed_alpha = options.relaxed_alpha;
  rec.pivot = normalize_pivot(inst.m);
  const IntMatrix& m = rec.pivot.normalized;
  rec.det_m = det(m);
  const BigInt mn1 = m(n - 1, 0);
  rec.p = least_prime_not_dividing(mn1 * rec.det_m);
  const BigInt& p = rec.p;

  LinPolyMatrix poly{IntMatrix(n), adjugate(m)};
  for (std::size_t i = 0; i < n; ++i) poly.constant(i, i) = p;
  for (std::size_t i = 2; i <= n; ++i) {
    const std::size_t r = i - 1;
    poly.constant(r, 0) += p;
    const BigInt base = poly.constant(r, r - 1);
    BigInt power = 1;
    unsigned long j = 0;
    bool found = false;
    while (j < 2 * i - 2) {
      ++j;
      power *= p;
      poly.constant(r, r - 1) = base + power;
      const LinPolyMatrix lead = poly.leading(i);
      if (share_no_root(adj_entry(lead, r, 0), adj_entry(lead, r, 1))) {
        found = true;
        break;
      }
    }
    if (!found) {
      throw ContractError("no exponent j <= " + std::to_string(2 * i - 2) +
                          " meets the coefficient-matrix criterion at i = " + std::to_string(i));
    }
    rec.j_steps.push_back(j);
  }
  rec.polymatrix = poly;

  const IntPoly f1 = adj_entry(poly, n - 1, 0);
  const IntPoly f2 = adj_entry(poly, n - 1, 1);
  if (std::max(f1.degree(), f2.degree()) < 1) {
    throw ContractError("adjugate entries (n,1) and (n,2) are both constant");
  }
  rec.c_raw = det_coeff_matrix(f1, f2);
  if (rec.c_raw == 0) throw ContractError("adjugate entries (n,1) and (n,2) share a root");
  rec.c = rec.c_raw;
  while (mpz_divisible_p(rec.c.get_mpz_t(), p.get_mpz_t())) {
    mpz_divexact(rec.c.get_mpz_t(), rec.c.get_mpz_t(), p.get_mpz_t());
  }
  if (abs(rec.c) == 1) rec.c = p + 1;

  if (options.relaxed_alpha) {
    rec.j = relaxed_substitution_exponent(alpha, *options.relaxed_alpha, m * poly.constant, rec.det_m, rec.c,
                                          inst.norm);
  } else {
    const BigInt bound = a * a * pow(2 * mn1 * static_cast<unsigned long>(n), 3 * n);
    rec.j = ceil_log(rec.c, Rat(bound));
  }
  if (!rec.j.fits_ulong_p()) throw LimitExceeded("substitution exponent is too large");
  rec.substitution = pow(rec.c, rec.j.get_ui());
  rec.m_prime = poly.substitute(rec.substitution);
  rec.det_m_prime = det(rec.m_prime);
  if (rec.det_m_prime == 0) throw ContractError("substituted matrix is singular");

  const IntMatrix adj_prime = adjugate(rec.m_prime);
  rec.adj_n1 = adj_prime(n - 1, 0);
  rec.adj_n2 = adj_prime(n - 1, 1);
  if (rec.adj_n1 == 0 && rec.adj_n2 == 0) throw ContractError("adjugate entries (n,1) and (n,2) both vanish");
  const ExtGcd e = ext_gcd(rec.adj_n1, rec.adj_n2);
  if (e.g != 1) throw ContractError("adjugate entries (n,1) and (n,2) are not coprime");
  if (rec.adj_n2 == 0) {
    rec.b1 = rec.adj_n1;
    rec.b2 = 0;
  } else {
    rec.b1 = minimal_residue(e.s, abs(rec.adj_n2));
    const BigInt rest = 1 - rec.b1 * rec.adj_n1;
    mpz_divexact(rec.b2.get_mpz_t(), rest.get_mpz_t(), rec.adj_n2.get_mpz_t());
  }
  if (rec.b1 * rec.adj_n1 + rec.b2 * rec.adj_n2 != 1) throw ContractError("Bezout coefficients are wrong");

  IntVector b(n);
  b[0] = rec.b1;
  b[1] = rec.b2;
  const IntVector num = adj_prime * std::span<const BigInt>(b);
  rec.x.clear();
  for (const auto& v : num) rec.x.push_back(make_rat(v, rec.det_m_prime));
  if (rec.x[n - 1] != make_rat(1, rec.det_m_prime)) {
    throw ContractError("last coordinate of x is not 1/det M'");
  }

  const Rat oracle_alpha = options.relaxed_alpha ? *options.relaxed_alpha : alpha;
  if (options.use_gda) {
    rec.target = "gda";
    const Surd root = norm_root(n, inst.norm);
    rec.oracle_gap = Surd(oracle_alpha) / root;
    rec.bound = root * Surd(Rat(abs(rec.det_m_prime)) / (2 * oracle_alpha));
    rec.q0 = oracle.gda(GdaInstance{rec.oracle_gap, rec.bound, rec.x, inst.norm});
  } else {
    rec.target = "sap";
    rec.oracle_gap = Surd(oracle_alpha);
    rec.q0 = oracle.sap(SapInstance{rec.oracle_gap, rec.x, inst.norm});
  }

  RatVector residual;
  for (const auto& xi : rec.x) residual.push_back(frac(Rat(rec.q0) * xi));
  const RatVector image = rec.m_prime * std::span<const Rat>(residual);
  rec.q_prime.clear();
  for (const auto& v : image) {
    if (v.get_den() != 1) throw ContractError("M'{q0 x} is not integral");
    rec.q_prime.push_back(BigInt(v.get_num()));
  }
  if (std::all_of(rec.q_prime.begin(), rec.q_prime.end(), [](const BigInt& v) { return v == 0; })) {
    throw ContractError("oracle answer has zero residual, so the output vector is zero");
  }
  rec.output = rec.pivot.map_back(rec.q_prime);

  bits(rec.m_prime);
  bits(adj_prime);
  bits(rec.det_m_prime);
  bits(rec.c_raw);
  bits(rec.substitution);
  bits(rec.b1);
  bits(rec.b2);
  for (const auto& xi : rec.x) bits(xi);
  rec.max_bits = bits.bits();
  return rec.output;
}

// Answers SAP calls by the SAP-to-SVP route.
class SapViaSvp : public Oracle {
 public:
  SapViaSvp(Oracle& inner, std::vector<Alg2Record>& records) : inner_(inner), records_(records) {}
  std::string name() const override { return inner_.name(); }
  IntVector svp(const SvpInstance& inst) override { return inner_.svp(inst); }
  BigInt sap(const SapInstance& inst) override {
    Alg2Record rec;
    BigInt q = alg2(inst, inner_, rec);
    records_.push_back(std::move(rec));
    return q;
  }
  BigInt gda(const GdaInstance& inst) override { return inner_.gda(inst); }

 private:
  Oracle& inner_;
  std::vector<Alg2Record>& records_;
};

// Answers SVP calls by the SVP-to-GDA route.
class SvpViaGda : public Oracle {
 public:
  SvpViaGda(Oracle& inner, std::vector<Alg3Record>& records) : inner_(inner), records_(records) {}
  std::string name() const override { return inner_.name(); }
  IntVector svp(const SvpInstance& inst) override {
    Alg3Record rec;
    IntVector q = alg3(inst, inner_, Alg3Options{true, std::nullopt}, rec);
    records_.push_back(std::move(rec));
    return q;
  }
  BigInt sap(const SapInstance& inst) override { return inner_.sap(inst); }
  BigInt gda(const GdaInstance& inst) override { return inner_.gda(inst); }

 private:
  Oracle& inner_;
  std::vector<Alg3Record>& records_;
};

Json json_of_order(const std::vector<std::size_t>& v) {
  Json out = Json::array();
  for (auto i : v) out.push_back(i);
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Records

Json Alg1Record::to_json() const {
  Json steps_json = Json::array();
  for (const auto& s : steps) {
    steps_json.push_back(
        Json{{"response", json_of(s.response)}, {"d", json_of(s.d)}, {"x", json_of(std::span<const Rat>(s.x))}});
  }
  return Json{{"sap_gap", json_of(sap_gap)},
              {"d0", json_of(d0)},
              {"call_bound", json_of(call_bound)},
              {"steps", std::move(steps_json)},
              {"output", json_of(output)}};
}

Json Alg2Record::to_json() const {
  Json j{{"d", json_of(d)}, {"direct", direct}, {"output", json_of(output)}};
  if (!direct) {
    j["order"] = json_of_order(order);
    j["shift"] = json_of(shift);
    j["unimodular"] = json_of(unimodular);
    j["scaled"] = json_of(scaled);
    j["svp_response"] = json_of(std::span<const BigInt>(svp_response));
    j["fallback"] = fallback;
  }
  return j;
}

Json Alg3Record::to_json() const {
  Json signs = Json::array();
  for (int s : pivot.row_sign) signs.push_back(s);
  Json steps = Json::array();
  for (auto j_i : j_steps) steps.push_back(j_i);
  Json out{{"pivot", Json{{"row_perm", json_of_order(pivot.row_perm)},
                        {"row_sign", std::move(signs)},
                        {"col_perm", json_of_order(pivot.col_perm)},
                        {"normalized", json_of(pivot.normalized)}}},
         {"det_m", json_of(det_m)},
         {"p", json_of(p)},
         {"j_steps", std::move(steps)},
         {"polymatrix", Json{{"constant", json_of(polymatrix.constant)}, {"linear", json_of(polymatrix.linear)}}},
         {"c_raw", json_of(c_raw)},
         {"c", json_of(c)},
         {"c_sign_kept", true},
         {"j", json_of(j)},
         {"substitution", json_of(substitution)},
         {"m_prime", json_of(m_prime)},
         {"det_m_prime", json_of(det_m_prime)},
         {"adj_n1", json_of(adj_n1)},
         {"adj_n2", json_of(adj_n2)},
         {"b1", json_of(b1)},
         {"b2", json_of(b2)},
         {"x", json_of(std::span<const Rat>(x))},
         {"target", target},
         {"oracle_gap", json_of(oracle_gap)},
         {"q0", json_of(q0)},
         {"q_prime", json_of(std::span<const BigInt>(q_prime))},
         {"output", json_of(std::span<const BigInt>(output))},
         {"max_bits", max_bits}};
  if (target == "gda") out["N"] = json_of(bound);
  if (relaxed_alpha) out["relaxed_alpha"] = json_of(*relaxed_alpha);
  return out;
}

// ---------------------------------------------------------------------------
// Routes

std::string route_name(Route r) {
  switch (r) {
    case Route::GdaToSap:
      return "gda-to-sap";
    case Route::SapToSvp:
      return "sap-to-svp";
    case Route::GdaToSvp:
      return "gda-to-svp";
    case Route::SvpToSap:
      return "svp-to-sap";
    case Route::SvpToGda:
      return "svp-to-gda";
    case Route::SapToGda:
      return "sap-to-gda";
  }
  return "";
}

Route parse_route(std::string_view text) {
  for (Route r : {Route::GdaToSap, Route::SapToSvp, Route::GdaToSvp, Route::SvpToSap, Route::SvpToGda,
                  Route::SapToGda}) {
    if (route_name(r) == text) return r;
  }
  throw ParseError("unknown route '" + std::string(text) + "'");
}

std::size_t Certificate::oracle_calls(const std::string& problem) const {
  return static_cast<std::size_t>(
      std::count_if(trace.begin(), trace.end(), [&](const OracleCall& c) { return c.problem == problem; }));
}

Json Certificate::to_json() const {
  Json j{{"route", route_name(route)}, {"input", instance_to_json(input)}, {"output", output}};
  if (alg1) j["alg1"] = alg1->to_json();
  if (!alg2.empty()) {
    Json arr = Json::array();
    for (const auto& r : alg2) arr.push_back(r.to_json());
    j["alg2"] = std::move(arr);
  }
  if (!alg3.empty()) {
    Json arr = Json::array();
    for (const auto& r : alg3) arr.push_back(r.to_json());
    j["alg3"] = std::move(arr);
  }
  if (relaxed_alpha) j["relaxed_alpha"] = json_of(*relaxed_alpha);
  j["trace"] = json_of(trace);
  return j;
}

ScalarOutcome gda_to_sap(const GdaInstance& inst, Oracle& oracle) {
  ScalarOutcome out;
  out.cert.route = Route::GdaToSap;
  out.cert.input = inst;
  TracingOracle traced(oracle, out.cert.trace);
  Alg1Record rec;
  out.q = alg1(inst, traced, rec);
  out.cert.alg1 = std::move(rec);
  out.cert.output = json_of(out.q);
  return out;
}

ScalarOutcome sap_to_svp(const SapInstance& inst, Oracle& oracle) {
  ScalarOutcome out;
  out.cert.route = Route::SapToSvp;
  out.cert.input = inst;
  TracingOracle traced(oracle, out.cert.trace);
  Alg2Record rec;
  out.q = alg2(inst, traced, rec);
  out.cert.alg2.push_back(std::move(rec));
  out.cert.output = json_of(out.q);
  return out;
}

VectorOutcome svp_to_sap(const SvpInstance& inst, Oracle& oracle, const Alg3Options& options) {
  VectorOutcome out;
  out.cert.route = options.use_gda ? Route::SvpToGda : Route::SvpToSap;
  out.cert.input = inst;
  out.cert.relaxed_alpha = options.relaxed_alpha;
  TracingOracle traced(oracle, out.cert.trace);
  Alg3Record rec;
  out.q = alg3(inst, traced, options, rec);
  out.cert.alg3.push_back(std::move(rec));
  out.cert.output = json_of(std::span<const BigInt>(out.q));
  return out;
}

VectorOutcome svp_to_gda(const SvpInstance& inst, Oracle& oracle, Alg3Options options) {
  options.use_gda = true;
  return svp_to_sap(inst, oracle, options);
}

ScalarOutcome gda_to_svp(const GdaInstance& inst, Oracle& oracle) {
  ScalarOutcome out;
  out.cert.route = Route::GdaToSvp;
  out.cert.input = inst;
  TracingOracle traced(oracle, out.cert.trace);
  SapViaSvp adapter(traced, out.cert.alg2);
  Alg1Record rec;
  out.q = alg1(inst, adapter, rec);
  out.cert.alg1 = std::move(rec);
  out.cert.output = json_of(out.q);
  return out;
}

ScalarOutcome sap_to_gda(const SapInstance& inst, Oracle& oracle) {
  if (inst.x.size() < 2) throw PreconditionError("sap-to-gda needs n >= 2");
  ScalarOutcome out;
  out.cert.route = Route::SapToGda;
  out.cert.input = inst;
  TracingOracle traced(oracle, out.cert.trace);
  SvpViaGda adapter(traced, out.cert.alg3);
  Alg2Record rec;
  out.q = alg2(inst, adapter, rec);
  out.cert.alg2.push_back(std::move(rec));
  out.cert.output = json_of(out.q);
  return out;
}

namespace {

template <class T>
const T& expect(const Instance& inst, Route route, const char* want) {
  const T* p = std::get_if<T>(&inst);
  if (!p) {
    throw PreconditionError("route " + route_name(route) + " expects a " + want + " instance, got " +
                            problem_name(inst));
  }
  return *p;
}

}  // namespace

Certificate reduce(Route route, const Instance& inst, Oracle& oracle, const std::optional<Rat>& relaxed_alpha) {
  if (relaxed_alpha && route != Route::SvpToSap && route != Route::SvpToGda) {
    throw PreconditionError("relaxed mode applies only to svp-to-sap and svp-to-gda");
  }
  switch (route) {
    case Route::GdaToSap:
      return gda_to_sap(expect<GdaInstance>(inst, route, "gda"), oracle).cert;
    case Route::SapToSvp:
      return sap_to_svp(expect<SapInstance>(inst, route, "sap"), oracle).cert;
    case Route::GdaToSvp:
      return gda_to_svp(expect<GdaInstance>(inst, route, "gda"), oracle).cert;
    case Route::SvpToSap:
      return svp_to_sap(expect<SvpInstance>(inst, route, "svp"), oracle, Alg3Options{false, relaxed_alpha}).cert;
    case Route::SvpToGda:
      return svp_to_gda(expect<SvpInstance>(inst, route, "svp"), oracle, Alg3Options{true, relaxed_alpha}).cert;
    case Route::SapToGda:
      return sap_to_gda(expect<SapInstance>(inst, route, "sap"), oracle).cert;
  }
  throw PreconditionError("unknown route");
}

bool replay(const Json& certificate) {
  if (!certificate.is_object()) throw ParseError("certificate must be a JSON object");
  const Route route = parse_route(certificate.at("route").get<std::string>());
  const Instance input = instance_from_json(certificate.at("input"));
  std::optional<Rat> relaxed;
  if (certificate.contains("relaxed_alpha")) relaxed = rat_from_json(certificate.at("relaxed_alpha"));
  ReplayOracle oracle(trace_from_json(certificate.at("trace")));
  const Certificate again = reduce(route, input, oracle, relaxed);
  return oracle.exhausted() && again.to_json() == certificate;
}

}  // namespace lred
