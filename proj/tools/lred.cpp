// lred: generate, solve, reduce and verify SVP / SAP / GDA instances.

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "lred/errors.hpp"
#include "lred/oracles.hpp"
#include "lred/reductions.hpp"
#include "lred/serialize.hpp"

namespace {

using namespace lred;

constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitLimit = 4;
constexpr int kExitVerify = 5;

struct RunConfig {
  std::string input;
  std::string output;
  std::string solution;
  std::string certificate;
  std::string oracle = "brute";
  std::string norm;
  std::string route;
  std::string relaxed_alpha;
  std::string problem = "svp";
  std::string alpha = "1";
  std::uint64_t seed = 0;
  std::size_t n = 2;
  long max_entry = 9;
  long max_den = 30;
  std::size_t count = 1;
  std::size_t max_dim = 6;
  std::string max_lcd = "1000000";
  unsigned jobs = 1;
};

class VerificationFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void write_output(const RunConfig& cfg, const std::string& text) {
  if (cfg.output.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream out(cfg.output);
  if (!out) throw PreconditionError("cannot write '" + cfg.output + "'");
  out << text << "\n";
}

BruteLimits limits_of(const RunConfig& cfg) {
  BruteLimits limits;
  limits.max_dim = cfg.max_dim;
  limits.max_lcd = parse_int(cfg.max_lcd);
  if (limits.max_dim < 1 || limits.max_lcd < 1) throw PreconditionError("limits must be positive");
  return limits;
}

Instance load_instance(const Json& j, const RunConfig& cfg) {
  Instance inst = instance_from_json(j);
  if (!cfg.norm.empty()) {
    const Norm kind = parse_norm(cfg.norm);
    std::visit([&](auto& v) { v.norm = kind; }, inst);
  }
  return inst;
}

// Applies `fn` to every element, spreading the work over `jobs` threads.
// The first error is rethrown after all workers finish.
std::vector<Json> run_batch(const Json& items, unsigned jobs, const std::function<Json(const Json&)>& fn) {
  std::vector<Json> results(items.size());
  std::vector<std::exception_ptr> errors(items.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < items.size();) {
      try {
        results[i] = fn(items[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  const unsigned count = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(items.size())));
  for (unsigned t = 0; t < count; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

Json for_each_input(const Json& doc, const RunConfig& cfg, const std::function<Json(const Json&)>& fn) {
  if (!doc.is_array()) return fn(doc);
  Json out = Json::array();
  for (auto& r : run_batch(doc, cfg.jobs, fn)) out.push_back(std::move(r));
  return out;
}

int cmd_gen(const RunConfig& cfg) {
  const Norm kind = parse_norm(cfg.norm.empty() ? "inf" : cfg.norm);
  const Surd alpha(parse_rat(cfg.alpha));
  Json out = Json::array();
  for (std::size_t k = 0; k < cfg.count; ++k) {
    const std::uint64_t seed = cfg.seed + k;
    Instance inst;
    if (cfg.problem == "svp") {
      inst = gen_svp(cfg.n, cfg.max_entry, seed, kind, alpha);
    } else if (cfg.problem == "sap") {
      inst = gen_sap(cfg.n, cfg.max_den, seed, kind, alpha);
    } else if (cfg.problem == "gda") {
      inst = gen_gda(cfg.n, cfg.max_den, seed, kind, alpha);
    } else {
      throw ParseError("unknown problem '" + cfg.problem + "'");
    }
    out.push_back(instance_to_json(inst));
  }
  write_output(cfg, (cfg.count == 1 ? out[0] : out).dump(2));
  return 0;
}

Json solve_one(const Instance& inst, Oracle& oracle) {
  return std::visit(
      [&](const auto& v) -> Json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, SvpInstance>) {
          const IntVector q = oracle.svp(v);
          Json j = solution_to_json(inst, json_of(std::span<const BigInt>(q)));
          j["norm"] = json_of(lattice_norm(v.m, q, v.norm));
          return j;
        } else if constexpr (std::is_same_v<T, SapInstance>) {
          const BigInt q = oracle.sap(v);
          Json j = solution_to_json(inst, json_of(q));
          j["norm"] = json_of(residual_norm(v.x, q, v.norm));
          return j;
        } else {
          const BigInt q = oracle.gda(v);
          Json j = solution_to_json(inst, json_of(q));
          j["norm"] = json_of(residual_norm(v.x, q, v.norm));
          return j;
        }
      },
      inst);
}

int cmd_solve(const RunConfig& cfg) {
  const BruteLimits limits = limits_of(cfg);
  const Json doc = read_json(cfg.input);
  const Json out = for_each_input(doc, cfg, [&](const Json& j) {
    auto oracle = make_oracle(cfg.oracle, limits);
    return solve_one(load_instance(j, cfg), *oracle);
  });
  write_output(cfg, out.dump(2));
  return 0;
}

Verdict verify_any(const Instance& inst, const Json& q, const BruteLimits& limits) {
  return std::visit(
      [&](const auto& v) -> Verdict {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, SvpInstance>) {
          return verify_svp(v, int_vector_from_json(q), limits);
        } else if constexpr (std::is_same_v<T, SapInstance>) {
          return verify_sap(v, int_from_json(q), limits);
        } else {
          return verify_gda(v, int_from_json(q), limits);
        }
      },
      inst);
}

Surd alpha_of(const Instance& inst) {
  return std::visit([](const auto& v) { return v.alpha; }, inst);
}

std::string report(const Instance& inst, const Verdict& v) {
  std::ostringstream out;
  const bool squared = v.achieved.kind == Norm::L2;
  const Surd g = max_with_one(alpha_of(inst));
  out << "verdict: " << (v.ok ? "pass" : "fail") << "\n";
  out << "reason: " << v.reason << "\n";
  out << "norm: " << norm_name(v.achieved.kind) << (squared ? " (squared values)" : "") << "\n";
  out << "achieved: " << to_string(v.achieved.value) << "\n";
  if (v.reason != "range" && v.reason != "zero output" && v.reason != "shape") {
    out << "reference: " << to_string(v.reference.value) << "\n";
  }
  if (!v.ratio.empty()) {
    // Compare the exact ratio against the gap through squares when the gap
    // carries a square root.
    if (squared) {
      out << "ratio^2: " << v.ratio << " vs alpha^2 = " << to_string(g.square()) << "\n";
    } else if (g.is_rational()) {
      out << "ratio: " << v.ratio << " vs alpha = " << to_string(g.ratio) << "\n";
    } else {
      out << "ratio: " << v.ratio << " vs alpha = " << g.to_string() << " (alpha^2 = " << to_string(g.square())
          << ")\n";
    }
  }
  return out.str();
}

Verdict verify_pair(const Instance& inst, const Json& sol, const BruteLimits& limits) {
  if (!sol.is_object() || !sol.contains("q")) throw ParseError("solution must be an object with field 'q'");
  if (sol.contains("problem") && sol.at("problem") != problem_name(inst)) {
    throw PreconditionError("solution is for a different problem than the instance");
  }
  return verify_any(inst, sol.at("q"), limits);
}

int cmd_verify(const RunConfig& cfg) {
  if (!cfg.certificate.empty()) {
    const Json doc = read_json(cfg.certificate);
    bool all = true;
    if (doc.is_array()) {
      for (std::size_t k = 0; k < doc.size(); ++k) {
        const bool same = replay(doc[k]);
        std::cout << "[" << k << "] replay: " << (same ? "identical" : "differs") << "\n";
        all = all && same;
      }
    } else {
      all = replay(doc);
      std::cout << "replay: " << (all ? "identical" : "differs") << "\n";
    }
    return all ? 0 : kExitVerify;
  }
  if (cfg.input.empty() || cfg.solution.empty()) {
    throw PreconditionError("verify needs --input and --solution (or --certificate)");
  }
  const BruteLimits limits = limits_of(cfg);
  const Json doc = read_json(cfg.input);
  const Json sol = read_json(cfg.solution);
  if (!doc.is_array()) {
    const Instance inst = load_instance(doc, cfg);
    const Verdict v = verify_pair(inst, sol, limits);
    std::cout << report(inst, v);
    return v.ok ? 0 : kExitVerify;
  }
  if (!sol.is_array() || sol.size() != doc.size()) {
    throw ParseError("an array of instances needs an array of solutions of the same length");
  }
  bool all = true;
  for (std::size_t k = 0; k < doc.size(); ++k) {
    const Instance inst = load_instance(doc[k], cfg);
    const Verdict v = verify_pair(inst, sol[k], limits);
    std::cout << "[" << k << "]\n" << report(inst, v);
    all = all && v.ok;
  }
  return all ? 0 : kExitVerify;
}

int cmd_reduce(const RunConfig& cfg) {
  const BruteLimits limits = limits_of(cfg);
  const Route route = parse_route(cfg.route);
  std::optional<Rat> relaxed;
  if (!cfg.relaxed_alpha.empty()) relaxed = parse_rat(cfg.relaxed_alpha);
  const Json doc = read_json(cfg.input);
  std::atomic<bool> failed{false};
  const Json out = for_each_input(doc, cfg, [&](const Json& j) {
    const Instance inst = load_instance(j, cfg);
    auto oracle = make_oracle(cfg.oracle, limits);
    const Certificate cert = reduce(route, inst, *oracle, relaxed);
    std::string status;
    try {
      const Verdict v = verify_any(inst, cert.output, limits);
      status = v.ok ? "pass" : "fail (" + v.reason + ")";
      if (!v.ok) failed = true;
    } catch (const LimitExceeded& e) {
      status = std::string("skipped (") + e.what() + ")";
    }
    std::cerr << "verification: " << status << "\n";
    return cert.to_json();
  });
  write_output(cfg, out.dump(2));
  if (failed) throw VerificationFailed("reduction output failed its verifier");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact reductions among SVP, SAP and GDA"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_limits = [&](CLI::App* sub) {
    sub->add_option("--max-dim", cfg.max_dim, "Largest dimension the brute solvers accept")->check(CLI::PositiveNumber);
    sub->add_option("--max-lcd", cfg.max_lcd, "Largest multiplier range scanned directly");
  };

  auto* gen = app.add_subcommand("gen", "Generate seeded random instances");
  gen->add_option("--problem", cfg.problem, "svp, sap or gda")->check(CLI::IsMember({"svp", "sap", "gda"}));
  gen->add_option("-n,--dim", cfg.n, "Dimension")->check(CLI::PositiveNumber);
  gen->add_option("--max-entry", cfg.max_entry, "SVP entries lie in [-k, k]")->check(CLI::PositiveNumber);
  gen->add_option("--max-den", cfg.max_den, "Largest common denominator for SAP/GDA vectors");
  gen->add_option("--seed", cfg.seed, "Random seed");
  gen->add_option("--count", cfg.count, "Number of instances (an array when > 1)")->check(CLI::PositiveNumber);
  gen->add_option("--norm", cfg.norm, "1, 2 or inf")->check(CLI::IsMember({"1", "2", "inf"}));
  gen->add_option("--alpha", cfg.alpha, "Gap as a/b");
  gen->add_option("--output", cfg.output, "Output file (default: stdout)");

  auto* solve = app.add_subcommand("solve", "Solve instances with an oracle");
  solve->add_option("--input", cfg.input, "Instance file (object or array)")->required();
  solve->add_option("--output", cfg.output, "Output file (default: stdout)");
  solve->add_option("--oracle", cfg.oracle, "brute or worst")->check(CLI::IsMember({"brute", "worst"}));
  solve->add_option("--norm", cfg.norm, "Override the instance norm")->check(CLI::IsMember({"1", "2", "inf"}));
  solve->add_option("--seed", cfg.seed, "Unused by the deterministic solvers");
  solve->add_option("--jobs", cfg.jobs, "Worker threads for arrays of instances")->check(CLI::PositiveNumber);
  add_limits(solve);

  auto* reduce_cmd = app.add_subcommand("reduce", "Run a reduction and emit its certificate");
  reduce_cmd->add_option("--input", cfg.input, "Instance file (object or array)")->required();
  reduce_cmd->add_option("--route", cfg.route, "gda-to-sap, sap-to-svp, gda-to-svp, svp-to-sap, svp-to-gda, sap-to-gda")
      ->required()
      ->check(CLI::IsMember({"gda-to-sap", "sap-to-svp", "gda-to-svp", "svp-to-sap", "svp-to-gda", "sap-to-gda"}));
  reduce_cmd->add_option("--output", cfg.output, "Certificate file (default: stdout)");
  reduce_cmd->add_option("--oracle", cfg.oracle, "brute or worst")->check(CLI::IsMember({"brute", "worst"}));
  reduce_cmd->add_option("--norm", cfg.norm, "Override the instance norm")->check(CLI::IsMember({"1", "2", "inf"}));
  reduce_cmd->add_option("--relaxed-alpha", cfg.relaxed_alpha, "Oracle gap a' < alpha for svp routes");
  reduce_cmd->add_option("--seed", cfg.seed, "Unused by the deterministic reductions");
  reduce_cmd->add_option("--jobs", cfg.jobs, "Worker threads for arrays of instances")->check(CLI::PositiveNumber);
  add_limits(reduce_cmd);

  auto* verify = app.add_subcommand("verify", "Check a solution, or replay a certificate");
  verify->add_option("--input", cfg.input, "Instance file");
  verify->add_option("--solution", cfg.solution, "Solution file with field q");
  verify->add_option("--certificate", cfg.certificate, "Certificate to replay");
  verify->add_option("--norm", cfg.norm, "Override the instance norm")->check(CLI::IsMember({"1", "2", "inf"}));
  add_limits(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitParse;
  }

  try {
    if (*gen) return cmd_gen(cfg);
    if (*solve) return cmd_solve(cfg);
    if (*reduce_cmd) return cmd_reduce(cfg);
    return cmd_verify(cfg);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const Json::exception& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition violated: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const LimitExceeded& e) {
    std::cerr << "limit exceeded: " << e.what() << "\n";
    return kExitLimit;
  } catch (const ContractError& e) {
    std::cerr << "contract violated: " << e.what() << "\n";
    return kExitVerify;
  } catch (const VerificationFailed& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return kExitVerify;
  }
}
