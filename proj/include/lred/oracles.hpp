#pragma once

// The oracle contract the reductions are written against, the brute-force
// and worst-admissible implementations, and tracing/replay wrappers.

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "lred/problems.hpp"
#include "lred/serialize.hpp"

namespace lred {

class Oracle {
 public:
  virtual ~Oracle() = default;
  virtual std::string name() const = 0;
  virtual IntVector svp(const SvpInstance& inst) = 0;
  virtual BigInt sap(const SapInstance& inst) = 0;
  virtual BigInt gda(const GdaInstance& inst) = 0;
};

/// Exact minimisers.
class BruteOracle : public Oracle {
 public:
  explicit BruteOracle(BruteLimits limits = {}) : limits_(std::move(limits)) {}
  std::string name() const override { return "brute"; }
  IntVector svp(const SvpInstance& inst) override { return brute_svp(inst, limits_); }
  BigInt sap(const SapInstance& inst) override { return brute_sap(inst, limits_); }
  BigInt gda(const GdaInstance& inst) override { return brute_gda(inst, limits_); }

 private:
  BruteLimits limits_;
};

/// The admissible answer farthest from optimal.
class WorstAdmissibleOracle : public Oracle {
 public:
  explicit WorstAdmissibleOracle(BruteLimits limits = {}) : limits_(std::move(limits)) {}
  std::string name() const override { return "worst"; }
  IntVector svp(const SvpInstance& inst) override { return worst_svp(inst, limits_); }
  BigInt sap(const SapInstance& inst) override { return worst_sap(inst, limits_); }
  BigInt gda(const GdaInstance& inst) override { return worst_gda(inst, limits_); }

 private:
  BruteLimits limits_;
};

std::unique_ptr<Oracle> make_oracle(const std::string& name, const BruteLimits& limits = {});

struct OracleCall {
  std::string oracle;
  std::string problem;
  std::string digest;
  IntVector response;  // one entry for SAP and GDA

  friend bool operator==(const OracleCall&, const OracleCall&) = default;
};

using OracleTrace = std::vector<OracleCall>;

Json json_of(const OracleTrace& trace);
OracleTrace trace_from_json(const Json& j);

/// Forwards to `inner` and appends every call to `trace`.
class TracingOracle : public Oracle {
 public:
  TracingOracle(Oracle& inner, OracleTrace& trace) : inner_(inner), trace_(trace) {}
  std::string name() const override { return inner_.name(); }
  IntVector svp(const SvpInstance& inst) override;
  BigInt sap(const SapInstance& inst) override;
  BigInt gda(const GdaInstance& inst) override;

 private:
  Oracle& inner_;
  OracleTrace& trace_;
};

/// Answers from a recorded trace, in order; a call that does not match the
/// next recorded instance digest is a ContractError.
class ReplayOracle : public Oracle {
 public:
  explicit ReplayOracle(OracleTrace trace) : trace_(std::move(trace)) {}
  std::string name() const override;
  IntVector svp(const SvpInstance& inst) override;
  BigInt sap(const SapInstance& inst) override;
  BigInt gda(const GdaInstance& inst) override;
  bool exhausted() const { return next_ == trace_.size(); }

 private:
  const OracleCall& take(const Instance& inst);
  OracleTrace trace_;
  std::size_t next_ = 0;
};

}  // namespace lred
