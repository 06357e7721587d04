#include "lred/oracles.hpp"

#include "lred/errors.hpp"

namespace lred {

std::unique_ptr<Oracle> make_oracle(const std::string& name, const BruteLimits& limits) {
  if (name == "brute") return std::make_unique<BruteOracle>(limits);
  if (name == "worst" || name == "worst-admissible") return std::make_unique<WorstAdmissibleOracle>(limits);
  throw PreconditionError("unknown oracle '" + name + "' (expected brute or worst)");
}

Json json_of(const OracleTrace& trace) {
  Json out = Json::array();
  for (const auto& call : trace) {
    Json response = call.problem == "svp" ? json_of(std::span<const BigInt>(call.response))
                                          : json_of(call.response.at(0));
    out.push_back(Json{{"oracle", call.oracle},
                       {"problem", call.problem},
                       {"digest", call.digest},
                       {"response", std::move(response)}});
  }
  return out;
}

OracleTrace trace_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("oracle trace must be an array");
  OracleTrace trace;
  for (const auto& e : j) {
    if (!e.is_object() || !e.contains("response")) throw ParseError("malformed oracle trace entry");
    OracleCall call{e.value("oracle", ""), e.value("problem", ""), e.value("digest", ""), {}};
    const Json& r = e.at("response");
    call.response = r.is_array() ? int_vector_from_json(r) : IntVector{int_from_json(r)};
    trace.push_back(std::move(call));
  }
  return trace;
}

IntVector TracingOracle::svp(const SvpInstance& inst) {
  const std::string who = inner_.name();
  IntVector q = inner_.svp(inst);
  trace_.push_back({who, "svp", digest(inst), q});
  return q;
}

BigInt TracingOracle::sap(const SapInstance& inst) {
  const std::string who = inner_.name();
  BigInt q = inner_.sap(inst);
  trace_.push_back({who, "sap", digest(inst), {q}});
  return q;
}

BigInt TracingOracle::gda(const GdaInstance& inst) {
  const std::string who = inner_.name();
  BigInt q = inner_.gda(inst);
  trace_.push_back({who, "gda", digest(inst), {q}});
  return q;
}

std::string ReplayOracle::name() const {
  if (next_ < trace_.size()) return trace_[next_].oracle;
  return trace_.empty() ? "replay" : trace_.back().oracle;
}

const OracleCall& ReplayOracle::take(const Instance& inst) {
  if (next_ >= trace_.size()) throw ContractError("replay: more oracle calls than recorded");
  const OracleCall& call = trace_[next_];
  if (call.problem != problem_name(inst) || call.digest != digest(inst)) {
    throw ContractError("replay: oracle call " + std::to_string(next_) + " does not match the recording");
  }
  ++next_;
  return call;
}

IntVector ReplayOracle::svp(const SvpInstance& inst) { return take(inst).response; }
BigInt ReplayOracle::sap(const SapInstance& inst) { return take(inst).response.at(0); }
BigInt ReplayOracle::gda(const GdaInstance& inst) { return take(inst).response.at(0); }

}  // namespace lred
