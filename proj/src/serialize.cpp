#include "lred/serialize.hpp"

#include <cstdint>
#include <cstdio>

#include "lred/errors.hpp"

namespace lred {

Json json_of(const BigInt& v) { return to_string(v); }
Json json_of(const Rat& v) { return to_string(v); }

Json json_of(std::span<const BigInt> v) {
  Json out = Json::array();
  for (const auto& e : v) out.push_back(json_of(e));
  return out;
}

Json json_of(std::span<const Rat> v) {
  Json out = Json::array();
  for (const auto& e : v) out.push_back(json_of(e));
  return out;
}

Json json_of(const IntMatrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(json_of(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

Json json_of(const IntPoly& f) { return json_of(std::span<const BigInt>(f.coeffs())); }

Json json_of(const Surd& s) {
  if (s.is_rational()) return json_of(s.ratio);
  return Json{{"rational", json_of(s.ratio)}, {"sqrt_factor", json_of(s.root)}};
}

Json json_of(const NormValue& v) {
  return Json{{"kind", norm_name(v.kind)}, {"value", json_of(v.value)}, {"squared", v.kind == Norm::L2}};
}

namespace {

std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return j.dump();
  throw ParseError("expected a decimal or fraction string, got " + j.dump());
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

}  // namespace

BigInt int_from_json(const Json& j) { return parse_int(scalar_text(j)); }
Rat rat_from_json(const Json& j) { return parse_rat(scalar_text(j)); }

IntVector int_vector_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("expected an array of integers");
  IntVector out;
  for (const auto& e : j) out.push_back(int_from_json(e));
  return out;
}

RatVector rat_vector_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("expected an array of rationals");
  RatVector out;
  for (const auto& e : j) out.push_back(rat_from_json(e));
  return out;
}

IntMatrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("expected a nonempty array of rows");
  const std::size_t n = j.size();
  IntMatrix m(n, j[0].is_array() ? j[0].size() : 0);
  for (std::size_t r = 0; r < n; ++r) {
    if (!j[r].is_array() || j[r].size() != m.cols()) throw ParseError("matrix rows must have equal length");
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = int_from_json(j[r][c]);
  }
  if (!m.is_square()) throw ParseError("matrix must be square");
  return m;
}

Surd surd_from_json(const Json& j) {
  if (j.is_object()) {
    const Rat r = rat_from_json(field(j, "rational"));
    const BigInt s = int_from_json(field(j, "sqrt_factor"));
    if (s < 1) throw ParseError("sqrt_factor must be positive");
    if (r < 0) throw ParseError("surd must be nonnegative");
    return Surd(r, s);
  }
  const Rat r = rat_from_json(j);
  if (r < 0) throw ParseError("value must be nonnegative");
  return Surd(r);
}

std::string norm_name(Norm kind) {
  switch (kind) {
    case Norm::L1:
      return "1";
    case Norm::L2:
      return "2";
    case Norm::Linf:
      return "inf";
  }
  return "inf";
}

Norm parse_norm(std::string_view text) {
  if (text == "1") return Norm::L1;
  if (text == "2") return Norm::L2;
  if (text == "inf") return Norm::Linf;
  throw ParseError("norm must be one of 1, 2, inf; got '" + std::string(text) + "'");
}

Json instance_to_json(const Instance& inst) {
  return std::visit(
      [](const auto& v) -> Json {
        using T = std::decay_t<decltype(v)>;
        Json j{{"norm", norm_name(v.norm)}, {"alpha", json_of(v.alpha)}};
        if constexpr (std::is_same_v<T, SvpInstance>) {
          j["problem"] = "svp";
          j["matrix"] = json_of(v.m);
        } else if constexpr (std::is_same_v<T, SapInstance>) {
          j["problem"] = "sap";
          j["x"] = json_of(std::span<const Rat>(v.x));
        } else {
          j["problem"] = "gda";
          j["x"] = json_of(std::span<const Rat>(v.x));
          j["N"] = json_of(v.bound);
        }
        return j;
      },
      inst);
}

Instance instance_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("instance must be a JSON object");
  const std::string problem = scalar_text(field(j, "problem"));
  const Norm kind = j.contains("norm") ? parse_norm(scalar_text(j.at("norm"))) : Norm::Linf;
  const Surd alpha = j.contains("alpha") ? surd_from_json(j.at("alpha")) : Surd(Rat(1));
  if (problem == "svp") return SvpInstance{alpha, matrix_from_json(field(j, "matrix")), kind};
  RatVector x = rat_vector_from_json(field(j, "x"));
  if (x.empty()) throw ParseError("x must be nonempty");
  if (problem == "sap") return SapInstance{alpha, std::move(x), kind};
  if (problem == "gda") return GdaInstance{alpha, surd_from_json(field(j, "N")), std::move(x), kind};
  throw ParseError("unknown problem '" + problem + "'");
}

std::string digest(const Instance& inst) {
  const std::string text = instance_to_json(inst).dump();
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Json solution_to_json(const Instance& inst, const Json& q) {
  return Json{{"problem", problem_name(inst)}, {"q", q}};
}

}  // namespace lred
