#pragma once

// JSON encodings of numbers, matrices, polynomials, instances and solutions.
// Every number travels as a decimal or "num/den" string.

#include <string>
#include <string_view>

#include "json.hpp"
#include "lred/polyalg.hpp"
#include "lred/problems.hpp"

namespace lred {

using Json = nlohmann::json;

Json json_of(const BigInt& v);
Json json_of(const Rat& v);
Json json_of(std::span<const BigInt> v);
Json json_of(std::span<const Rat> v);
Json json_of(const IntMatrix& m);
Json json_of(const IntPoly& f);
/// A plain string for rational values, else {"rational", "sqrt_factor"}.
Json json_of(const Surd& s);
Json json_of(const NormValue& v);

BigInt int_from_json(const Json& j);
Rat rat_from_json(const Json& j);
IntVector int_vector_from_json(const Json& j);
RatVector rat_vector_from_json(const Json& j);
IntMatrix matrix_from_json(const Json& j);
Surd surd_from_json(const Json& j);

std::string norm_name(Norm kind);
Norm parse_norm(std::string_view text);

Json instance_to_json(const Instance& inst);
Instance instance_from_json(const Json& j);

/// FNV-1a (64-bit, hex) of the instance's canonical JSON text.
std::string digest(const Instance& inst);

/// {"problem": ..., "q": ...}; q is a vector for SVP, a scalar otherwise.
Json solution_to_json(const Instance& inst, const Json& q);

}  // namespace lred
