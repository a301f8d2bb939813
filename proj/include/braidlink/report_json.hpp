#pragma once

#include "braidlink/invariants.hpp"

#include <json.hpp>

#include <string_view>

namespace braidlink {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kInvariantsSchema = "braidlink.invariants/1";

/// Integer as a JSON number when it fits in 64 bits, else a decimal string.
Json integer_json(const mpz_class& value);

Json to_json(const LinkingMatrix& lk);
Json to_json(const LaurentPolynomial& p);
Json to_json(const IntegerMatrix& m);

/// Stable-key-order serialization of a report:
/// schema, strand_count, components, component_of_strand, exponent_sum,
/// linking, determinant, determinant_paths, alexander.
Json to_json(const InvariantReport& report);

}  // namespace braidlink
