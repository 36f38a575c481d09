#pragma once

#include <superlie/genpair.hpp>
#include <superlie/rootsys.hpp>
#include <superlie/superalgebra.hpp>

#include <json.hpp>

#include <string>
#include <string_view>

namespace superlie {

using Json = nlohmann::json;

/// Coordinate vectors and weights as arrays of "p/q" strings.
Json to_json(const SuperVector& v);
Json to_json(const Weight& w);
SuperVector vector_from_json(const Json& j);
Weight weight_from_json(const Json& j);

/// {cartan, component?, degree?, dim, family, labels, name, params, parity,
///  structure: [[i, j, k, "p/q"], ...], weights}.
Json to_json(const SuperAlgebra& L);
/// Throws Error(ParseError) on malformed input.
SuperAlgebra algebra_from_json(const Json& j);

/// Compact dump with sorted keys; parse_algebra(dump_algebra(L)) reproduces it byte for byte.
std::string dump_algebra(const SuperAlgebra& L);
SuperAlgebra parse_algebra(std::string_view text);

Json to_json(const SuperAlgebra& L, const RootTable& table);
Json to_json(const GeneratorCertificate& c);
GeneratorCertificate certificate_from_json(const Json& j);
Json to_json(const StructureReport& r);
Json to_json(const Closure& c);

/// Parses text as JSON, mapping syntax errors to Error(ParseError).
Json parse_json(std::string_view text);

AlgebraFamily family_from_json(const Json& j);

}  // namespace superlie
