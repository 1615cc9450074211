#pragma once

#include <functional>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "nexakt/frobenius.hpp"

namespace nexakt {

/// Objects keep keys sorted, so dump() is canonical.
using Json = nlohmann::json;

/// Resolves module references given by name inside morphism and complex files.
using ModuleResolver = std::function<std::optional<Module>(const std::string&)>;

// Input files. Every reader throws InputError annotated with the JSON pointer of
// the offending value.
Json to_json(const AlgebraPresentation& pres);
AlgebraPresentation presentation_from_json(const Json& j);

Json to_json(const Mat& m);
Json to_json(const Module& m);
Module module_from_json(const AlgebraPtr& alg, const Json& j, const std::string& where = "");
Json to_json(const Morphism& f);
Morphism morphism_from_json(const AlgebraPtr& alg, const Json& j, const ModuleResolver& resolve = {},
                            const std::string& where = "");
Json to_json(const ComplexSeq& x);
/// {"lo": int, "maps": [morphism, ...]}; terms are read off the maps.
ComplexSeq complex_from_json(const AlgebraPtr& alg, const Json& j, const ModuleResolver& resolve = {},
                             const std::string& where = "");

/// Parses text, reporting syntax errors with their byte offset.
Json parse_json(const std::string& text, const std::string& source_name);
Json load_json_file(const std::string& path);

std::string canonical_dump(const Json& j);
std::string sha256_hex(const std::string& data);
/// Hash of the canonical serialization.
std::string content_hash(const Json& j);
std::string content_hash(const Module& m);

// Certificate fragments.
Json to_json(const ExactnessRecord& r);
Json to_json(const NExactCert& c);
Json to_json(const NctReport& r, std::size_t n);
Json to_json(const AngleCheck& c);
Json to_json(const Angle& a);

}  // namespace nexakt
