#pragma once

#include "squarepairs/curve.hpp"
#include "squarepairs/search.hpp"
#include "squarepairs/verify.hpp"

#include <json.hpp>

#include <string>

namespace squarepairs {

inline constexpr int kSchemaVersion = 1;

// Insertion-ordered JSON so serialization is byte-stable. Arbitrary-precision
// integers and rationals are emitted as decimal strings ("num" or "num/den"
// in lowest terms); machine-width counts stay JSON numbers.
using Json = nlohmann::ordered_json;

Json to_json(const Rational& q);
Json to_json(const TrianglePair& pair);
Json to_json(const ParamTriple& triple);
Json to_json(const ParamSolution& sol);
Json to_json(const Rejection& rej);
Json to_json(const SearchReport& rep);    // elapsed and worker count excluded
Json to_json(const GenerationReport& rep);
Json to_json(const VerifyReport& rep);

// Top-level document: {"schema_version": 1, "kind": kind, ...body}.
Json wrap(const char* kind, Json body);

// Two-space-indented dump with a trailing newline; the byte format asserted
// stable by the tests.
std::string dump(const Json& j);

// Plain-text renderings of the same reports for --format text.
std::string to_text(const ParamSolution& sol);
std::string to_text(const Rejection& rej);
std::string to_text(const SearchReport& rep);
std::string to_text(const GenerationReport& rep);
std::string to_text(const VerifyReport& rep);

}  // namespace squarepairs
