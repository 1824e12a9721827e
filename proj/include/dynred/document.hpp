#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "dynred/errors.hpp"
#include "dynred/minimality.hpp"
#include "dynred/presentation.hpp"
#include "dynred/resultant.hpp"
#include "dynred/semistability.hpp"

namespace dynred {

using Json = nlohmann::ordered_json;

inline constexpr int kFormatVersion = 1;

/// Text form of a presentation:
///
///   {"format": 1, "n": 1, "d": 2, "label": "...",
///    "forms": [[["1", [2, 0]], ["-1", [0, 2]]], [["1", [1, 1]]]],
///    "tags": {"key": "value"}}
///
/// Coefficients are exact rational strings; unlisted monomials are zero.
/// "label" and "tags" are optional.
struct MorphismDocument {
    Presentation presentation;
    std::optional<std::string> label;
    std::map<std::string, std::string> tags;

    friend bool operator==(const MorphismDocument&, const MorphismDocument&) = default;
};

/// Malformed input. The message names the line/column or field.
class ParseError : public UsageError {
public:
    using UsageError::UsageError;
};

Json to_json(const MorphismDocument& doc);
MorphismDocument document_from_json(const Json& j, const std::string& where = "document");

// Canonical single-line serialization.
std::string print_document(const MorphismDocument& doc);
MorphismDocument parse_document(std::string_view text);

/// Accepts one JSON document, a JSON array of documents, or JSON Lines.
std::vector<MorphismDocument> parse_documents(std::string_view text);
// One document per line.
std::string print_documents(const std::vector<MorphismDocument>& docs);

RationalMatrix parse_matrix(std::string_view text, std::size_t dim);

// Report fragments. Integers that may be large are written as strings.
Json to_json(const Valuation& v);
Json to_json(const RationalMatrix& m);
Json to_json(const ResultantValuation& v);
Json to_json(const ConjugationValuationCheck& c);
Json to_json(const OnePSWitness& w);
Json to_json(const SemistabilityResult& r);
Json to_json(const MinimalityCertificate& c);
Json to_json(const DivisorReport& r);
Json to_json(const GlobalizationResult& r);
Json to_json(const PotentialGoodReductionReport& r);

} // namespace dynred
