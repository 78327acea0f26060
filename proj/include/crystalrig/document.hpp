#pragma once

#include <optional>
#include <string>
#include <variant>

#include "crystalrig/cascading.hpp"
#include "crystalrig/rigged.hpp"
#include "crystalrig/tableau.hpp"

namespace crystalrig {

/// Self-describing value in the repo text format: a JSON object with a
/// "kind" tag ("mlt", "seq" or "rc"), the rank "n" and the payload.
struct Document {
    enum class Kind { mlt, seq, rc };

    Kind kind = Kind::mlt;
    std::variant<MarginallyLargeTableau, CascadingSequence, RiggedConfiguration> payload;

    int rank() const;
    const MarginallyLargeTableau& tableau() const { return std::get<MarginallyLargeTableau>(payload); }
    const CascadingSequence& sequence() const { return std::get<CascadingSequence>(payload); }
    const RiggedConfiguration& rc() const { return std::get<RiggedConfiguration>(payload); }

    static Document make(MarginallyLargeTableau t);
    static Document make(CascadingSequence s);
    static Document make(RiggedConfiguration r);
};

Document::Kind parse_kind(const std::string& name);
std::string kind_name(Document::Kind kind);

/// Parses the machine format; throws std::invalid_argument with a
/// diagnostic for malformed or invalid input.
Document parse_document(const std::string& text);

/// Machine format (canonical single-line JSON).
std::string serialize_document(const Document& doc);

/// Human-readable rendering: tableau grid, bracketed flat letter list, or
/// the vacancy | boxes | rigging partition layout.
std::string pretty_document(const Document& doc);

/// Conversion along the bijections; rc inputs are growth-validated first.
Document convert(const Document& doc, Document::Kind target);

/// Validity report as a JSON string ({"valid": ...}); for rc documents
/// includes the growth certificate or the first violated constraint.
std::string check_report(const std::string& text);

struct OpToken {
    bool lowering = true;  // f when true, e when false
    int letter = 0;
};

/// Parses operator tokens like "f2 e1 f10" (spaces or commas between).
std::vector<OpToken> parse_ops(const std::string& text);

/// Left-to-right operator fold; nullopt when a raising step annihilates.
std::optional<Document> apply_ops(const Document& doc, const std::vector<OpToken>& ops);

}  // namespace crystalrig
