#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "posetcube/compression.hpp"
#include "posetcube/embedding.hpp"
#include "posetcube/poset.hpp"

namespace posetcube {

/// On-disk form of a poset: element identifiers plus cover relations.
/// Two interchangeable encodings, auto-detected on parse:
///   text:  [poset <name>]  /  elements: a b c  /  covers: a<b b<c
///   json:  {"name"?: ..., "elements": [...], "covers": [["a","b"], ...]}
struct PosetDocument {
  std::optional<std::string> name;
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> covers;

  Poset to_poset() const { return Poset::from_cover_relations(elements, covers); }

  bool operator==(const PosetDocument&) const = default;
};

/// Parses either encoding and validates that the document closes to a poset.
/// Throws SyntaxError (with line/column for the text form) and everything
/// cover-relation construction can throw.
PosetDocument parse_poset_document(const std::string& text);

std::string emit_poset_text(const PosetDocument& doc);
std::string emit_poset_json(const PosetDocument& doc);

/// Document for an existing poset; covers are the transitive reduction.
PosetDocument poset_to_document(const Poset& p, std::optional<std::string> name = std::nullopt);

/// Embedding JSON: {"ground": w, "sets": {"<element-id>": [ascending ints]}}.
/// Every element of p must be assigned; coordinates must be ascending and
/// within 1..ground.
Embedding parse_embedding_json(const std::string& text, const Poset& p);
std::string emit_embedding_json(const Embedding& e, const Poset& p);

/// Trace JSON: {"X": [...], "Y": [...], "G": [...], "f": {...}, "fresh": {...}}
/// with elements referenced by identifier.
std::string emit_trace_json(const CompressionTrace& trace, const Poset& p);

}  // namespace posetcube
