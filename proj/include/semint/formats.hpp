#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "semint/alignment.hpp"
#include "semint/model.hpp"
#include "semint/transform.hpp"

namespace semint {

// Interchange documents are JSON: `.bc.json` for components, `.onto.json`
// for ontologies, `.ofn.txt` for the OWL-functional-style emission. All
// parsers reject unknown fields; all serializers are deterministic
// (byte-identical output for equal values), UTF-8 with LF line endings.

// Component documents:
//   {"name": ..., "classes": [{"name", "attributes": [{"name","type"}],
//    "aliases"?}], "associations": [{"kind":"aggregation","whole","part","label"?}
//    | {"kind":"association","from","to","label"?}]}
BusinessComponent parse_component_document(std::string_view text,
                                           std::string_view source_name = "document");
std::string serialize_component_document(const BusinessComponent& bc);

// Ontology documents:
//   {"name": ..., "concepts": [{"term", "id"?, "origin"?, "attributes"?}],
//    "relations": [{"type", "a"/"b" | "part"/"whole" | "sub"/"super",
//    "provenance"?, "note"?}], "associations"?: [{"from","to","label"?}]}
// Missing concept ids are generated as `<name>#<normalized-term>`. Duplicate
// relations are deduplicated with a warning.
Ontology parse_ontology_document(std::string_view text,
                                 std::string_view source_name = "document",
                                 std::vector<std::string>* warnings = nullptr);
std::string serialize_ontology_document(const Ontology& o);

// OWL-functional-style listing, one axiom per line:
//   Ontology(<name>
//   (Class <term> partial restriction(partOf someValuesFrom(<parent>)))
//   (Class <term>)
//   (EquivalentClass(<termA>, <termB>))
//   )
// Classes are sorted by first appearance of their source component, then id;
// equivalences come last. Equivalences whose two terms normalize identically
// are self-evident and omitted. An empty ontology emits `Ontology(<name>)`.
std::string emit_owl_functional(const Ontology& o);

// Conflict report (`report.json`): the three conflict categories with their
// evidence and traces, plus the merge plan for audit.
std::string serialize_report(const ConflictReport& report, const MergePlan& plan,
                             const Ontology& result_ontology);

} // namespace semint
