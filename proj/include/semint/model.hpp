#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "semint/errors.hpp"

namespace semint {

using ConceptId = std::string;

// Canonical form of a display term: lowercase, trimmed, runs of
// whitespace/underscores collapsed to one space, camelCase boundaries
// split ("SalesDepartment" -> "sales department"). Idempotent.
std::string normalize_term(std::string_view raw);

struct Term {
    std::string raw;
    std::string normalized;

    static Term of(std::string raw_text);

    friend bool operator==(const Term&, const Term&) = default;
};

enum class RelationKind { Synonymy, Homonymy, Equivalence, PartOf, IsA };

// Synonymy, homonymy and equivalence are symmetric; partOf and isA are directed.
constexpr bool is_symmetric(RelationKind k) {
    return k == RelationKind::Synonymy || k == RelationKind::Homonymy ||
           k == RelationKind::Equivalence;
}

std::string_view relation_kind_name(RelationKind k);
std::optional<RelationKind> relation_kind_from_name(std::string_view name);

enum class Provenance { Input, Case1, Case2, Case3 };

std::string_view provenance_name(Provenance p);
std::optional<Provenance> provenance_from_name(std::string_view name);

// Typed edge between two concepts. For symmetric kinds the endpoints are
// stored in lexicographic order, so (kind, a, b) is a canonical key.
// For partOf, `a` is the part and `b` the whole; for isA, `a` is the sub.
struct SemanticRelation {
    RelationKind kind;
    ConceptId a;
    ConceptId b;
    Provenance provenance = Provenance::Input;
    std::string note;

    // Canonicalizes symmetric endpoints; throws ValidationError on a == b.
    static SemanticRelation make(RelationKind kind, ConceptId a, ConceptId b,
                                 Provenance provenance = Provenance::Input,
                                 std::string note = {});

    std::tuple<int, std::string, std::string> key() const;
    bool involves(const ConceptId& id) const { return a == id || b == id; }
    const ConceptId& other(const ConceptId& id) const { return a == id ? b : a; }
};

// Identity on (kind, a, b); provenance and note are bookkeeping.
bool operator==(const SemanticRelation& x, const SemanticRelation& y);
bool operator<(const SemanticRelation& x, const SemanticRelation& y);

struct UmlAttribute {
    std::string name;
    std::string type;

    friend bool operator==(const UmlAttribute&, const UmlAttribute&) = default;
};

struct Concept {
    ConceptId id;
    Term term;
    std::string origin;                   // source component name, or the ontology name
    std::vector<UmlAttribute> attributes; // carried through transformation for round-trips
    std::uint32_t seq = 0;                // insertion order; groups emissions by source
};

// Non-aggregation UML association carried through the pipeline as inert metadata.
struct PlainAssociation {
    std::string from;
    std::string to;
    std::string label;

    friend bool operator==(const PlainAssociation&, const PlainAssociation&) = default;
};

// Named set of concepts plus relations. Maintains: relation endpoints exist,
// relations are canonical and deduplicated, the partOf sub-graph is acyclic.
class Ontology {
public:
    Ontology() = default;
    explicit Ontology(std::string name) : name_(std::move(name)) {}

    const std::string& name() const { return name_; }

    // Adds a concept; a missing id is generated as `<name>#<normalized-term>`
    // (suffixed with ~2, ~3, ... on collision). Explicit duplicate ids throw.
    const Concept& add_concept(std::string term, std::string origin,
                               std::vector<UmlAttribute> attributes = {},
                               std::optional<ConceptId> id = std::nullopt);

    // Returns false when the canonical relation is already present.
    // Throws ValidationError on dangling endpoints, a == b, or a partOf cycle.
    bool add_relation(SemanticRelation r);

    bool contains(const ConceptId& id) const { return concepts_.count(id) != 0; }
    const Concept* find(const ConceptId& id) const;
    const Concept& at(const ConceptId& id) const; // throws std::logic_error on unknown id

    std::size_t concept_count() const { return concepts_.size(); }
    std::size_t relation_count() const { return relations_.size(); }

    std::vector<ConceptId> concept_ids() const; // sorted
    const std::map<ConceptId, Concept>& concepts() const { return concepts_; }
    const std::vector<SemanticRelation>& relations() const { return relations_; }

    // All relations whose endpoint set is {c1, c2}, in either stored direction.
    // Unknown ids are not an error; they simply match nothing.
    std::vector<SemanticRelation> relations_between(const ConceptId& c1,
                                                    const ConceptId& c2) const;

    // The partOf predecessors of c (its parts), sorted. Unknown id throws.
    std::vector<ConceptId> children_of(const ConceptId& c) const;

    // The wholes c is part of, sorted. Unknown id throws.
    std::vector<ConceptId> parents_of(const ConceptId& c) const;

    bool is_composite(const ConceptId& c) const { return !children_of(c).empty(); }

    std::vector<ConceptId> concepts_by_normalized_term(std::string_view normalized) const;

    std::vector<PlainAssociation>& plain_associations() { return plain_associations_; }
    const std::vector<PlainAssociation>& plain_associations() const {
        return plain_associations_;
    }

private:
    bool partof_reachable(const ConceptId& from, const ConceptId& to) const;

    std::string name_;
    std::map<ConceptId, Concept> concepts_;
    std::vector<SemanticRelation> relations_;
    std::set<std::tuple<int, std::string, std::string>> relation_keys_;
    std::multimap<std::string, ConceptId, std::less<>> by_term_;
    std::multimap<ConceptId, ConceptId> parent_edges_; // part -> whole
    std::multimap<ConceptId, ConceptId> child_edges_;  // whole -> part
    std::vector<PlainAssociation> plain_associations_;
    std::uint32_t next_seq_ = 0;
};

struct UmlClass {
    std::string name;
    std::vector<UmlAttribute> attributes;
    std::vector<std::string> aliases; // terms merged into this class, sorted unique
};

enum class AssociationKind { Aggregation, Association };

// For aggregations, `whole` contains `part`; for plain associations the
// fields read as from/to.
struct UmlAssociation {
    AssociationKind kind;
    std::string whole;
    std::string part;
    std::string label;
};

// UML-like model: named classes with attributes, plus associations.
// Maintains: class names unique, association endpoints exist, the
// aggregation sub-graph is acyclic.
class BusinessComponent {
public:
    BusinessComponent() = default;
    explicit BusinessComponent(std::string name) : name_(std::move(name)) {}

    const std::string& name() const { return name_; }

    void add_class(UmlClass c);               // throws on duplicate name
    void add_association(UmlAssociation a);   // throws on unknown class / aggregation cycle

    const UmlClass* find_class(const std::string& name) const;
    const std::vector<UmlClass>& classes() const { return classes_; }
    const std::vector<UmlAssociation>& associations() const { return associations_; }

private:
    bool aggregation_reachable(const std::string& from, const std::string& to) const;

    std::string name_;
    std::vector<UmlClass> classes_;
    std::map<std::string, std::size_t> class_index_;
    std::vector<UmlAssociation> associations_;
};

enum class Verdict { Synonym, Homonym, Unrelated };

enum class MatchSource { Syntactic, DomainRelation, Case1, Case2, Case3 };

std::string_view match_source_name(MatchSource s);

// The record of one naming-conflict detection between two component concepts.
struct Correspondence {
    ConceptId left;
    ConceptId right;
    double similarity = 0.0;
    Verdict verdict = Verdict::Unrelated;
    MatchSource produced_by = MatchSource::Syntactic;
    int enrichment_index = -1; // into AlignmentContext::enrichment_log, -1 if none
};

} // namespace semint
