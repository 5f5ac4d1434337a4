#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string_view>
#include <utility>
#include <vector>

#include "semint/model.hpp"

namespace semint {

// What one enrichment attempt produced. `added` is non-empty exactly when a
// case fired; every added relation is a synonymy carrying that case as its
// provenance. The trace records the derivation in human-readable steps.
struct EnrichmentOutcome {
    std::vector<SemanticRelation> added;
    std::optional<Provenance> fired_case;
    std::vector<std::string> trace;

    bool fired() const { return fired_case.has_value(); }
};

// Mutable state of one integration session: the working copy of the domain
// ontology (relations only ever grow), the component ontologies in argument
// order, and the enrichment cycle guard. Exclusive access required while
// enrichment is enabled.
class AlignmentContext {
public:
    static AlignmentContext make(Ontology domain, std::vector<Ontology> components,
                                 double threshold = 1.0, int max_depth = 8,
                                 bool enrichment_enabled = true);

    Ontology domain;
    std::vector<Ontology> components;
    double threshold = 1.0;
    int max_depth = 8;
    bool enrichment_enabled = true;

    std::size_t enrich_invocations = 0;
    std::vector<EnrichmentOutcome> enrichment_log;

    // The union EC of all component concepts, as (component index, id).
    std::vector<std::pair<std::size_t, ConceptId>> all_concepts() const;
    std::size_t all_concept_pair_count() const;

    // Maps a normalized term to the unique domain concept carrying it;
    // nullopt when the term is absent or ambiguous.
    std::optional<ConceptId> domain_concept_for(std::string_view normalized) const;

    // True when >= 2 domain concepts carry the term and a homonymy relation
    // links two of them: the domain declares the term ambiguous.
    bool term_declared_homonymous(std::string_view normalized) const;

    bool pair_visited(const ConceptId& c1, const ConceptId& c2) const;
    void mark_visited(const ConceptId& c1, const ConceptId& c2);

private:
    std::set<std::pair<ConceptId, ConceptId>> visited_pairs_;
};

} // namespace semint
