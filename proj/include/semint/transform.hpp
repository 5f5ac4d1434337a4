#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "semint/model.hpp"

namespace semint {

// Resolution choices for turning a merged ontology back into a component:
// which concept represents each synonym-connected group, and which concepts
// need origin-qualified names because the domain declared them homonyms.
struct MergePlan {
    std::map<ConceptId, std::vector<ConceptId>> groups; // representative -> members
    std::map<ConceptId, ConceptId> representative_of;   // member -> representative
    std::set<ConceptId> homonym_renames;

    static MergePlan identity() { return {}; }
    ConceptId representative(const ConceptId& id) const;
};

// One concept per UML class, one partOf(part, whole) per aggregation.
// Attributes ride on the concepts; plain associations ride as metadata.
// The ontology is named "O" + the component name.
Ontology bc_to_ontology(const BusinessComponent& bc);
Ontology bc_to_ontology(const BusinessComponent& bc, std::string ontology_name);

// Groups synonym correspondences into merge groups. The representative is
// the member from the earliest component in argument order, ties broken by
// normalized term then id; homonym correspondences populate the renames.
MergePlan build_merge_plan(const std::vector<Ontology>& components,
                           const std::vector<Correspondence>& correspondences);

// One UML class per representative concept: merged classes take the
// representative's term and record the other terms as aliases, attributes
// are unioned (same name with a different datatype is an error), aggregations
// are substituted and deduplicated, and homonym-grouped classes are renamed
// "<origin>.<term>". The default component name strips the "O" prefix
// bc_to_ontology added.
BusinessComponent ontology_to_bc(const Ontology& o, const MergePlan& plan);
BusinessComponent ontology_to_bc(const Ontology& o, const MergePlan& plan,
                                 std::string component_name);

} // namespace semint
