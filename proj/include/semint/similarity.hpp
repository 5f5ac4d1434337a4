#pragma once

#include "semint/context.hpp"
#include "semint/model.hpp"

namespace semint {

// Syntactic measure. Equal normalized terms score 1. Otherwise, two
// composites (both have partOf children) score the symmetric best-match
// average of their child sets over max(|S1|, |S2|); everything else scores 0.
// Pure; results lie in [0, 1], and atomic-vs-atomic results in {0, 1}.
double syntactic_similarity(const Ontology& o1, const ConceptId& c1, const Ontology& o2,
                            const ConceptId& c2);

struct SimilarityResult {
    double value = 0.0;
    MatchSource source = MatchSource::Syntactic;
    int enrichment_index = -1; // into ctx.enrichment_log when a case fired
};

// Semantic measure over the session's working domain ontology. When both
// terms map into the domain and no relation links them, the enrichment
// process runs once per pair; a discovered synonymy re-evaluates to 1.
// A domain synonymy/equivalence forces 1, a homonymy forces 0, and every
// other path degrades to the syntactic measure. Mutates ctx (visited pairs,
// possibly domain relations).
SimilarityResult semantic_similarity_detailed(AlignmentContext& ctx, const Ontology& o1,
                                              const ConceptId& c1, const Ontology& o2,
                                              const ConceptId& c2);

double semantic_similarity(AlignmentContext& ctx, const Ontology& o1, const ConceptId& c1,
                           const Ontology& o2, const ConceptId& c2);

} // namespace semint
