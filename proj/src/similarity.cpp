#include "semint/similarity.hpp"

#include <algorithm>

#include "semint/enrichment.hpp"

namespace semint {

double syntactic_similarity(const Ontology& o1, const ConceptId& c1, const Ontology& o2,
                            const ConceptId& c2) {
    const Concept& a = o1.at(c1);
    const Concept& b = o2.at(c2);
    if (a.term.normalized == b.term.normalized) return 1.0;

    auto s1 = o1.children_of(c1);
    auto s2 = o2.children_of(c2);
    if (s1.empty() || s2.empty()) return 0.0; // atomic or mixed pair, differing terms

    // Best match per child, averaged over the larger set; evaluated from both
    // sides and the smaller value taken, so the measure is symmetric and
    // unmatched children are penalized.
    const double denom = static_cast<double>(std::max(s1.size(), s2.size()));
    double forward = 0.0;
    for (const auto& x : s1) {
        double best = 0.0;
        for (const auto& y : s2)
            best = std::max(best, syntactic_similarity(o1, x, o2, y));
        forward += best;
    }
    double backward = 0.0;
    for (const auto& y : s2) {
        double best = 0.0;
        for (const auto& x : s1)
            best = std::max(best, syntactic_similarity(o1, x, o2, y));
        backward += best;
    }
    return std::min(forward, backward) / denom;
}

SimilarityResult semantic_similarity_detailed(AlignmentContext& ctx, const Ontology& o1,
                                              const ConceptId& c1, const Ontology& o2,
                                              const ConceptId& c2) {
    const Concept& a = o1.at(c1);
    const Concept& b = o2.at(c2);
    const std::string& t1 = a.term.normalized;
    const std::string& t2 = b.term.normalized;

    if (t1 == t2) {
        // Same term: the domain either declares it homonymous (two domain
        // concepts carry it, linked by homonymy) or the pair co-refers.
        if (ctx.term_declared_homonymous(t1)) return {0.0, MatchSource::DomainRelation, -1};
        return {syntactic_similarity(o1, c1, o2, c2), MatchSource::Syntactic, -1};
    }

    auto d1 = ctx.domain_concept_for(t1);
    auto d2 = ctx.domain_concept_for(t2);
    if (!d1 || !d2) // either concept is outside the domain ontology
        return {syntactic_similarity(o1, c1, o2, c2), MatchSource::Syntactic, -1};

    auto rels = ctx.domain.relations_between(*d1, *d2);
    int enrichment_index = -1;
    if (rels.empty() && ctx.enrichment_enabled && !ctx.pair_visited(*d1, *d2)) {
        EnrichmentOutcome out = enrich_pair(ctx, *d1, *d2);
        if (out.fired()) {
            // Re-evaluate once against the updated relation set.
            rels = ctx.domain.relations_between(*d1, *d2);
            enrichment_index = static_cast<int>(ctx.enrichment_log.size()) - 1;
        }
    }

    for (const auto& r : rels) {
        if (r.kind == RelationKind::Synonymy || r.kind == RelationKind::Equivalence) {
            MatchSource source = MatchSource::DomainRelation;
            if (enrichment_index >= 0) {
                switch (*ctx.enrichment_log[enrichment_index].fired_case) {
                    case Provenance::Case1: source = MatchSource::Case1; break;
                    case Provenance::Case2: source = MatchSource::Case2; break;
                    case Provenance::Case3: source = MatchSource::Case3; break;
                    default: break;
                }
            }
            return {1.0, source, enrichment_index};
        }
    }
    for (const auto& r : rels) {
        if (r.kind == RelationKind::Homonymy) return {0.0, MatchSource::DomainRelation, -1};
    }
    return {syntactic_similarity(o1, c1, o2, c2), MatchSource::Syntactic, -1};
}

double semantic_similarity(AlignmentContext& ctx, const Ontology& o1, const ConceptId& c1,
                           const Ontology& o2, const ConceptId& c2) {
    return semantic_similarity_detailed(ctx, o1, c1, o2, c2).value;
}

} // namespace semint
