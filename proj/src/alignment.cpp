#include "semint/alignment.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

#include "semint/similarity.hpp"

namespace semint {

namespace {

Verdict classify(const AlignmentContext& ctx, bool terms_equal, double similarity) {
    if (terms_equal && similarity == 0.0) return Verdict::Homonym;
    if (similarity >= ctx.threshold) return Verdict::Synonym;
    return Verdict::Unrelated;
}

ConflictEntry make_entry(const AlignmentContext& ctx, const Correspondence& c,
                         const Ontology& left_onto, const Ontology& right_onto) {
    ConflictEntry e;
    e.left = c.left;
    e.right = c.right;
    e.left_term = left_onto.at(c.left).term.raw;
    e.right_term = right_onto.at(c.right).term.raw;
    e.similarity = c.similarity;
    e.produced_by = c.produced_by;
    if (c.enrichment_index >= 0 &&
        c.enrichment_index < static_cast<int>(ctx.enrichment_log.size()))
        e.trace = ctx.enrichment_log[c.enrichment_index].trace;
    return e;
}

} // namespace

AlignmentResult align_ontologies(const Ontology& domain,
                                 const std::vector<Ontology>& components,
                                 double threshold, int max_depth,
                                 bool enrichment_enabled) {
    if (components.size() < 2)
        throw ValidationError("integration needs at least 2 components, got " +
                              std::to_string(components.size()));

    AlignmentResult result;
    result.context = AlignmentContext::make(domain, components, threshold, max_depth,
                                            enrichment_enabled);
    AlignmentContext& ctx = result.context;

    for (std::size_t i = 0; i < ctx.components.size(); ++i) {
        for (std::size_t j = i + 1; j < ctx.components.size(); ++j) {
            const Ontology& left = ctx.components[i];
            const Ontology& right = ctx.components[j];
            for (const auto& a : left.concept_ids()) {
                for (const auto& b : right.concept_ids()) {
                    SimilarityResult s =
                        semantic_similarity_detailed(ctx, left, a, right, b);
                    bool terms_equal =
                        left.at(a).term.normalized == right.at(b).term.normalized;

                    Correspondence c;
                    c.left = a;
                    c.right = b;
                    c.similarity = s.value;
                    c.verdict = classify(ctx, terms_equal, s.value);
                    c.produced_by = s.source;
                    c.enrichment_index = s.enrichment_index;
                    result.correspondences.push_back(std::move(c));
                }
            }
        }
    }

    result.result_ontology = merge_result(ctx, result.correspondences);
    result.enriched_domain = ctx.domain;
    result.report = build_conflict_report(ctx, result.correspondences);
    return result;
}

Ontology merge_result(const AlignmentContext& ctx,
                      const std::vector<Correspondence>& correspondences) {
    std::map<std::pair<ConceptId, ConceptId>, Verdict> verdicts;
    for (const auto& c : correspondences) {
        if (c.verdict == Verdict::Unrelated) continue;
        auto key = std::minmax(c.left, c.right);
        auto [it, inserted] = verdicts.emplace(std::pair{key.first, key.second}, c.verdict);
        if (!inserted && it->second != c.verdict)
            throw ValidationError("inconsistent correspondences: pair (" + c.left + ", " +
                                  c.right + ") is recorded as both synonym and homonym");
    }

    Ontology merged("OBCr");
    for (const auto& comp : ctx.components) {
        for (const auto& id : comp.concept_ids()) {
            const Concept& c = comp.at(id);
            merged.add_concept(c.term.raw, c.origin, c.attributes, c.id);
        }
        for (const auto& r : comp.relations()) {
            if (r.kind == RelationKind::PartOf) merged.add_relation(r);
        }
        for (const auto& p : comp.plain_associations())
            merged.plain_associations().push_back(p);
    }
    for (const auto& c : correspondences) {
        if (c.verdict != Verdict::Synonym) continue;
        Provenance prov = Provenance::Input;
        switch (c.produced_by) {
            case MatchSource::Case1: prov = Provenance::Case1; break;
            case MatchSource::Case2: prov = Provenance::Case2; break;
            case MatchSource::Case3: prov = Provenance::Case3; break;
            default: break;
        }
        merged.add_relation(SemanticRelation::make(
            RelationKind::Equivalence, c.left, c.right, prov,
            std::string(match_source_name(c.produced_by))));
    }
    return merged;
}

ConflictReport build_conflict_report(const AlignmentContext& ctx,
                                     const std::vector<Correspondence>& correspondences) {
    // Locates the component ontology owning an id; pairs were produced in
    // component order, so left ids precede right ids.
    auto owner = [&](const ConceptId& id) -> const Ontology& {
        for (const auto& comp : ctx.components) {
            if (comp.contains(id)) return comp;
        }
        throw std::logic_error("correspondence references id '" + id +
                               "' outside the session components");
    };

    ConflictReport report;
    for (const auto& c : correspondences) {
        const Ontology& left_onto = owner(c.left);
        const Ontology& right_onto = owner(c.right);
        bool terms_equal =
            left_onto.at(c.left).term.normalized == right_onto.at(c.right).term.normalized;
        switch (c.verdict) {
            case Verdict::Synonym:
                if (!terms_equal)
                    report.synonym_conflicts.push_back(
                        make_entry(ctx, c, left_onto, right_onto));
                break;
            case Verdict::Homonym:
                report.homonym_conflicts.push_back(
                    make_entry(ctx, c, left_onto, right_onto));
                break;
            case Verdict::Unrelated:
                if (c.similarity > 0.0 && c.similarity < ctx.threshold)
                    report.unresolved.push_back(make_entry(ctx, c, left_onto, right_onto));
                break;
        }
    }

    auto by_pair = [](const ConflictEntry& x, const ConflictEntry& y) {
        return std::tie(x.left, x.right) < std::tie(y.left, y.right);
    };
    std::sort(report.synonym_conflicts.begin(), report.synonym_conflicts.end(), by_pair);
    std::sort(report.homonym_conflicts.begin(), report.homonym_conflicts.end(), by_pair);
    std::sort(report.unresolved.begin(), report.unresolved.end(), by_pair);
    return report;
}

} // namespace semint
