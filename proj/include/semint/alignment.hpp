#pragma once

#include <string>
#include <vector>

#include "semint/context.hpp"
#include "semint/model.hpp"

namespace semint {

struct ConflictEntry {
    ConceptId left;
    ConceptId right;
    std::string left_term;
    std::string right_term;
    double similarity = 0.0;
    MatchSource produced_by = MatchSource::Syntactic;
    std::vector<std::string> trace;
};

// Name conflicts surfaced to the designer. Synonym conflicts pair different
// terms with the same meaning; homonym conflicts share a normalized term
// while denoting distinct notions; unresolved entries scored a fractional
// similarity below the threshold.
struct ConflictReport {
    std::vector<ConflictEntry> synonym_conflicts;
    std::vector<ConflictEntry> homonym_conflicts;
    std::vector<ConflictEntry> unresolved;
};

struct AlignmentResult {
    std::vector<Correspondence> correspondences;
    Ontology result_ontology; // BCOr: union of all components plus equivalences
    Ontology enriched_domain;
    ConflictReport report;
    AlignmentContext context; // final session state (enrichment log, counters)
};

// Aligns every cross-component concept pair over the domain ontology:
// computes the semantic similarity (enrichment enabled by default), records
// correspondences (synonym when similarity reaches the threshold, homonym
// when equal terms score 0, unrelated otherwise), then merges the result
// ontology and builds the conflict report. Pair order is deterministic:
// component argument order, then id order. Requires >= 2 components with
// unique ontology names and a threshold in (0, 1].
AlignmentResult align_ontologies(const Ontology& domain,
                                 const std::vector<Ontology>& components,
                                 double threshold = 1.0, int max_depth = 8,
                                 bool enrichment_enabled = true);

// Disjoint union of all component concepts and partOf relations (ids are
// origin-qualified, so duplicates never collide), plus one equivalence per
// synonym correspondence. Throws when a pair is both synonym and homonym.
Ontology merge_result(const AlignmentContext& ctx,
                      const std::vector<Correspondence>& correspondences);

ConflictReport build_conflict_report(const AlignmentContext& ctx,
                                     const std::vector<Correspondence>& correspondences);

} // namespace semint
