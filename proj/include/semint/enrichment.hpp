#pragma once

#include "semint/context.hpp"
#include "semint/model.hpp"

namespace semint {

// The three enrichment rules. All take a pair of *domain* concept ids whose
// relation set in ctx.domain is empty (the caller's precondition) and report
// a derived synonymy without inserting it.

// Case 1: a synonymy/equivalence between concepts with the same two terms is
// declared locally in some component ontology; transfer it to the domain.
EnrichmentOutcome try_case1(const AlignmentContext& ctx, const ConceptId& d1,
                            const ConceptId& d2);

// Case 2: each concept has an equivalent neighbor (synonymy/equivalence edge
// in the domain or a component), and those neighbors are already similar.
EnrichmentOutcome try_case2(const AlignmentContext& ctx, const ConceptId& d1,
                            const ConceptId& d2);

// Case 3: both concepts are composite and their child sets admit a perfect
// matching of pairwise-similar children. Child pairs may themselves be
// enriched recursively, bounded by ctx.max_depth and the visited-pair guard;
// such recursion inserts into ctx.domain, hence the mutable context.
EnrichmentOutcome try_case3(AlignmentContext& ctx, const ConceptId& d1,
                            const ConceptId& d2);

// Marks the pair visited, tries cases 1-3 in order, inserts the first
// non-empty outcome's relations into ctx.domain, and logs it. A visited pair
// yields an empty outcome (cycle cut, not a failure).
EnrichmentOutcome enrich_pair(AlignmentContext& ctx, const ConceptId& d1,
                              const ConceptId& d2);

// Brute-force fixpoint: exhaustively applies cases 1-3 over all domain
// concept pairs until saturation, with no ordering and no visited guard.
// Intended for small inputs (<= 25 total concepts); the testing oracle for
// the incremental path. Throws std::logic_error if max_iterations passes do
// not reach the fixpoint.
Ontology closure_oracle(const Ontology& domain, const std::vector<Ontology>& components,
                        int max_iterations = 1000);

} // namespace semint
