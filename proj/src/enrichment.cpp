#include "semint/enrichment.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace semint {

namespace {

struct ChildTerm {
    std::string normalized;
    std::string display;

    bool operator<(const ChildTerm& other) const { return normalized < other.normalized; }
};

struct ChildSet {
    std::vector<ChildTerm> children; // sorted by normalized term, deduplicated
    std::string source;              // ontology the decomposition came from
};

ChildSet child_set_of(const AlignmentContext& ctx, const ConceptId& d) {
    const std::string& term = ctx.domain.at(d).term.normalized;

    auto collect = [](const Ontology& o, const std::vector<ConceptId>& ids) {
        std::map<std::string, std::string> by_norm;
        for (const auto& id : ids) {
            const Concept& c = o.at(id);
            by_norm.emplace(c.term.normalized, c.term.raw);
        }
        std::vector<ChildTerm> out;
        out.reserve(by_norm.size());
        for (auto& [norm, raw] : by_norm) out.push_back({norm, raw});
        return out;
    };

    // Composite in its component ontology first; the domain is the fallback.
    for (const auto& comp : ctx.components) {
        for (const auto& id : comp.concepts_by_normalized_term(term)) {
            auto kids = comp.children_of(id);
            if (!kids.empty()) return {collect(comp, kids), comp.name()};
        }
    }
    auto kids = ctx.domain.children_of(d);
    if (!kids.empty()) return {collect(ctx.domain, kids), ctx.domain.name()};
    return {};
}

bool domain_marks_similar(const AlignmentContext& ctx, const std::string& norm1,
                          const std::string& norm2, std::string* evidence) {
    auto d1 = ctx.domain_concept_for(norm1);
    auto d2 = ctx.domain_concept_for(norm2);
    if (!d1 || !d2) return false;
    for (const auto& r : ctx.domain.relations_between(*d1, *d2)) {
        if (r.kind == RelationKind::Synonymy || r.kind == RelationKind::Equivalence) {
            if (evidence)
                *evidence = "domain " + std::string(relation_kind_name(r.kind));
            return true;
        }
    }
    return false;
}

struct Neighbor {
    std::string normalized;
    std::string display;
    std::string via; // ontology declaring the edge
};

// Concepts reachable from d over one synonymy/equivalence edge, looked up in
// the domain and in every component concept carrying d's term.
std::vector<Neighbor> equivalent_neighbors(const AlignmentContext& ctx,
                                           const ConceptId& d) {
    const std::string& term = ctx.domain.at(d).term.normalized;
    std::map<std::string, Neighbor> by_norm;

    auto take = [&](const Ontology& o, const Concept& other) {
        if (other.term.normalized == term) return;
        by_norm.emplace(other.term.normalized,
                        Neighbor{other.term.normalized, other.term.raw, o.name()});
    };

    for (const auto& r : ctx.domain.relations()) {
        if (r.kind != RelationKind::Synonymy && r.kind != RelationKind::Equivalence)
            continue;
        if (r.involves(d)) take(ctx.domain, ctx.domain.at(r.other(d)));
    }
    for (const auto& comp : ctx.components) {
        for (const auto& id : comp.concepts_by_normalized_term(term)) {
            for (const auto& r : comp.relations()) {
                if (r.kind != RelationKind::Synonymy &&
                    r.kind != RelationKind::Equivalence)
                    continue;
                if (r.involves(id)) take(comp, comp.at(r.other(id)));
            }
        }
    }

    std::vector<Neighbor> out;
    out.reserve(by_norm.size());
    for (auto& [norm, n] : by_norm) out.push_back(std::move(n));
    return out;
}

EnrichmentOutcome fire(Provenance which, const ConceptId& d1, const ConceptId& d2,
                       std::string note, std::vector<std::string> trace) {
    EnrichmentOutcome out;
    out.fired_case = which;
    out.trace = std::move(trace);
    out.added.push_back(
        SemanticRelation::make(RelationKind::Synonymy, d1, d2, which, std::move(note)));
    std::ostringstream added_line;
    added_line << "added synonymy(" << out.added.front().a << ", " << out.added.front().b
               << ")";
    out.trace.push_back(added_line.str());
    return out;
}

EnrichmentOutcome enrich_pair_depth(AlignmentContext& ctx, const ConceptId& d1,
                                    const ConceptId& d2, int depth);

// Children are similar when their terms match, the domain already links
// them, or (within the depth budget) the pair itself can be enriched.
bool child_similar(AlignmentContext& ctx, const ChildTerm& x, const ChildTerm& y,
                   int depth, std::string* evidence) {
    if (x.normalized == y.normalized) {
        if (evidence) *evidence = "equal terms";
        return true;
    }
    if (domain_marks_similar(ctx, x.normalized, y.normalized, evidence)) return true;

    if (depth <= 0) return false;
    auto dx = ctx.domain_concept_for(x.normalized);
    auto dy = ctx.domain_concept_for(y.normalized);
    if (!dx || !dy) return false;
    if (!ctx.domain.relations_between(*dx, *dy).empty()) return false;
    if (ctx.pair_visited(*dx, *dy)) return false;
    EnrichmentOutcome nested = enrich_pair_depth(ctx, *dx, *dy, depth - 1);
    if (nested.fired()) {
        if (evidence)
            *evidence = "derived " + std::string(provenance_name(*nested.fired_case));
        return true;
    }
    return false;
}

bool find_perfect_matching(const std::vector<std::vector<bool>>& sim, std::size_t row,
                           std::vector<bool>& used, std::vector<std::size_t>& assign) {
    const std::size_t n = sim.size();
    if (row == n) return true;
    for (std::size_t j = 0; j < n; ++j) {
        if (!sim[row][j] || used[j]) continue;
        used[j] = true;
        assign[row] = j;
        if (find_perfect_matching(sim, row + 1, used, assign)) return true;
        used[j] = false;
    }
    return false;
}

EnrichmentOutcome try_case3_depth(AlignmentContext& ctx, const ConceptId& d1,
                                  const ConceptId& d2, int depth) {
    ChildSet s1 = child_set_of(ctx, d1);
    ChildSet s2 = child_set_of(ctx, d2);
    if (s1.children.empty() || s2.children.empty()) return {};
    if (s1.children.size() != s2.children.size()) return {};

    const std::size_t n = s1.children.size();
    std::vector<std::vector<bool>> sim(n, std::vector<bool>(n, false));
    std::vector<std::vector<std::string>> why(n, std::vector<std::string>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            sim[i][j] = child_similar(ctx, s1.children[i], s2.children[j], depth,
                                      &why[i][j]);
        }
    }

    std::vector<bool> used(n, false);
    std::vector<std::size_t> assign(n, 0);
    if (!find_perfect_matching(sim, 0, used, assign)) return {};

    const Concept& p1 = ctx.domain.at(d1);
    const Concept& p2 = ctx.domain.at(d2);
    auto list_children = [](const ChildSet& s) {
        std::string out;
        for (std::size_t i = 0; i < s.children.size(); ++i) {
            if (i) out += ", ";
            out += s.children[i].display;
        }
        return out;
    };
    std::vector<std::string> trace;
    trace.push_back("case3: " + p1.term.raw + " and " + p2.term.raw +
                    " are composite concepts with no domain relation");
    trace.push_back("children of " + p1.term.raw + " (from " + s1.source + "): " +
                    list_children(s1));
    trace.push_back("children of " + p2.term.raw + " (from " + s2.source + "): " +
                    list_children(s2));
    std::string matched;
    for (std::size_t i = 0; i < n; ++i) {
        if (i) matched += "; ";
        matched += s1.children[i].display + " ~ " + s2.children[assign[i]].display +
                   " (" + why[i][assign[i]] + ")";
    }
    trace.push_back("matched children: " + matched);
    return fire(Provenance::Case3, d1, d2, "children matched: " + matched,
                std::move(trace));
}

EnrichmentOutcome enrich_pair_depth(AlignmentContext& ctx, const ConceptId& d1,
                                    const ConceptId& d2, int depth) {
    if (d1 == d2) return {};
    if (ctx.pair_visited(d1, d2)) {
        EnrichmentOutcome out;
        out.trace.push_back("pair already visited this session: " + d1 + ", " + d2);
        return out;
    }
    ctx.mark_visited(d1, d2);
    ++ctx.enrich_invocations;

    EnrichmentOutcome out = try_case1(ctx, d1, d2);
    if (!out.fired()) out = try_case2(ctx, d1, d2);
    if (!out.fired()) out = try_case3_depth(ctx, d1, d2, depth);

    for (const auto& r : out.added) ctx.domain.add_relation(r);
    if (out.fired()) ctx.enrichment_log.push_back(out);
    return out;
}

} // namespace

EnrichmentOutcome try_case1(const AlignmentContext& ctx, const ConceptId& d1,
                            const ConceptId& d2) {
    const Concept& c1 = ctx.domain.at(d1);
    const Concept& c2 = ctx.domain.at(d2);
    const std::string& t1 = c1.term.normalized;
    const std::string& t2 = c2.term.normalized;

    for (const auto& comp : ctx.components) {
        for (const auto& r : comp.relations()) {
            if (r.kind != RelationKind::Synonymy && r.kind != RelationKind::Equivalence)
                continue;
            const std::string& ra = comp.at(r.a).term.normalized;
            const std::string& rb = comp.at(r.b).term.normalized;
            if ((ra == t1 && rb == t2) || (ra == t2 && rb == t1)) {
                std::string note = "declared in " + comp.name() + ": " +
                                   comp.at(r.a).term.raw + " ~ " + comp.at(r.b).term.raw;
                std::vector<std::string> trace{
                    "case1: " + std::string(relation_kind_name(r.kind)) + "(" +
                    comp.at(r.a).term.raw + ", " + comp.at(r.b).term.raw +
                    ") declared locally in " + comp.name()};
                return fire(Provenance::Case1, d1, d2, std::move(note),
                            std::move(trace));
            }
        }
    }
    return {};
}

EnrichmentOutcome try_case2(const AlignmentContext& ctx, const ConceptId& d1,
                            const ConceptId& d2) {
    auto n1 = equivalent_neighbors(ctx, d1);
    auto n2 = equivalent_neighbors(ctx, d2);
    if (n1.empty() || n2.empty()) return {};

    const Concept& c1 = ctx.domain.at(d1);
    const Concept& c2 = ctx.domain.at(d2);
    for (const auto& a : n1) {
        for (const auto& b : n2) {
            std::string evidence;
            if (a.normalized == b.normalized)
                evidence = "equal terms";
            else if (!domain_marks_similar(ctx, a.normalized, b.normalized, &evidence))
                continue;

            std::string note = "via equivalent neighbors " + a.display + " (" + a.via +
                               ") ~ " + b.display + " (" + b.via + ")";
            std::vector<std::string> trace{
                "case2: " + c1.term.raw + " has equivalent neighbor " + a.display +
                    " (declared in " + a.via + ")",
                "case2: " + c2.term.raw + " has equivalent neighbor " + b.display +
                    " (declared in " + b.via + ")",
                "neighbors are similar: " + evidence};
            return fire(Provenance::Case2, d1, d2, std::move(note),
                        std::move(trace));
        }
    }
    return {};
}

EnrichmentOutcome try_case3(AlignmentContext& ctx, const ConceptId& d1,
                            const ConceptId& d2) {
    return try_case3_depth(ctx, d1, d2, ctx.max_depth);
}

EnrichmentOutcome enrich_pair(AlignmentContext& ctx, const ConceptId& d1,
                              const ConceptId& d2) {
    return enrich_pair_depth(ctx, d1, d2, ctx.max_depth);
}

Ontology closure_oracle(const Ontology& domain, const std::vector<Ontology>& components,
                        int max_iterations) {
    // Depth 0 disables case-3 recursion: the fixpoint iteration subsumes it,
    // since an enrichable child pair gains its relation in an earlier pass.
    AlignmentContext ctx = AlignmentContext::make(domain, components, 1.0, 0, true);
    const auto ids = ctx.domain.concept_ids();

    for (int iter = 0; iter < max_iterations; ++iter) {
        bool changed = false;
        for (std::size_t i = 0; i < ids.size(); ++i) {
            for (std::size_t j = i + 1; j < ids.size(); ++j) {
                if (!ctx.domain.relations_between(ids[i], ids[j]).empty()) continue;
                EnrichmentOutcome out = try_case1(ctx, ids[i], ids[j]);
                if (!out.fired()) out = try_case2(ctx, ids[i], ids[j]);
                if (!out.fired()) out = try_case3(ctx, ids[i], ids[j]);
                for (const auto& r : out.added) changed |= ctx.domain.add_relation(r);
            }
        }
        if (!changed) return std::move(ctx.domain);
    }
    throw std::logic_error("closure oracle did not reach a fixpoint within " +
                           std::to_string(max_iterations) + " passes");
}

} // namespace semint
