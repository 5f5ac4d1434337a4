#include "semint/context.hpp"

#include <algorithm>
#include <set>

namespace semint {

AlignmentContext AlignmentContext::make(Ontology domain, std::vector<Ontology> components,
                                        double threshold, int max_depth,
                                        bool enrichment_enabled) {
    if (!(threshold > 0.0 && threshold <= 1.0))
        throw ValidationError("threshold must lie in (0, 1], got " +
                              std::to_string(threshold));
    if (max_depth < 0)
        throw ValidationError("max depth must be non-negative, got " +
                              std::to_string(max_depth));
    std::set<std::string> names;
    for (const auto& o : components) {
        if (!names.insert(o.name()).second)
            throw std::logic_error("component ontology names must be unique, '" +
                                   o.name() + "' repeats");
    }

    AlignmentContext ctx;
    ctx.domain = std::move(domain);
    ctx.components = std::move(components);
    ctx.threshold = threshold;
    ctx.max_depth = max_depth;
    ctx.enrichment_enabled = enrichment_enabled;
    return ctx;
}

std::vector<std::pair<std::size_t, ConceptId>> AlignmentContext::all_concepts() const {
    std::vector<std::pair<std::size_t, ConceptId>> out;
    for (std::size_t i = 0; i < components.size(); ++i) {
        for (const auto& id : components[i].concept_ids()) out.emplace_back(i, id);
    }
    return out;
}

std::size_t AlignmentContext::all_concept_pair_count() const {
    std::size_t n = 0;
    for (const auto& o : components) n += o.concept_count();
    return n < 2 ? 0 : n * (n - 1) / 2;
}

std::optional<ConceptId> AlignmentContext::domain_concept_for(
    std::string_view normalized) const {
    auto ids = domain.concepts_by_normalized_term(normalized);
    if (ids.size() != 1) return std::nullopt;
    return ids.front();
}

bool AlignmentContext::term_declared_homonymous(std::string_view normalized) const {
    auto ids = domain.concepts_by_normalized_term(normalized);
    if (ids.size() < 2) return false;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        for (std::size_t j = i + 1; j < ids.size(); ++j) {
            for (const auto& r : domain.relations_between(ids[i], ids[j])) {
                if (r.kind == RelationKind::Homonymy) return true;
            }
        }
    }
    return false;
}

bool AlignmentContext::pair_visited(const ConceptId& c1, const ConceptId& c2) const {
    auto key = std::minmax(c1, c2);
    return visited_pairs_.count({key.first, key.second}) != 0;
}

void AlignmentContext::mark_visited(const ConceptId& c1, const ConceptId& c2) {
    auto key = std::minmax(c1, c2);
    visited_pairs_.insert({key.first, key.second});
}

} // namespace semint
