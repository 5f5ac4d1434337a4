#include "semint/model.hpp"

#include <algorithm>
#include <cctype>

namespace semint {

namespace {

bool is_upper(char c) { return c >= 'A' && c <= 'Z'; }
bool is_lower(char c) { return c >= 'a' && c <= 'z'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }
char to_lower(char c) { return is_upper(c) ? static_cast<char>(c + ('a' - 'A')) : c; }
bool is_space_like(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v' ||
           c == '_';
}

} // namespace

std::string normalize_term(std::string_view raw) {
    // Pass 1: split camelCase boundaries. A boundary sits before an uppercase
    // letter preceded by a lowercase letter or digit, and before the last
    // capital of an acronym run followed by a lowercase letter.
    std::string split;
    split.reserve(raw.size() + 4);
    for (std::size_t i = 0; i < raw.size(); ++i) {
        char c = raw[i];
        if (is_upper(c) && i > 0) {
            char prev = raw[i - 1];
            bool after_lower = is_lower(prev) || is_digit(prev);
            bool acronym_end =
                is_upper(prev) && i + 1 < raw.size() && is_lower(raw[i + 1]);
            if (after_lower || acronym_end) split.push_back(' ');
        }
        split.push_back(c);
    }

    // Pass 2: lowercase, collapse whitespace/underscore runs, trim.
    std::string out;
    out.reserve(split.size());
    bool pending_space = false;
    for (char c : split) {
        if (is_space_like(c)) {
            pending_space = !out.empty();
            continue;
        }
        if (pending_space) {
            out.push_back(' ');
            pending_space = false;
        }
        out.push_back(to_lower(c));
    }
    return out;
}

Term Term::of(std::string raw_text) {
    Term t;
    t.normalized = normalize_term(raw_text);
    t.raw = std::move(raw_text);
    return t;
}

std::string_view relation_kind_name(RelationKind k) {
    switch (k) {
        case RelationKind::Synonymy: return "synonymy";
        case RelationKind::Homonymy: return "homonymy";
        case RelationKind::Equivalence: return "equivalence";
        case RelationKind::PartOf: return "partOf";
        case RelationKind::IsA: return "isA";
    }
    return "?";
}

std::optional<RelationKind> relation_kind_from_name(std::string_view name) {
    if (name == "synonymy") return RelationKind::Synonymy;
    if (name == "homonymy") return RelationKind::Homonymy;
    if (name == "equivalence") return RelationKind::Equivalence;
    if (name == "partOf") return RelationKind::PartOf;
    if (name == "isA") return RelationKind::IsA;
    return std::nullopt;
}

std::string_view provenance_name(Provenance p) {
    switch (p) {
        case Provenance::Input: return "input";
        case Provenance::Case1: return "case1";
        case Provenance::Case2: return "case2";
        case Provenance::Case3: return "case3";
    }
    return "?";
}

std::optional<Provenance> provenance_from_name(std::string_view name) {
    if (name == "input") return Provenance::Input;
    if (name == "case1") return Provenance::Case1;
    if (name == "case2") return Provenance::Case2;
    if (name == "case3") return Provenance::Case3;
    return std::nullopt;
}

std::string_view match_source_name(MatchSource s) {
    switch (s) {
        case MatchSource::Syntactic: return "syntactic";
        case MatchSource::DomainRelation: return "domain-relation";
        case MatchSource::Case1: return "case1";
        case MatchSource::Case2: return "case2";
        case MatchSource::Case3: return "case3";
    }
    return "?";
}

SemanticRelation SemanticRelation::make(RelationKind kind, ConceptId a, ConceptId b,
                                        Provenance provenance, std::string note) {
    if (a == b)
        throw ValidationError("relation endpoints must differ, got '" + a +
                              "' on both sides");
    if (is_symmetric(kind) && b < a) std::swap(a, b);
    SemanticRelation r;
    r.kind = kind;
    r.a = std::move(a);
    r.b = std::move(b);
    r.provenance = provenance;
    r.note = std::move(note);
    return r;
}

std::tuple<int, std::string, std::string> SemanticRelation::key() const {
    return {static_cast<int>(kind), a, b};
}

bool operator==(const SemanticRelation& x, const SemanticRelation& y) {
    return x.key() == y.key();
}

bool operator<(const SemanticRelation& x, const SemanticRelation& y) {
    return x.key() < y.key();
}

const Concept& Ontology::add_concept(std::string term, std::string origin,
                                     std::vector<UmlAttribute> attributes,
                                     std::optional<ConceptId> id) {
    Term t = Term::of(std::move(term));
    ConceptId cid;
    if (id) {
        cid = *id;
        if (cid.empty()) throw ValidationError("concept id must be non-empty");
        if (concepts_.count(cid))
            throw ValidationError("duplicate concept id '" + cid + "' in ontology '" +
                                  name_ + "'");
    } else {
        cid = name_ + "#" + t.normalized;
        for (int n = 2; concepts_.count(cid); ++n)
            cid = name_ + "#" + t.normalized + "~" + std::to_string(n);
    }

    Concept c;
    c.id = cid;
    c.term = std::move(t);
    c.origin = std::move(origin);
    c.attributes = std::move(attributes);
    c.seq = next_seq_++;
    by_term_.emplace(c.term.normalized, cid);
    auto [it, inserted] = concepts_.emplace(cid, std::move(c));
    (void)inserted;
    return it->second;
}

bool Ontology::add_relation(SemanticRelation r) {
    if (!contains(r.a) || !contains(r.b))
        throw ValidationError("relation " + std::string(relation_kind_name(r.kind)) +
                              "(" + r.a + ", " + r.b + ") references a concept missing from ontology '" +
                              name_ + "'");
    if (relation_keys_.count(r.key())) return false;
    if (r.kind == RelationKind::PartOf && partof_reachable(r.b, r.a))
        throw ValidationError("partOf(" + r.a + ", " + r.b + ") would close a cycle in ontology '" +
                              name_ + "'");

    relation_keys_.insert(r.key());
    if (r.kind == RelationKind::PartOf) {
        parent_edges_.emplace(r.a, r.b);
        child_edges_.emplace(r.b, r.a);
    }
    relations_.push_back(std::move(r));
    return true;
}

const Concept* Ontology::find(const ConceptId& id) const {
    auto it = concepts_.find(id);
    return it == concepts_.end() ? nullptr : &it->second;
}

const Concept& Ontology::at(const ConceptId& id) const {
    const Concept* c = find(id);
    if (!c)
        throw std::logic_error("unknown concept id '" + id + "' in ontology '" + name_ +
                               "'");
    return *c;
}

std::vector<ConceptId> Ontology::concept_ids() const {
    std::vector<ConceptId> ids;
    ids.reserve(concepts_.size());
    for (const auto& [id, c] : concepts_) ids.push_back(id);
    return ids;
}

std::vector<SemanticRelation> Ontology::relations_between(const ConceptId& c1,
                                                          const ConceptId& c2) const {
    std::vector<SemanticRelation> out;
    if (c1 == c2) return out;
    for (const auto& r : relations_) {
        if ((r.a == c1 && r.b == c2) || (r.a == c2 && r.b == c1)) out.push_back(r);
    }
    return out;
}

std::vector<ConceptId> Ontology::children_of(const ConceptId& c) const {
    at(c);
    std::vector<ConceptId> out;
    auto [lo, hi] = child_edges_.equal_range(c);
    for (auto it = lo; it != hi; ++it) out.push_back(it->second);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<ConceptId> Ontology::parents_of(const ConceptId& c) const {
    at(c);
    std::vector<ConceptId> out;
    auto [lo, hi] = parent_edges_.equal_range(c);
    for (auto it = lo; it != hi; ++it) out.push_back(it->second);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<ConceptId> Ontology::concepts_by_normalized_term(
    std::string_view normalized) const {
    std::vector<ConceptId> out;
    auto [lo, hi] = by_term_.equal_range(normalized);
    for (auto it = lo; it != hi; ++it) out.push_back(it->second);
    std::sort(out.begin(), out.end());
    return out;
}

bool Ontology::partof_reachable(const ConceptId& from, const ConceptId& to) const {
    if (from == to) return true;
    std::vector<ConceptId> stack{from};
    std::set<ConceptId> seen;
    while (!stack.empty()) {
        ConceptId cur = std::move(stack.back());
        stack.pop_back();
        if (!seen.insert(cur).second) continue;
        auto [lo, hi] = parent_edges_.equal_range(cur);
        for (auto it = lo; it != hi; ++it) {
            if (it->second == to) return true;
            stack.push_back(it->second);
        }
    }
    return false;
}

void BusinessComponent::add_class(UmlClass c) {
    if (c.name.empty()) throw ValidationError("class name must be non-empty");
    if (class_index_.count(c.name))
        throw ValidationError("duplicate class name '" + c.name + "' in component '" +
                              name_ + "'");
    std::set<std::string> attr_names;
    for (const auto& a : c.attributes) {
        if (!attr_names.insert(a.name).second)
            throw ValidationError("duplicate attribute '" + a.name + "' on class '" +
                                  c.name + "'");
    }
    class_index_.emplace(c.name, classes_.size());
    classes_.push_back(std::move(c));
}

void BusinessComponent::add_association(UmlAssociation a) {
    const char* role_a = a.kind == AssociationKind::Aggregation ? "whole" : "from";
    const char* role_b = a.kind == AssociationKind::Aggregation ? "part" : "to";
    if (!find_class(a.whole))
        throw ValidationError("association " + std::string(role_a) + " references unknown class '" +
                              a.whole + "' in component '" + name_ + "'");
    if (!find_class(a.part))
        throw ValidationError("association " + std::string(role_b) + " references unknown class '" +
                              a.part + "' in component '" + name_ + "'");
    if (a.kind == AssociationKind::Aggregation && aggregation_reachable(a.part, a.whole))
        throw ValidationError("aggregation(" + a.whole + " <>- " + a.part +
                              ") would close a cycle in component '" + name_ + "'");
    associations_.push_back(std::move(a));
}

const UmlClass* BusinessComponent::find_class(const std::string& name) const {
    auto it = class_index_.find(name);
    return it == class_index_.end() ? nullptr : &classes_[it->second];
}

bool BusinessComponent::aggregation_reachable(const std::string& from,
                                              const std::string& to) const {
    // Walks whole -> part edges.
    if (from == to) return true;
    std::vector<std::string> stack{from};
    std::set<std::string> seen;
    while (!stack.empty()) {
        std::string cur = std::move(stack.back());
        stack.pop_back();
        if (!seen.insert(cur).second) continue;
        for (const auto& a : associations_) {
            if (a.kind != AssociationKind::Aggregation || a.whole != cur) continue;
            if (a.part == to) return true;
            stack.push_back(a.part);
        }
    }
    return false;
}

} // namespace semint
