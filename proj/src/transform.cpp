#include "semint/transform.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace semint {

ConceptId MergePlan::representative(const ConceptId& id) const {
    auto it = representative_of.find(id);
    return it == representative_of.end() ? id : it->second;
}

Ontology bc_to_ontology(const BusinessComponent& bc) {
    return bc_to_ontology(bc, "O" + bc.name());
}

Ontology bc_to_ontology(const BusinessComponent& bc, std::string ontology_name) {
    Ontology o(std::move(ontology_name));
    std::map<std::string, ConceptId> id_of_class;
    for (const auto& c : bc.classes()) {
        const Concept& added = o.add_concept(c.name, bc.name(), c.attributes);
        id_of_class.emplace(c.name, added.id);
    }
    for (const auto& a : bc.associations()) {
        if (a.kind == AssociationKind::Aggregation) {
            o.add_relation(SemanticRelation::make(RelationKind::PartOf,
                                                  id_of_class.at(a.part),
                                                  id_of_class.at(a.whole)));
        } else {
            // Plain associations create no semantic relation; they ride along
            // as metadata keyed by concept id.
            o.plain_associations().push_back(
                {id_of_class.at(a.whole), id_of_class.at(a.part), a.label});
        }
    }
    return o;
}

MergePlan build_merge_plan(const std::vector<Ontology>& components,
                           const std::vector<Correspondence>& correspondences) {
    std::map<ConceptId, std::size_t> component_of;
    for (std::size_t i = 0; i < components.size(); ++i) {
        for (const auto& id : components[i].concept_ids()) component_of.emplace(id, i);
    }

    // Union-find over synonym-connected concepts.
    std::map<ConceptId, ConceptId> up;
    auto find_root = [&](ConceptId id) {
        while (true) {
            auto it = up.find(id);
            if (it == up.end() || it->second == id) return id;
            id = it->second;
        }
    };

    MergePlan plan;
    for (const auto& c : correspondences) {
        if (c.verdict == Verdict::Homonym) {
            plan.homonym_renames.insert(c.left);
            plan.homonym_renames.insert(c.right);
            continue;
        }
        if (c.verdict != Verdict::Synonym) continue;
        ConceptId ra = find_root(c.left);
        ConceptId rb = find_root(c.right);
        up.try_emplace(ra, ra);
        up.try_emplace(rb, rb);
        if (ra != rb) up[rb] = ra;
    }

    std::map<ConceptId, std::vector<ConceptId>> members_of;
    for (const auto& [id, parent] : up) members_of[find_root(id)].push_back(id);

    for (auto& [root, members] : members_of) {
        auto rank = [&](const ConceptId& id) {
            std::size_t comp = component_of.count(id) ? component_of.at(id)
                                                      : components.size();
            std::string term;
            for (const auto& o : components) {
                if (const Concept* c = o.find(id)) {
                    term = c->term.normalized;
                    break;
                }
            }
            return std::make_tuple(comp, term, id);
        };
        ConceptId rep = *std::min_element(
            members.begin(), members.end(),
            [&](const ConceptId& x, const ConceptId& y) { return rank(x) < rank(y); });
        std::sort(members.begin(), members.end());
        for (const auto& m : members) plan.representative_of[m] = rep;
        plan.groups[rep] = members;
    }
    return plan;
}

BusinessComponent ontology_to_bc(const Ontology& o, const MergePlan& plan) {
    std::string name = o.name();
    if (name.size() > 1 && name.front() == 'O') name.erase(0, 1);
    return ontology_to_bc(o, plan, std::move(name));
}

BusinessComponent ontology_to_bc(const Ontology& o, const MergePlan& plan,
                                 std::string component_name) {
    for (const auto& [member, rep] : plan.representative_of) {
        if (!o.contains(member) || !o.contains(rep))
            throw ValidationError("merge plan references a concept missing from ontology '" +
                                  o.name() + "': " + (o.contains(member) ? rep : member));
    }
    for (const auto& id : plan.homonym_renames) {
        if (!o.contains(id))
            throw ValidationError("merge plan rename references unknown concept '" + id +
                                  "'");
    }

    // Representative -> members (singletons for unmentioned concepts).
    std::map<ConceptId, std::vector<ConceptId>> groups;
    for (const auto& [id, c] : o.concepts()) {
        if (plan.representative_of.count(id)) continue;
        groups[id].push_back(id);
    }
    for (const auto& [rep, members] : plan.groups) {
        if (!o.contains(rep)) continue;
        for (const auto& m : members)
            if (o.contains(m)) groups[rep].push_back(m);
    }

    // Tentative class names, then a collision pass: classes that still share
    // a normalized name get origin-qualified, then ~k suffixes.
    std::map<ConceptId, std::string> final_name;
    for (const auto& [rep, members] : groups) {
        const Concept& c = o.at(rep);
        final_name[rep] = plan.homonym_renames.count(rep)
                              ? c.origin + "." + c.term.raw
                              : c.term.raw;
    }
    std::map<std::string, std::vector<ConceptId>> by_norm;
    for (const auto& [rep, n] : final_name) by_norm[normalize_term(n)].push_back(rep);
    for (const auto& [norm, reps] : by_norm) {
        if (reps.size() < 2) continue;
        for (const auto& rep : reps) {
            if (!plan.homonym_renames.count(rep))
                final_name[rep] = o.at(rep).origin + "." + o.at(rep).term.raw;
        }
    }
    std::set<std::string> taken; // keyed on normalized names, so case variants collide too
    for (auto& [rep, n] : final_name) {
        std::string candidate = n;
        for (int k = 2; !taken.insert(normalize_term(candidate)).second; ++k)
            candidate = n + "~" + std::to_string(k);
        n = candidate;
    }

    BusinessComponent bc(std::move(component_name));
    for (const auto& [rep, members] : groups) {
        const Concept& rc = o.at(rep);
        UmlClass cls;
        cls.name = final_name.at(rep);

        std::map<std::string, std::string> attr_type;
        for (const auto& a : rc.attributes) {
            attr_type.emplace(a.name, a.type);
            cls.attributes.push_back(a);
        }
        std::set<std::string> alias_set;
        for (const auto& m : members) {
            if (m == rep) continue;
            const Concept& mc = o.at(m);
            if (mc.term.normalized != rc.term.normalized) alias_set.insert(mc.term.raw);
            for (const auto& a : mc.attributes) {
                auto it = attr_type.find(a.name);
                if (it == attr_type.end()) {
                    attr_type.emplace(a.name, a.type);
                    cls.attributes.push_back(a);
                } else if (it->second != a.type) {
                    throw ValidationError("attribute '" + a.name + "' of merged class '" +
                                          cls.name + "' has conflicting datatypes '" +
                                          it->second + "' and '" + a.type + "'");
                }
            }
        }
        cls.aliases.assign(alias_set.begin(), alias_set.end());
        bc.add_class(std::move(cls));
    }

    auto rep_name = [&](const ConceptId& id) { return final_name.at(plan.representative(id)); };

    std::set<std::tuple<std::string, std::string, std::string>> seen_aggregations;
    for (const auto& r : o.relations()) {
        if (r.kind != RelationKind::PartOf) continue;
        std::string whole = rep_name(r.b);
        std::string part = rep_name(r.a);
        if (!seen_aggregations.insert({whole, part, ""}).second) continue;
        bc.add_association({AssociationKind::Aggregation, whole, part, ""});
    }
    std::set<std::tuple<std::string, std::string, std::string>> seen_plain;
    for (const auto& p : o.plain_associations()) {
        std::string from = rep_name(p.from);
        std::string to = rep_name(p.to);
        if (!seen_plain.insert({from, to, p.label}).second) continue;
        bc.add_association({AssociationKind::Association, from, to, p.label});
    }
    return bc;
}

} // namespace semint
