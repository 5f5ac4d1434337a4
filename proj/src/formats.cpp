#include "semint/formats.hpp"

#include <algorithm>
#include <initializer_list>
#include <set>
#include <sstream>

#include <json.hpp>

namespace semint {

namespace {

using json = nlohmann::ordered_json;

json parse_json(std::string_view text, std::string_view source) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ValidationError(std::string(source) + ": " + e.what());
    }
}

void check_fields(const json& obj, std::initializer_list<const char*> allowed,
                  std::initializer_list<const char*> required,
                  const std::string& where) {
    if (!obj.is_object()) throw ValidationError(where + ": expected an object");
    for (const auto& [key, value] : obj.items()) {
        if (std::find_if(allowed.begin(), allowed.end(),
                         [&](const char* k) { return key == k; }) == allowed.end())
            throw ValidationError(where + ": unknown field '" + key + "'");
    }
    for (const char* key : required) {
        if (!obj.contains(key))
            throw ValidationError(where + ": missing required field '" + key + "'");
    }
}

std::string get_string(const json& obj, const char* key, const std::string& where) {
    if (!obj.is_object() || !obj.contains(key))
        throw ValidationError(where + ": missing required field '" + std::string(key) +
                              "'");
    const auto& v = obj.at(key);
    if (!v.is_string())
        throw ValidationError(where + ": field '" + key + "' must be a string");
    return v.get<std::string>();
}

const json& get_array(const json& obj, const char* key, const std::string& where) {
    if (!obj.is_object() || !obj.contains(key))
        throw ValidationError(where + ": missing required field '" + std::string(key) +
                              "'");
    const auto& v = obj.at(key);
    if (!v.is_array())
        throw ValidationError(where + ": field '" + key + "' must be an array");
    return v;
}

std::vector<UmlAttribute> parse_attributes(const json& arr, const std::string& where) {
    std::vector<UmlAttribute> out;
    std::size_t idx = 0;
    for (const auto& a : arr) {
        std::string ctx = where + ", attribute " + std::to_string(idx++);
        check_fields(a, {"name", "type"}, {"name", "type"}, ctx);
        out.push_back({get_string(a, "name", ctx), get_string(a, "type", ctx)});
    }
    return out;
}

json attributes_to_json(const std::vector<UmlAttribute>& attrs) {
    json arr = json::array();
    for (const auto& a : attrs) arr.push_back({{"name", a.name}, {"type", a.type}});
    return arr;
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

} // namespace

BusinessComponent parse_component_document(std::string_view text,
                                           std::string_view source_name) {
    const std::string src(source_name);
    json doc = parse_json(text, source_name);
    check_fields(doc, {"name", "classes", "associations"},
                 {"name", "classes", "associations"}, src);

    BusinessComponent bc(get_string(doc, "name", src));
    {
        std::size_t idx = 0;
        for (const auto& c : get_array(doc, "classes", src)) {
            std::string where = src + ", class " + std::to_string(idx++);
            check_fields(c, {"name", "attributes", "aliases"}, {"name"}, where);
            UmlClass cls;
            cls.name = get_string(c, "name", where);
            if (c.contains("attributes"))
                cls.attributes = parse_attributes(get_array(c, "attributes", where), where);
            if (c.contains("aliases")) {
                for (const auto& a : get_array(c, "aliases", where)) {
                    if (!a.is_string())
                        throw ValidationError(where + ": aliases must be strings");
                    cls.aliases.push_back(a.get<std::string>());
                }
                std::sort(cls.aliases.begin(), cls.aliases.end());
                cls.aliases.erase(std::unique(cls.aliases.begin(), cls.aliases.end()),
                                  cls.aliases.end());
            }
            bc.add_class(std::move(cls));
        }
        idx = 0;
        for (const auto& a : get_array(doc, "associations", src)) {
            std::string where = src + ", association " + std::to_string(idx++);
            if (!a.is_object()) throw ValidationError(where + ": expected an object");
            std::string kind = get_string(a, "kind", where);
            UmlAssociation assoc;
            if (kind == "aggregation") {
                check_fields(a, {"kind", "whole", "part", "label"},
                             {"kind", "whole", "part"}, where);
                assoc.kind = AssociationKind::Aggregation;
                assoc.whole = get_string(a, "whole", where);
                assoc.part = get_string(a, "part", where);
            } else if (kind == "association") {
                check_fields(a, {"kind", "from", "to", "label"}, {"kind", "from", "to"},
                             where);
                assoc.kind = AssociationKind::Association;
                assoc.whole = get_string(a, "from", where);
                assoc.part = get_string(a, "to", where);
            } else {
                throw ValidationError(where + ": unknown association kind '" + kind +
                                      "' (allowed: aggregation, association)");
            }
            if (a.contains("label")) assoc.label = get_string(a, "label", where);
            bc.add_association(std::move(assoc));
        }
    }
    return bc;
}

std::string serialize_component_document(const BusinessComponent& bc) {
    std::vector<const UmlClass*> classes;
    classes.reserve(bc.classes().size());
    for (const auto& c : bc.classes()) classes.push_back(&c);
    std::sort(classes.begin(), classes.end(),
              [](const UmlClass* x, const UmlClass* y) { return x->name < y->name; });

    json doc;
    doc["name"] = bc.name();
    json class_arr = json::array();
    for (const UmlClass* c : classes) {
        json jc;
        jc["name"] = c->name;
        jc["attributes"] = attributes_to_json(c->attributes);
        if (!c->aliases.empty()) {
            auto aliases = c->aliases;
            std::sort(aliases.begin(), aliases.end());
            jc["aliases"] = aliases;
        }
        class_arr.push_back(std::move(jc));
    }
    doc["classes"] = std::move(class_arr);

    json assoc_arr = json::array();
    for (const auto& a : bc.associations()) {
        json ja;
        if (a.kind == AssociationKind::Aggregation) {
            ja["kind"] = "aggregation";
            ja["whole"] = a.whole;
            ja["part"] = a.part;
        } else {
            ja["kind"] = "association";
            ja["from"] = a.whole;
            ja["to"] = a.part;
        }
        if (!a.label.empty()) ja["label"] = a.label;
        assoc_arr.push_back(std::move(ja));
    }
    doc["associations"] = std::move(assoc_arr);
    return dump(doc);
}

Ontology parse_ontology_document(std::string_view text, std::string_view source_name,
                                 std::vector<std::string>* warnings) {
    const std::string src(source_name);
    json doc = parse_json(text, source_name);
    check_fields(doc, {"name", "concepts", "relations", "associations"},
                 {"name", "concepts", "relations"}, src);

    Ontology o(get_string(doc, "name", src));
    std::size_t idx = 0;
    for (const auto& c : get_array(doc, "concepts", src)) {
        std::string where = src + ", concept " + std::to_string(idx++);
        check_fields(c, {"id", "term", "origin", "attributes"}, {"term"}, where);
        std::optional<ConceptId> id;
        if (c.contains("id")) id = get_string(c, "id", where);
        std::string origin =
            c.contains("origin") ? get_string(c, "origin", where) : o.name();
        std::vector<UmlAttribute> attrs;
        if (c.contains("attributes"))
            attrs = parse_attributes(get_array(c, "attributes", where), where);
        o.add_concept(get_string(c, "term", where), std::move(origin), std::move(attrs),
                      id);
    }

    idx = 0;
    for (const auto& r : get_array(doc, "relations", src)) {
        std::string where = src + ", relation " + std::to_string(idx++);
        if (!r.is_object()) throw ValidationError(where + ": expected an object");
        std::string type = get_string(r, "type", where);
        auto kind = relation_kind_from_name(type);
        if (!kind)
            throw ValidationError(where + ": unknown relation type '" + type +
                                  "' (allowed: synonymy, homonymy, equivalence, partOf, isA)");

        const char* key_a = "a";
        const char* key_b = "b";
        if (*kind == RelationKind::PartOf) {
            key_a = "part";
            key_b = "whole";
        } else if (*kind == RelationKind::IsA) {
            key_a = "sub";
            key_b = "super";
        }
        check_fields(r, {"type", key_a, key_b, "provenance", "note"},
                     {"type", key_a, key_b}, where);

        Provenance prov = Provenance::Input;
        if (r.contains("provenance")) {
            auto p = provenance_from_name(get_string(r, "provenance", where));
            if (!p)
                throw ValidationError(where +
                                      ": unknown provenance (allowed: input, case1, case2, case3)");
            prov = *p;
        }
        std::string note = r.contains("note") ? get_string(r, "note", where) : "";
        SemanticRelation rel =
            SemanticRelation::make(*kind, get_string(r, key_a, where),
                                   get_string(r, key_b, where), prov, std::move(note));
        if (!o.contains(rel.a) || !o.contains(rel.b))
            throw ValidationError(where + ": endpoint '" +
                                  (o.contains(rel.a) ? rel.b : rel.a) +
                                  "' does not name a concept");
        if (!o.add_relation(std::move(rel)) && warnings)
            warnings->push_back(src + ": duplicate relation " + type + " at index " +
                                std::to_string(idx - 1) + " ignored");
    }

    if (doc.contains("associations")) {
        idx = 0;
        for (const auto& p : get_array(doc, "associations", src)) {
            std::string where = src + ", association " + std::to_string(idx++);
            check_fields(p, {"from", "to", "label"}, {"from", "to"}, where);
            PlainAssociation pa{get_string(p, "from", where), get_string(p, "to", where),
                                p.contains("label") ? get_string(p, "label", where) : ""};
            if (!o.contains(pa.from) || !o.contains(pa.to))
                throw ValidationError(where + ": endpoint '" +
                                      (o.contains(pa.from) ? pa.to : pa.from) +
                                      "' does not name a concept");
            o.plain_associations().push_back(std::move(pa));
        }
    }
    return o;
}

std::string serialize_ontology_document(const Ontology& o) {
    json doc;
    doc["name"] = o.name();

    json concept_arr = json::array();
    for (const auto& [id, c] : o.concepts()) { // std::map: already sorted by id
        json jc;
        jc["id"] = c.id;
        jc["term"] = c.term.raw;
        if (c.origin != o.name()) jc["origin"] = c.origin;
        if (!c.attributes.empty()) jc["attributes"] = attributes_to_json(c.attributes);
        concept_arr.push_back(std::move(jc));
    }
    doc["concepts"] = std::move(concept_arr);

    auto relations = o.relations();
    std::sort(relations.begin(), relations.end());
    json rel_arr = json::array();
    for (const auto& r : relations) {
        json jr;
        jr["type"] = std::string(relation_kind_name(r.kind));
        if (r.kind == RelationKind::PartOf) {
            jr["part"] = r.a;
            jr["whole"] = r.b;
        } else if (r.kind == RelationKind::IsA) {
            jr["sub"] = r.a;
            jr["super"] = r.b;
        } else {
            jr["a"] = r.a;
            jr["b"] = r.b;
        }
        if (r.provenance != Provenance::Input)
            jr["provenance"] = std::string(provenance_name(r.provenance));
        if (!r.note.empty()) jr["note"] = r.note;
        rel_arr.push_back(std::move(jr));
    }
    doc["relations"] = std::move(rel_arr);

    if (!o.plain_associations().empty()) {
        json assoc_arr = json::array();
        for (const auto& p : o.plain_associations()) {
            json jp;
            jp["from"] = p.from;
            jp["to"] = p.to;
            if (!p.label.empty()) jp["label"] = p.label;
            assoc_arr.push_back(std::move(jp));
        }
        doc["associations"] = std::move(assoc_arr);
    }
    return dump(doc);
}

std::string emit_owl_functional(const Ontology& o) {
    if (o.concept_count() == 0) return "Ontology(" + o.name() + ")\n";

    // Concepts grouped by the first appearance of their source, then by id.
    std::map<std::string, std::uint32_t> origin_rank;
    for (const auto& [id, c] : o.concepts()) {
        auto [it, inserted] = origin_rank.emplace(c.origin, c.seq);
        if (!inserted) it->second = std::min(it->second, c.seq);
    }
    std::vector<const Concept*> ordered;
    ordered.reserve(o.concept_count());
    for (const auto& [id, c] : o.concepts()) ordered.push_back(&c);
    std::sort(ordered.begin(), ordered.end(), [&](const Concept* x, const Concept* y) {
        auto rx = origin_rank.at(x->origin);
        auto ry = origin_rank.at(y->origin);
        if (rx != ry) return rx < ry;
        return x->id < y->id;
    });

    std::ostringstream out;
    out << "Ontology(" << o.name() << "\n";
    for (const Concept* c : ordered) {
        auto parents = o.parents_of(c->id);
        if (parents.empty()) {
            out << "(Class " << c->term.raw << ")\n";
            continue;
        }
        for (const auto& p : parents) {
            out << "(Class " << c->term.raw << " partial restriction(partOf someValuesFrom("
                << o.at(p).term.raw << ")))\n";
        }
    }

    auto relations = o.relations();
    std::sort(relations.begin(), relations.end());
    for (const auto& r : relations) {
        if (r.kind != RelationKind::Synonymy && r.kind != RelationKind::Equivalence)
            continue;
        const Concept& a = o.at(r.a);
        const Concept& b = o.at(r.b);
        if (a.term.normalized == b.term.normalized) continue; // self-evident
        out << "(EquivalentClass(" << a.term.raw << ", " << b.term.raw << "))\n";
    }
    out << ")\n";
    return out.str();
}

std::string serialize_report(const ConflictReport& report, const MergePlan& plan,
                             const Ontology& result_ontology) {
    auto entries_to_json = [](const std::vector<ConflictEntry>& entries) {
        json arr = json::array();
        for (const auto& e : entries) {
            json je;
            je["left"] = e.left;
            je["right"] = e.right;
            je["leftTerm"] = e.left_term;
            je["rightTerm"] = e.right_term;
            je["similarity"] = e.similarity;
            je["producedBy"] = std::string(match_source_name(e.produced_by));
            je["trace"] = e.trace;
            arr.push_back(std::move(je));
        }
        return arr;
    };

    json doc;
    doc["synonymConflicts"] = entries_to_json(report.synonym_conflicts);
    doc["homonymConflicts"] = entries_to_json(report.homonym_conflicts);
    doc["unresolved"] = entries_to_json(report.unresolved);

    json merges = json::array();
    for (const auto& [rep, members] : plan.groups) {
        if (members.size() < 2) continue;
        json jm;
        jm["representative"] = rep;
        jm["members"] = members;
        std::set<std::string> aliases;
        const Concept& rc = result_ontology.at(rep);
        for (const auto& m : members) {
            const Concept& mc = result_ontology.at(m);
            if (mc.term.normalized != rc.term.normalized) aliases.insert(mc.term.raw);
        }
        jm["aliases"] = aliases;
        merges.push_back(std::move(jm));
    }
    json renames = json::array();
    for (const auto& id : plan.homonym_renames) {
        const Concept& c = result_ontology.at(id);
        renames.push_back({{"id", id}, {"newName", c.origin + "." + c.term.raw}});
    }
    doc["mergePlan"] = {{"merges", std::move(merges)}, {"renames", std::move(renames)}};
    return dump(doc);
}

} // namespace semint
