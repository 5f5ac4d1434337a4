#include <doctest.h>

#include <algorithm>

#include "generators.hpp"
#include "semint/formats.hpp"
#include "semint/pipeline.hpp"
#include "semint/transform.hpp"

using namespace semint;

namespace {

BusinessComponent load_fixture_component(const std::string& name) {
    return parse_component_document(
        read_file(std::string(SEMINT_FIXTURES_DIR) + "/" + name), name);
}

bool has_partof(const Ontology& o, const std::string& part_term,
                const std::string& whole_term) {
    for (const auto& r : o.relations()) {
        if (r.kind != RelationKind::PartOf) continue;
        if (o.at(r.a).term.raw == part_term && o.at(r.b).term.raw == whole_term)
            return true;
    }
    return false;
}

} // namespace

TEST_CASE("bc_to_ontology maps BC1 to the OBC1 structure") {
    Ontology o = bc_to_ontology(load_fixture_component("bc1.bc.json"));
    CHECK(o.name() == "OBC1");
    CHECK(o.concept_count() == 6);
    CHECK(has_partof(o, "Laboratory", "Company"));
    CHECK(has_partof(o, "Delegated medical", "Laboratory"));
    CHECK(has_partof(o, "Research Team", "Laboratory"));
    CHECK(has_partof(o, "Marketing Department", "Company"));
    CHECK(has_partof(o, "Sales Department", "Company"));
    CHECK(o.at("OBC1#laboratory").origin == "BC1");
}

TEST_CASE("bc_to_ontology maps BC2 to the OBC2 structure") {
    Ontology o = bc_to_ontology(load_fixture_component("bc2.bc.json"));
    CHECK(o.name() == "OBC2");
    CHECK(o.concept_count() == 6);
    CHECK(has_partof(o, "Workshop", "Company"));
    CHECK(has_partof(o, "medical representative", "Workshop"));
    CHECK(has_partof(o, "Research Team", "Workshop"));
}

TEST_CASE("empty component becomes an empty ontology and back") {
    BusinessComponent empty("X");
    Ontology o = bc_to_ontology(empty);
    CHECK(o.concept_count() == 0);
    BusinessComponent back = ontology_to_bc(o, MergePlan::identity());
    CHECK(back.name() == "X");
    CHECK(back.classes().empty());
}

TEST_CASE("counts are preserved by the transformation") {
    testgen::Rng rng(100);
    for (int i = 0; i < 100; ++i) {
        BusinessComponent bc = testgen::gen_component(rng, "C");
        Ontology o = bc_to_ontology(bc);
        std::size_t aggregations = 0;
        for (const auto& a : bc.associations())
            if (a.kind == AssociationKind::Aggregation) ++aggregations;
        CHECK(o.concept_count() == bc.classes().size());
        std::size_t partof = 0;
        for (const auto& r : o.relations())
            if (r.kind == RelationKind::PartOf) ++partof;
        CHECK(partof == aggregations);
    }
}

TEST_CASE("bc -> ontology -> bc with the identity plan is the identity") {
    testgen::Rng rng(101);
    for (int i = 0; i < 120; ++i) {
        BusinessComponent bc = testgen::gen_component(rng, "RT" + std::to_string(i));
        BusinessComponent back = ontology_to_bc(bc_to_ontology(bc), MergePlan::identity());
        CHECK(serialize_component_document(back) == serialize_component_document(bc));
    }
}

TEST_CASE("ontology_to_bc merges the OBCr groups into BCr") {
    // Union of both fixture components plus the synonym equivalences.
    Ontology obc1 = bc_to_ontology(load_fixture_component("bc1.bc.json"));
    Ontology obc2 = bc_to_ontology(load_fixture_component("bc2.bc.json"));
    Ontology merged("OBCr");
    for (const Ontology* src : {&obc1, &obc2}) {
        for (const auto& id : src->concept_ids()) {
            const Concept& c = src->at(id);
            merged.add_concept(c.term.raw, c.origin, c.attributes, c.id);
        }
        for (const auto& r : src->relations()) merged.add_relation(r);
    }

    std::vector<Correspondence> correspondences;
    auto synonym = [&](const ConceptId& l, const ConceptId& r, MatchSource s) {
        correspondences.push_back({l, r, 1.0, Verdict::Synonym, s, -1});
    };
    synonym("OBC1#company", "OBC2#company", MatchSource::Syntactic);
    synonym("OBC1#marketing department", "OBC2#marketing department",
            MatchSource::Syntactic);
    synonym("OBC1#sales department", "OBC2#sales department", MatchSource::Syntactic);
    synonym("OBC1#research team", "OBC2#research team", MatchSource::Syntactic);
    synonym("OBC1#laboratory", "OBC2#workshop", MatchSource::Case3);
    synonym("OBC1#delegated medical", "OBC2#medical representative",
            MatchSource::DomainRelation);

    MergePlan plan = build_merge_plan({obc1, obc2}, correspondences);
    CHECK(plan.representative("OBC2#workshop") == "OBC1#laboratory");
    CHECK(plan.representative("OBC1#laboratory") == "OBC1#laboratory");

    BusinessComponent bcr = ontology_to_bc(merged, plan, "BCr");
    CHECK(bcr.classes().size() == 6);

    const UmlClass* lab = bcr.find_class("Laboratory");
    REQUIRE(lab != nullptr);
    CHECK(lab->aliases == std::vector<std::string>{"Workshop"});
    const UmlClass* dm = bcr.find_class("Delegated medical");
    REQUIRE(dm != nullptr);
    CHECK(dm->aliases == std::vector<std::string>{"medical representative"});
    CHECK(bcr.find_class("Research Team") != nullptr);
    CHECK(bcr.find_class("Workshop") == nullptr);

    std::size_t aggregations = 0;
    for (const auto& a : bcr.associations())
        if (a.kind == AssociationKind::Aggregation) ++aggregations;
    CHECK(aggregations == 5);

    // No two output classes share a normalized name.
    std::vector<std::string> norms;
    for (const auto& c : bcr.classes()) norms.push_back(normalize_term(c.name));
    std::sort(norms.begin(), norms.end());
    CHECK(std::adjacent_find(norms.begin(), norms.end()) == norms.end());
}

TEST_CASE("merged attributes union; datatype clashes are an error") {
    Ontology o("O");
    auto a = o.add_concept("Alpha", "BC1", {{"id", "int"}, {"name", "text"}}).id;
    auto b = o.add_concept("Beta", "BC2", {{"name", "text"}, {"size", "int"}}).id;

    std::vector<Correspondence> cs{{a, b, 1.0, Verdict::Synonym, MatchSource::Case1, -1}};
    MergePlan plan = build_merge_plan({}, cs);
    BusinessComponent bc = ontology_to_bc(o, plan, "M");
    REQUIRE(bc.classes().size() == 1);
    CHECK(bc.classes().front().attributes.size() == 3);

    Ontology clash("O");
    auto x = clash.add_concept("Alpha", "BC1", {{"id", "int"}}).id;
    auto y = clash.add_concept("Beta", "BC2", {{"id", "text"}}).id;
    std::vector<Correspondence> cs2{{x, y, 1.0, Verdict::Synonym, MatchSource::Case1, -1}};
    CHECK_THROWS_AS(ontology_to_bc(clash, build_merge_plan({}, cs2), "M"),
                    ValidationError);
}

TEST_CASE("homonym groups are renamed with origin qualifiers") {
    Ontology o("O");
    o.add_concept("Agent", "BC1", {}, std::string("OBC1#agent"));
    o.add_concept("Agent", "BC2", {}, std::string("OBC2#agent"));

    std::vector<Correspondence> cs{
        {"OBC1#agent", "OBC2#agent", 0.0, Verdict::Homonym, MatchSource::DomainRelation, -1}};
    BusinessComponent bc = ontology_to_bc(o, build_merge_plan({}, cs), "M");
    CHECK(bc.find_class("BC1.Agent") != nullptr);
    CHECK(bc.find_class("BC2.Agent") != nullptr);
    CHECK(bc.find_class("Agent") == nullptr);
}

TEST_CASE("case-variant duplicates within one origin are suffixed apart") {
    BusinessComponent bc("B");
    bc.add_class({"Research Team", {}, {}});
    bc.add_class({"ResearchTeam", {}, {}});

    BusinessComponent back = ontology_to_bc(bc_to_ontology(bc), MergePlan::identity());
    REQUIRE(back.classes().size() == 2);
    std::vector<std::string> norms;
    for (const auto& c : back.classes()) norms.push_back(normalize_term(c.name));
    std::sort(norms.begin(), norms.end());
    CHECK(std::adjacent_find(norms.begin(), norms.end()) == norms.end());
}

TEST_CASE("a plan referencing unknown ids is rejected") {
    Ontology o("O");
    o.add_concept("Alpha", "BC1");
    MergePlan plan;
    plan.representative_of["O#ghost"] = "O#alpha";
    plan.groups["O#alpha"] = {"O#alpha", "O#ghost"};
    CHECK_THROWS_AS(ontology_to_bc(o, plan, "M"), ValidationError);
}

TEST_CASE("plain associations survive merging with substituted endpoints") {
    BusinessComponent bc("B");
    bc.add_class({"Alpha", {}, {}});
    bc.add_class({"Beta", {}, {}});
    bc.add_association({AssociationKind::Association, "Alpha", "Beta", "uses"});

    Ontology o = bc_to_ontology(bc);
    REQUIRE(o.plain_associations().size() == 1);
    BusinessComponent back = ontology_to_bc(o, MergePlan::identity());
    REQUIRE(back.associations().size() == 1);
    CHECK(back.associations().front().kind == AssociationKind::Association);
    CHECK(back.associations().front().label == "uses");
}
