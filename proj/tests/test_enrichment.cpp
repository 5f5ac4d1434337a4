#include <doctest.h>

#include <algorithm>
#include <set>

#include "generators.hpp"
#include "semint/alignment.hpp"
#include "semint/enrichment.hpp"
#include "semint/formats.hpp"
#include "semint/pipeline.hpp"
#include "semint/transform.hpp"

using namespace semint;

namespace {

std::set<std::tuple<int, std::string, std::string>> relation_keys(const Ontology& o) {
    std::set<std::tuple<int, std::string, std::string>> keys;
    for (const auto& r : o.relations()) keys.insert(r.key());
    return keys;
}

AlignmentContext six_fixture_context() {
    Ontology obc1 = bc_to_ontology(parse_component_document(
        read_file(std::string(SEMINT_FIXTURES_DIR) + "/bc1.bc.json")));
    Ontology obc2 = bc_to_ontology(parse_component_document(
        read_file(std::string(SEMINT_FIXTURES_DIR) + "/bc2.bc.json")));
    Ontology domain = parse_ontology_document(
        read_file(std::string(SEMINT_FIXTURES_DIR) + "/od.onto.json"));
    return AlignmentContext::make(std::move(domain), {std::move(obc1), std::move(obc2)});
}

} // namespace

TEST_CASE("case 1 transfers locally declared equivalences") {
    Ontology domain("OD");
    auto lab = domain.add_concept("Laboratory", "OD").id;
    auto ws = domain.add_concept("Workshop", "OD").id;

    Ontology comp("OBC1");
    auto c_lab = comp.add_concept("Laboratory", "BC1").id;
    auto c_ws = comp.add_concept("Workshop", "BC1").id;
    comp.add_relation(SemanticRelation::make(RelationKind::Equivalence, c_lab, c_ws));

    auto ctx = AlignmentContext::make(domain, {comp});
    EnrichmentOutcome out = try_case1(ctx, lab, ws);
    REQUIRE(out.fired());
    CHECK(*out.fired_case == Provenance::Case1);
    REQUIRE(out.added.size() == 1);
    CHECK(out.added.front().kind == RelationKind::Synonymy);
    CHECK(out.added.front().provenance == Provenance::Case1);

    // No local relation anywhere: empty outcome.
    Ontology bare("OBC2");
    bare.add_concept("Laboratory", "BC2");
    bare.add_concept("Workshop", "BC2");
    auto ctx2 = AlignmentContext::make(domain, {bare});
    CHECK(!try_case1(ctx2, lab, ws).fired());

    // Only an equivalence-class relation transfers; homonymy does not.
    Ontology hom("OBC3");
    auto h_lab = hom.add_concept("Laboratory", "BC3").id;
    auto h_ws = hom.add_concept("Workshop", "BC3").id;
    hom.add_relation(SemanticRelation::make(RelationKind::Homonymy, h_lab, h_ws));
    auto ctx3 = AlignmentContext::make(domain, {hom});
    CHECK(!try_case1(ctx3, lab, ws).fired());
    // The closure oracle agrees on the same four concepts.
    Ontology saturated = closure_oracle(domain, {hom});
    CHECK(relation_keys(saturated) == relation_keys(domain));
}

TEST_CASE("case 2 derives synonymy through similar equivalent neighbors") {
    Ontology domain("OD");
    auto c1 = domain.add_concept("Storehouse", "OD").id;
    auto c2 = domain.add_concept("Stockroom", "OD").id;
    auto x = domain.add_concept("Depot", "OD").id;
    domain.add_relation(SemanticRelation::make(RelationKind::Synonymy, c1, x));
    domain.add_relation(SemanticRelation::make(RelationKind::Synonymy, c2, x));

    Ontology comp("OBC1");
    comp.add_concept("Storehouse", "BC1");
    comp.add_concept("Stockroom", "BC1");

    auto ctx = AlignmentContext::make(domain, {comp});
    EnrichmentOutcome out = try_case2(ctx, c1, c2);
    REQUIRE(out.fired());
    CHECK(*out.fired_case == Provenance::Case2);

    // Neighbors exist but are dissimilar: empty outcome.
    Ontology domain2("OD");
    auto d1 = domain2.add_concept("Storehouse", "OD").id;
    auto d2 = domain2.add_concept("Stockroom", "OD").id;
    auto n1 = domain2.add_concept("Depot", "OD").id;
    auto n2 = domain2.add_concept("Office", "OD").id;
    domain2.add_relation(SemanticRelation::make(RelationKind::Synonymy, d1, n1));
    domain2.add_relation(SemanticRelation::make(RelationKind::Synonymy, d2, n2));
    auto ctx2 = AlignmentContext::make(domain2, {comp});
    CHECK(!try_case2(ctx2, d1, d2).fired());
}

TEST_CASE("case 2 accepts neighbor edges declared in components") {
    Ontology domain("OD");
    auto c1 = domain.add_concept("Storehouse", "OD").id;
    auto c2 = domain.add_concept("Stockroom", "OD").id;
    domain.add_concept("Depot", "OD");

    Ontology comp1("OBC1");
    auto l1 = comp1.add_concept("Storehouse", "BC1").id;
    auto l1n = comp1.add_concept("Depot", "BC1").id;
    comp1.add_relation(SemanticRelation::make(RelationKind::Equivalence, l1, l1n));

    Ontology comp2("OBC2");
    auto l2 = comp2.add_concept("Stockroom", "BC2").id;
    auto l2n = comp2.add_concept("Depot", "BC2").id;
    comp2.add_relation(SemanticRelation::make(RelationKind::Synonymy, l2, l2n));

    auto ctx = AlignmentContext::make(domain, {comp1, comp2});
    EnrichmentOutcome out = try_case2(ctx, c1, c2);
    REQUIRE(out.fired());
    CHECK(out.added.front() ==
          SemanticRelation::make(RelationKind::Synonymy, c1, c2));
}

TEST_CASE("case 3 matches composite children") {
    auto ctx = six_fixture_context();

    EnrichmentOutcome out = try_case3(ctx, "OD#laboratory", "OD#workshop");
    REQUIRE(out.fired());
    CHECK(*out.fired_case == Provenance::Case3);
    bool names_children = false;
    for (const auto& line : out.trace) {
        if (line.find("Delegated medical") != std::string::npos &&
            line.find("medical representative") != std::string::npos)
            names_children = true;
    }
    CHECK(names_children);
}

TEST_CASE("case 3 needs every child matched and equal set sizes") {
    // Same shape as the fixtures, but without the children's synonymy.
    auto ctx = six_fixture_context();
    Ontology stripped("OD");
    for (const auto& [id, c] : ctx.domain.concepts())
        stripped.add_concept(c.term.raw, c.origin, c.attributes, c.id);
    auto ctx2 = AlignmentContext::make(stripped, ctx.components);
    CHECK(!try_case3(ctx2, "OD#laboratory", "OD#workshop").fired());

    // Different child-set sizes: no perfect matching exists.
    Ontology domain("OD");
    auto p1 = domain.add_concept("Plant", "OD").id;
    auto p2 = domain.add_concept("Factory", "OD").id;
    Ontology comp("OBC1");
    auto cp1 = comp.add_concept("Plant", "BC1").id;
    auto k1 = comp.add_concept("Press", "BC1").id;
    auto k2 = comp.add_concept("Lathe", "BC1").id;
    comp.add_relation(SemanticRelation::make(RelationKind::PartOf, k1, cp1));
    comp.add_relation(SemanticRelation::make(RelationKind::PartOf, k2, cp1));
    Ontology comp2("OBC2");
    auto cp2 = comp2.add_concept("Factory", "BC2").id;
    auto k3 = comp2.add_concept("Press", "BC2").id;
    comp2.add_relation(SemanticRelation::make(RelationKind::PartOf, k3, cp2));
    auto ctx3 = AlignmentContext::make(domain, {comp, comp2});
    CHECK(!try_case3(ctx3, p1, p2).fired());
}

TEST_CASE("enrich_pair tries the cases in order and guards visited pairs") {
    // Both case 1 and case 3 could fire here; case 1 wins.
    Ontology domain("OD");
    auto lab = domain.add_concept("Laboratory", "OD").id;
    auto ws = domain.add_concept("Workshop", "OD").id;

    Ontology comp1("OBC1");
    auto c_lab = comp1.add_concept("Laboratory", "BC1").id;
    auto c_rt = comp1.add_concept("Research Team", "BC1").id;
    comp1.add_relation(SemanticRelation::make(RelationKind::PartOf, c_rt, c_lab));
    Ontology comp2("OBC2");
    auto c_ws = comp2.add_concept("Workshop", "BC2").id;
    auto c_rt2 = comp2.add_concept("Research Team", "BC2").id;
    auto c_lab2 = comp2.add_concept("Laboratory", "BC2").id;
    comp2.add_relation(SemanticRelation::make(RelationKind::PartOf, c_rt2, c_ws));
    comp2.add_relation(SemanticRelation::make(RelationKind::Equivalence, c_lab2, c_ws));

    auto ctx = AlignmentContext::make(domain, {comp1, comp2});
    EnrichmentOutcome out = enrich_pair(ctx, lab, ws);
    REQUIRE(out.fired());
    CHECK(*out.fired_case == Provenance::Case1);
    CHECK(ctx.domain.relations_between(lab, ws).size() == 1);

    // Second call on the same pair in one session: the visited guard cuts it.
    EnrichmentOutcome again = enrich_pair(ctx, ws, lab);
    CHECK(!again.fired());
    CHECK(ctx.enrich_invocations == 1);
}

TEST_CASE("worked example pair fires case 3 through enrich_pair") {
    auto ctx = six_fixture_context();
    EnrichmentOutcome out = enrich_pair(ctx, "OD#laboratory", "OD#workshop");
    REQUIRE(out.fired());
    CHECK(*out.fired_case == Provenance::Case3);
    CHECK(!ctx.domain.relations_between("OD#laboratory", "OD#workshop").empty());
}

TEST_CASE("closure oracle saturates the worked example") {
    auto ctx = six_fixture_context();
    Ontology saturated = closure_oracle(ctx.domain, ctx.components);
    auto lw = saturated.relations_between("OD#laboratory", "OD#workshop");
    REQUIRE(lw.size() == 1);
    CHECK(lw.front().kind == RelationKind::Synonymy);
    CHECK(!saturated
               .relations_between("OD#delegated medical", "OD#medical representative")
               .empty());

    // Nothing derivable: the fixpoint is the input.
    Ontology empty_domain("OD");
    empty_domain.add_concept("Alpha", "OD");
    empty_domain.add_concept("Bravo", "OD");
    Ontology comp("OBC1");
    comp.add_concept("Alpha", "BC1");
    Ontology comp2("OBC2");
    comp2.add_concept("Bravo", "BC2");
    Ontology unchanged = closure_oracle(empty_domain, {comp, comp2});
    CHECK(relation_keys(unchanged) == relation_keys(empty_domain));
}

TEST_CASE("closure oracle finds chained derivations") {
    // Declared equivalence enables case 3 on the parents, which then enables
    // case 2 one level up through the parents' equivalent neighbors.
    Ontology domain("OD");
    auto plant = domain.add_concept("Plant", "OD").id;
    auto factory = domain.add_concept("Factory", "OD").id;
    auto site = domain.add_concept("Site", "OD").id;
    auto campus = domain.add_concept("Campus", "OD").id;
    domain.add_concept("Press", "OD");
    domain.add_concept("Stamper", "OD");
    domain.add_relation(SemanticRelation::make(RelationKind::Synonymy, site, plant));
    domain.add_relation(SemanticRelation::make(RelationKind::Synonymy, campus, factory));

    Ontology comp1("OBC1");
    auto c_plant = comp1.add_concept("Plant", "BC1").id;
    auto c_press = comp1.add_concept("Press", "BC1").id;
    auto c_crew = comp1.add_concept("Crew", "BC1").id;
    comp1.add_relation(SemanticRelation::make(RelationKind::PartOf, c_press, c_plant));
    comp1.add_relation(SemanticRelation::make(RelationKind::PartOf, c_crew, c_plant));

    Ontology comp2("OBC2");
    auto c_factory = comp2.add_concept("Factory", "BC2").id;
    auto c_stamper = comp2.add_concept("Stamper", "BC2").id;
    auto c_crew2 = comp2.add_concept("Crew", "BC2").id;
    comp2.add_relation(SemanticRelation::make(RelationKind::PartOf, c_stamper, c_factory));
    comp2.add_relation(SemanticRelation::make(RelationKind::PartOf, c_crew2, c_factory));
    comp2.add_relation(
        SemanticRelation::make(RelationKind::Equivalence, c_stamper,
                               comp2.add_concept("Press", "BC2").id));

    Ontology saturated = closure_oracle(domain, {comp1, comp2});
    // press ~ stamper (case 1), then plant ~ factory (case 3), then
    // site ~ campus (case 2 over the new parent synonymy).
    CHECK(!saturated.relations_between(plant, factory).empty());
    CHECK(!saturated.relations_between(site, campus).empty());
}

TEST_CASE("enrichment is monotone, synonymy-only, and bounded") {
    testgen::Rng rng(77);
    for (int round = 0; round < 60; ++round) {
        auto fx = testgen::gen_alignment_fixture(rng);
        auto before_keys = relation_keys(fx.domain);
        auto before_concepts = fx.domain.concept_ids();

        AlignmentResult result = align_ontologies(fx.domain, fx.components);

        auto after_keys = relation_keys(result.enriched_domain);
        CHECK(std::includes(after_keys.begin(), after_keys.end(), before_keys.begin(),
                            before_keys.end()));
        CHECK(result.enriched_domain.concept_ids() == before_concepts);

        // Additions are synonymy-only and exactly the logged derivations.
        std::set<std::tuple<int, std::string, std::string>> logged;
        for (const auto& out : result.context.enrichment_log)
            for (const auto& r : out.added) logged.insert(r.key());
        for (const auto& r : result.enriched_domain.relations()) {
            if (before_keys.count(r.key())) continue;
            CHECK(r.kind == RelationKind::Synonymy);
            CHECK(r.provenance != Provenance::Input);
            CHECK(logged.count(r.key()) == 1);
        }
        for (const auto& key : logged) CHECK(after_keys.count(key) == 1);
        CHECK(result.context.enrich_invocations <=
              result.context.all_concept_pair_count());
    }
}

TEST_CASE("session enrichment is sound against the closure oracle") {
    testgen::Rng rng(78);
    for (int round = 0; round < 25; ++round) {
        auto fx = testgen::gen_alignment_fixture(rng);
        std::size_t total = fx.domain.concept_count();
        for (const auto& c : fx.components) total += c.concept_count();
        REQUIRE(total <= 25);

        AlignmentResult result = align_ontologies(fx.domain, fx.components);
        Ontology saturated = closure_oracle(fx.domain, fx.components);

        auto session = relation_keys(result.enriched_domain);
        auto oracle = relation_keys(saturated);
        CHECK(std::includes(oracle.begin(), oracle.end(), session.begin(),
                            session.end()));
    }
}

TEST_CASE("deterministic outcomes and traces") {
    auto run = [] {
        auto ctx = six_fixture_context();
        return enrich_pair(ctx, "OD#laboratory", "OD#workshop");
    };
    EnrichmentOutcome a = run();
    EnrichmentOutcome b = run();
    CHECK(a.trace == b.trace);
    REQUIRE(a.added.size() == b.added.size());
    CHECK(a.added.front() == b.added.front());
    CHECK(a.added.front().note == b.added.front().note);
}
