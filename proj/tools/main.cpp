#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "semint/pipeline.hpp"

namespace {

// Derives transform output defaults from the input path:
// fixtures/bc1.bc.json -> fixtures/bc1.onto.json / fixtures/bc1.ofn.txt
std::string derive_output(const std::string& input, const std::string& extension) {
    const std::string bc_suffix = ".bc.json";
    if (input.size() > bc_suffix.size() &&
        input.compare(input.size() - bc_suffix.size(), bc_suffix.size(), bc_suffix) == 0)
        return input.substr(0, input.size() - bc_suffix.size()) + extension;
    return input + extension;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Semantic integration of business components over a domain ontology"};
    app.require_subcommand(1);

    semint::RunConfig cfg;

    auto* integrate = app.add_subcommand(
        "integrate", "Align components over the domain ontology and emit the merged results");
    integrate->add_option("--domain", cfg.domain_path, "Domain ontology (.onto.json)")
        ->required();
    integrate
        ->add_option("--component", cfg.component_paths,
                     "Component document (.bc.json); repeat per component, order matters")
        ->required();
    integrate->add_option("--out-ontology", cfg.out_ontology,
                          "Result ontology output (.onto.json)");
    integrate->add_option("--out-owl", cfg.out_owl,
                          "Result ontology OWL-functional emission (.ofn.txt)");
    integrate->add_option("--out-component", cfg.out_component,
                          "Merged component output (.bc.json)");
    integrate->add_option("--out-domain", cfg.out_domain,
                          "Enriched domain ontology output (.onto.json)");
    integrate->add_option("--report", cfg.out_report, "Conflict report output (.json)");
    integrate->add_option("--threshold", cfg.threshold,
                          "Synonym verdict threshold in (0,1], default 1.0");
    integrate->add_option("--max-depth", cfg.max_depth,
                          "Enrichment recursion bound, default 8");
    bool no_enrich = false;
    integrate->add_flag("--no-enrich", no_enrich, "Disable the enrichment process");

    std::string transform_component;
    std::string transform_out_onto;
    std::string transform_out_owl;
    auto* transform = app.add_subcommand(
        "transform", "Transform one component into its ontology (both formats)");
    transform
        ->add_option("--component", transform_component, "Component document (.bc.json)")
        ->required();
    transform->add_option("--out-ontology", transform_out_onto,
                          "Ontology output (.onto.json); derived from input when omitted");
    transform->add_option("--out-owl", transform_out_owl,
                          "OWL-functional output (.ofn.txt); derived from input when omitted");

    std::string enrich_domain;
    std::vector<std::string> enrich_components;
    std::string enrich_out = "enriched-domain.onto.json";
    int enrich_max_depth = 8;
    bool saturate = false;
    auto* enrich = app.add_subcommand(
        "enrich", "Enrich the domain ontology from the components' declared knowledge");
    enrich->add_option("--domain", enrich_domain, "Domain ontology (.onto.json)")
        ->required();
    enrich->add_option("--component", enrich_components,
                       "Component document (.bc.json); repeatable");
    enrich->add_option("--out-domain", enrich_out, "Enriched domain output (.onto.json)");
    enrich->add_option("--max-depth", enrich_max_depth,
                       "Enrichment recursion bound, default 8");
    enrich->add_flag("--saturate", saturate,
                     "Apply the rules to a fixpoint (<= 25 total concepts)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp")
            return app.exit(e);
        std::cerr << "error: " << e.what() << "\n";
        std::cerr << app.help() << "\n";
        return semint::kExitInputError;
    }

    if (integrate->parsed()) {
        cfg.enrichment_enabled = !no_enrich;
        return semint::run_integrate(cfg, std::cout, std::cerr);
    }
    if (transform->parsed()) {
        if (transform_out_onto.empty())
            transform_out_onto = derive_output(transform_component, ".onto.json");
        if (transform_out_owl.empty())
            transform_out_owl = derive_output(transform_component, ".ofn.txt");
        return semint::run_transform(transform_component, transform_out_onto,
                                     transform_out_owl, std::cout, std::cerr);
    }
    return semint::run_enrich(enrich_domain, enrich_components, enrich_out, saturate,
                              enrich_max_depth, std::cout, std::cerr);
}
