#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "semint/model.hpp"

namespace semint {

// Exit codes shared by every entry point.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitInternalError = 2;

struct RunConfig {
    std::string domain_path;
    std::vector<std::string> component_paths; // ordered; >= 2 for integrate
    std::string out_ontology = "result.onto.json";
    std::string out_owl = "result.ofn.txt";
    std::string out_component = "result.bc.json";
    std::string out_domain = "enriched-domain.onto.json";
    std::string out_report = "report.json";
    double threshold = 1.0;
    int max_depth = 8;
    bool enrichment_enabled = true;
};

// Full pipeline: parse inputs, transform components to ontologies, align,
// merge, back-transform, and write the five outputs (each written to a
// temporary file and renamed, so no partial output survives an error).
// Prints a one-screen summary to `out`; diagnostics go to `err`.
int run_integrate(const RunConfig& cfg, std::ostream& out, std::ostream& err);

// Transforms one component and writes its ontology in both formats.
int run_transform(const std::string& component_path, const std::string& out_ontology,
                  const std::string& out_owl, std::ostream& out, std::ostream& err);

// Enriches the domain ontology: saturating closure when `saturate` is set
// (requires <= 25 total concepts), session enrichment over cross-component
// pairs otherwise. Writes the enriched domain to `out_path`.
int run_enrich(const std::string& domain_path,
               const std::vector<std::string>& component_paths,
               const std::string& out_path, bool saturate, int max_depth,
               std::ostream& out, std::ostream& err);

// Reads a whole file; throws ValidationError when unreadable.
std::string read_file(const std::string& path);

// Component ontologies named "O" + component name, uniquified with ~2, ~3...
// so duplicate component names never collide.
std::vector<Ontology> components_to_ontologies(const std::vector<BusinessComponent>& bcs);

} // namespace semint
