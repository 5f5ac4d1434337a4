#include "semint/pipeline.hpp"

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "semint/alignment.hpp"
#include "semint/enrichment.hpp"
#include "semint/formats.hpp"
#include "semint/similarity.hpp"
#include "semint/transform.hpp"

namespace semint {

namespace fs = std::filesystem;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw ValidationError("error while reading '" + path + "'");
    return buf.str();
}

namespace {

void write_file_atomic(const std::string& path, const std::string& content) {
    fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw ValidationError("cannot write '" + tmp.string() + "'");
        out << content;
        out.flush();
        if (!out) throw ValidationError("error while writing '" + tmp.string() + "'");
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        std::error_code ignored;
        fs::remove(tmp, ignored);
        throw ValidationError("cannot move '" + tmp.string() + "' to '" + path +
                              "': " + ec.message());
    }
}

BusinessComponent load_component(const std::string& path) {
    return parse_component_document(read_file(path), path);
}

Ontology load_ontology(const std::string& path, std::ostream& err) {
    std::vector<std::string> warnings;
    Ontology o = parse_ontology_document(read_file(path), path, &warnings);
    for (const auto& w : warnings) err << "warning: " << w << "\n";
    return o;
}

template <typename Fn>
int guarded(std::ostream& err, Fn&& body) {
    try {
        return body();
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::logic_error& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternalError;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternalError;
    }
}

} // namespace

std::vector<Ontology> components_to_ontologies(
    const std::vector<BusinessComponent>& bcs) {
    std::vector<Ontology> out;
    out.reserve(bcs.size());
    std::set<std::string> names;
    for (const auto& bc : bcs) {
        std::string name = "O" + bc.name();
        std::string candidate = name;
        for (int k = 2; !names.insert(candidate).second; ++k)
            candidate = name + "~" + std::to_string(k);
        out.push_back(bc_to_ontology(bc, candidate));
    }
    return out;
}

int run_integrate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    return guarded(err, [&]() {
        if (cfg.component_paths.size() < 2)
            throw ValidationError(
                "integrate needs at least two --component inputs (usage: "
                "semint integrate --domain <path> --component <path> --component <path> ...)");
        std::set<std::string> outputs{cfg.out_ontology, cfg.out_owl, cfg.out_component,
                                      cfg.out_domain, cfg.out_report};
        if (outputs.size() != 5)
            throw ValidationError("output paths must be distinct");

        Ontology domain = load_ontology(cfg.domain_path, err);
        std::vector<BusinessComponent> bcs;
        bcs.reserve(cfg.component_paths.size());
        for (const auto& p : cfg.component_paths) bcs.push_back(load_component(p));

        std::vector<Ontology> ontologies = components_to_ontologies(bcs);
        AlignmentResult result = align_ontologies(domain, ontologies, cfg.threshold,
                                                  cfg.max_depth, cfg.enrichment_enabled);
        MergePlan plan = build_merge_plan(result.context.components,
                                          result.correspondences);
        BusinessComponent merged = ontology_to_bc(result.result_ontology, plan, "BCr");

        // Everything computed; only now touch the filesystem.
        write_file_atomic(cfg.out_ontology,
                          serialize_ontology_document(result.result_ontology));
        write_file_atomic(cfg.out_owl, emit_owl_functional(result.result_ontology));
        write_file_atomic(cfg.out_component, serialize_component_document(merged));
        write_file_atomic(cfg.out_domain,
                          serialize_ontology_document(result.enriched_domain));
        write_file_atomic(cfg.out_report,
                          serialize_report(result.report, plan, result.result_ontology));

        std::size_t added =
            result.enriched_domain.relation_count() - domain.relation_count();
        out << "components read: " << bcs.size() << " (";
        for (std::size_t i = 0; i < bcs.size(); ++i)
            out << (i ? ", " : "") << bcs[i].name();
        out << ")\n";
        out << "concept pairs compared: " << result.correspondences.size() << "\n";
        out << "synonym conflicts: " << result.report.synonym_conflicts.size()
            << ", homonym conflicts: " << result.report.homonym_conflicts.size()
            << ", unresolved: " << result.report.unresolved.size() << "\n";
        out << "relations added to domain: " << added << "\n";
        out << "merged component classes: " << merged.classes().size() << "\n";
        out << "outputs: " << cfg.out_ontology << " " << cfg.out_owl << " "
            << cfg.out_component << " " << cfg.out_domain << " " << cfg.out_report
            << "\n";
        return kExitOk;
    });
}

int run_transform(const std::string& component_path, const std::string& out_ontology,
                  const std::string& out_owl, std::ostream& out, std::ostream& err) {
    return guarded(err, [&]() {
        BusinessComponent bc = load_component(component_path);
        Ontology o = bc_to_ontology(bc);
        write_file_atomic(out_ontology, serialize_ontology_document(o));
        write_file_atomic(out_owl, emit_owl_functional(o));
        out << "component " << bc.name() << ": " << bc.classes().size() << " classes -> "
            << o.concept_count() << " concepts, " << o.relation_count()
            << " relations\n";
        out << "outputs: " << out_ontology << " " << out_owl << "\n";
        return kExitOk;
    });
}

int run_enrich(const std::string& domain_path,
               const std::vector<std::string>& component_paths,
               const std::string& out_path, bool saturate, int max_depth,
               std::ostream& out, std::ostream& err) {
    return guarded(err, [&]() {
        Ontology domain = load_ontology(domain_path, err);
        std::vector<BusinessComponent> bcs;
        for (const auto& p : component_paths) bcs.push_back(load_component(p));
        std::vector<Ontology> ontologies = components_to_ontologies(bcs);

        Ontology enriched;
        if (saturate) {
            std::size_t total = domain.concept_count();
            for (const auto& o : ontologies) total += o.concept_count();
            if (total > 25)
                throw ValidationError(
                    "--saturate is limited to 25 total concepts, got " +
                    std::to_string(total) + "; rerun without --saturate for session mode");
            enriched = closure_oracle(domain, ontologies);
        } else {
            AlignmentContext ctx =
                AlignmentContext::make(domain, ontologies, 1.0, max_depth, true);
            for (std::size_t i = 0; i < ctx.components.size(); ++i) {
                for (std::size_t j = i + 1; j < ctx.components.size(); ++j) {
                    for (const auto& a : ctx.components[i].concept_ids()) {
                        for (const auto& b : ctx.components[j].concept_ids()) {
                            semantic_similarity(ctx, ctx.components[i], a,
                                                ctx.components[j], b);
                        }
                    }
                }
            }
            enriched = std::move(ctx.domain);
        }

        write_file_atomic(out_path, serialize_ontology_document(enriched));
        out << "relations added to domain: "
            << enriched.relation_count() - domain.relation_count() << "\n";
        out << "output: " << out_path << "\n";
        return kExitOk;
    });
}

} // namespace semint
