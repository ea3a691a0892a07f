#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "skosforge/integrity.hpp"
#include "skosforge/ntriples.hpp"
#include "skosforge/report.hpp"

namespace skosforge {

namespace {

struct InputFailure {
    std::string diagnostic;
};

std::string read_file(const std::string& path) {
    std::error_code ec;
    if (std::filesystem::is_directory(path, ec)) throw InputFailure{path + ": is a directory"};
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputFailure{path + ": cannot open file"};
    std::string bytes{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    if (in.bad()) throw InputFailure{path + ": read error"};
    return bytes;
}

struct LoadedInputs {
    Graph graph;
    std::vector<InputDigest> digests;
};

/// Parses every input into one graph. Blank node labels are shared across
/// files, so `_:b` in two inputs is one node.
LoadedInputs load_inputs(const std::vector<std::string>& paths) {
    LoadedInputs loaded;
    std::string diagnostics;
    for (const auto& path : paths) {
        const std::string bytes = read_file(path);
        try {
            const Graph part = parse_ntriples(bytes);
            loaded.digests.push_back(InputDigest{path, sha256_hex(bytes), part.size()});
            for (const IdTriple& t : part.id_triples()) loaded.graph.insert(part.resolve(t));
        } catch (const ParseError& e) {
            for (const auto& issue : e.issues()) {
                diagnostics += path + ":" + std::to_string(issue.line) + ":" + std::to_string(issue.column) + ": " +
                               issue.message + "\n";
            }
        }
    }
    if (!diagnostics.empty()) {
        diagnostics.pop_back();
        throw InputFailure{diagnostics};
    }
    return loaded;
}

void write_output(const std::optional<std::string>& path, std::ostream& fallback, const std::string& text) {
    if (!path) {
        fallback << text;
        return;
    }
    std::ofstream file(*path, std::ios::binary);
    if (!file) throw InputFailure{*path + ": cannot open for writing"};
    file << text;
    if (!file) throw InputFailure{*path + ": write error"};
}

std::string axioms_as_text(const std::vector<Axiom>& axioms) {
    std::string out;
    for (const Axiom& a : axioms) {
        out += a.id() + "\t" + std::string(to_string(a.kind));
        for (const auto& arg : a.arguments) out += "\t" + std::string(to_string(arg.role)) + "=" + vocab::compact(arg.iri);
        out += a.is_integrity_condition ? "\tintegrity" : "\tdefinition";
        out += '\n';
    }
    return out;
}

int run_validate(const RunConfig& config, std::ostream& out) {
    const auto start = std::chrono::steady_clock::now();
    LoadedInputs loaded = load_inputs(config.inputs);
    const std::size_t asserted = loaded.graph.size();
    const MaterializedGraph mg = materialize(loaded.graph, config.profile);

    std::vector<Finding> findings = check_integrity(mg);
    auto warnings = check_guidelines(mg, config.guidelines);
    findings.insert(findings.end(), warnings.begin(), warnings.end());
    findings.insert(findings.end(), mg.list_issues.begin(), mg.list_issues.end());

    Report report = make_report(std::move(loaded.digests), asserted, mg.derived_count, std::move(findings));
    if (config.timing) {
        report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
                                .count();
    }
    write_output(config.output_path, out, format_report(report, config.format, config.color));
    const bool any_error = std::any_of(report.findings.begin(), report.findings.end(),
                                       [](const Finding& f) { return f.severity == Severity::Error; });
    return any_error ? exit_code::kErrors : exit_code::kClean;
}

int run_infer(const RunConfig& config, std::ostream& out, std::ostream& err) {
    LoadedInputs loaded = load_inputs(config.inputs);
    const MaterializedGraph mg = materialize(loaded.graph, config.profile);
    write_output(config.output_path, out, serialize_ntriples(mg.graph));
    if (config.trace) write_output(config.trace_path, err, trace_to_json(mg));
    return exit_code::kClean;
}

int run_stats(const RunConfig& config, std::ostream& out) {
    LoadedInputs loaded = load_inputs(config.inputs);
    const MaterializedGraph mg = materialize(loaded.graph, config.profile);
    write_output(config.output_path, out, format_stats(compute_stats(mg), config.format));
    return exit_code::kClean;
}

int run_axioms(const RunConfig& config, std::ostream& out) {
    const auto axioms = axioms_for(config.profile);
    const std::string text =
        config.format == OutputFormat::Json ? axioms_to_json(axioms) + "\n" : axioms_as_text(axioms);
    write_output(config.output_path, out, text);
    return exit_code::kClean;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    if (config.mode != Mode::Axioms && config.inputs.empty()) {
        err << "skosforge: at least one input file is required\n";
        return exit_code::kUsage;
    }
    try {
        switch (config.mode) {
        case Mode::Validate: return run_validate(config, out);
        case Mode::Infer: return run_infer(config, out, err);
        case Mode::Stats: return run_stats(config, out);
        case Mode::Axioms: return run_axioms(config, out);
        }
    } catch (const InputFailure& failure) {
        err << failure.diagnostic << "\n";
        return exit_code::kInputFailure;
    }
    return exit_code::kUsage;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err, bool color_capable) {
    CLI::App app{"SKOS and SKOS-XL validator, reasoner and linter", "skosforge"};
    app.set_version_flag("--version", std::string(kToolVersion));

    RunConfig config;
    std::string mode;
    std::string profile = "reference";
    std::string format = "text";
    std::vector<std::string> enable;
    std::vector<std::string> disable;
    std::string config_path;
    std::string trace_path;
    std::string output_path;

    app.add_option("mode", mode, "validate, infer, stats or axioms")
        ->required()
        ->check(CLI::IsMember({"validate", "infer", "stats", "axioms"}));
    app.add_option("files", config.inputs, "N-Triples input files");
    app.add_option("--profile", profile, "axiom profile")
        ->check(CLI::IsMember({"reference", "rdf-schema", "owl-dl-prune"}));
    app.add_option("--format", format, "report format")->check(CLI::IsMember({"text", "json"}));
    app.add_flag("--trace", config.trace, "infer: write the derivation trace as JSON");
    app.add_option("--trace-file", trace_path, "trace destination (default: standard error)");
    app.add_option("--enable", enable, "enable a guideline rule id, or all")->take_all();
    app.add_option("--disable", disable, "disable a guideline rule id, or all")->take_all();
    app.add_option("--config", config_path, "TOML file with a [guidelines] section");
    app.add_option("-o,--output", output_path, "write the primary output to a file");
    bool no_timing = false;
    app.add_flag("--no-timing", no_timing, "write elapsed_ms as 0");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return exit_code::kUsage;
    }

    config.mode = mode == "validate" ? Mode::Validate
                  : mode == "infer"  ? Mode::Infer
                  : mode == "stats"  ? Mode::Stats
                                     : Mode::Axioms;
    config.profile = *profile_from_string(profile);
    config.format = format == "json" ? OutputFormat::Json : OutputFormat::Text;
    config.timing = !no_timing;
    if (!trace_path.empty()) config.trace_path = trace_path;
    if (!output_path.empty()) config.output_path = output_path;
    config.color = color_capable && std::getenv("SKOSFORGE_NO_COLOR") == nullptr;

    if (!config_path.empty()) {
        std::string text;
        try {
            text = read_file(config_path);
        } catch (const InputFailure& failure) {
            err << failure.diagnostic << "\n";
            return exit_code::kInputFailure;
        }
        try {
            apply_guideline_config(config.guidelines, text);
        } catch (const std::invalid_argument& e) {
            err << config_path << ": " << e.what() << "\n";
            return exit_code::kUsage;
        }
    }
    for (const auto& id : disable) {
        if (!set_rule_enabled(config.guidelines, id, false)) {
            err << "skosforge: unknown guideline rule " << id << "\n";
            return exit_code::kUsage;
        }
    }
    for (const auto& id : enable) {
        if (!set_rule_enabled(config.guidelines, id, true)) {
            err << "skosforge: unknown guideline rule " << id << "\n";
            return exit_code::kUsage;
        }
    }
    return run(config, out, err);
}

}  // namespace skosforge
