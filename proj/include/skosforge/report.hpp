#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "skosforge/finding.hpp"
#include "skosforge/guidelines.hpp"
#include "skosforge/inference.hpp"
#include "skosforge/vocab.hpp"

namespace skosforge {

inline constexpr std::string_view kToolVersion = "0.1.0";

enum class Mode { Validate, Infer, Stats, Axioms };
enum class OutputFormat { Text, Json };

struct RunConfig {
    std::vector<std::string> inputs;
    Profile profile = Profile::Reference;
    Mode mode = Mode::Validate;
    OutputFormat format = OutputFormat::Text;
    std::vector<GuidelineRule> guidelines = default_guideline_rules();
    /// Infer only: emit the derivation trace.
    bool trace = false;
    /// Trace destination; the error stream when unset.
    std::optional<std::string> trace_path;
    /// Primary output destination; the output stream when unset.
    std::optional<std::string> output_path;
    /// When false, elapsed_ms is written as 0 so reports are byte-stable.
    bool timing = true;
    /// ANSI styling of text reports.
    bool color = false;
};

struct InputDigest {
    std::string path;
    std::string sha256;  // lowercase hex of the file bytes
    std::size_t triples = 0;

    friend bool operator==(const InputDigest&, const InputDigest&) = default;
};

struct Report {
    std::string version{kToolVersion};
    std::vector<InputDigest> inputs;
    std::size_t asserted = 0;
    std::size_t derived = 0;
    std::vector<Finding> findings;  // sorted with finding_less
    std::map<std::string, std::size_t> tallies;
    std::int64_t elapsed_ms = 0;

    friend bool operator==(const Report&, const Report&) = default;
};

/// Every rule id a report tallies: the integrity conditions, S36 and the
/// guideline rules, in report order.
std::vector<std::string> tallied_rule_ids();

/// Sorts `findings` and fills zeroed tallies for every tallied rule.
Report make_report(std::vector<InputDigest> inputs, std::size_t asserted, std::size_t derived,
                   std::vector<Finding> findings);

/// Json: one object `{version, inputs, asserted, derived, findings, tallies,
/// elapsed_ms}` with keys in that order. Text: one `SEVERITY rule focus:
/// message` line per finding followed by a summary line.
std::string format_report(const Report& report, OutputFormat format, bool color = false);

/// Inverse of the JSON format. Throws std::invalid_argument on malformed input.
Report report_from_json(std::string_view json);

struct SchemeStats {
    std::size_t concepts = 0;
    std::size_t schemes = 0;
    std::size_t collections = 0;
    /// skos:prefLabel/altLabel/hiddenLabel values keyed by lowercased
    /// language tag; "" for untagged.
    std::map<std::string, std::size_t> labels_per_language;
    /// Asserted triples whose predicate is skos:semanticRelation or below it.
    std::size_t semantic_relation_triples = 0;

    friend bool operator==(const SchemeStats&, const SchemeStats&) = default;
};

SchemeStats compute_stats(const MaterializedGraph& mg);

std::string format_stats(const SchemeStats& stats, OutputFormat format);

/// `{derived, axiom, premises}` per derived triple, sorted by `derived`.
std::string trace_to_json(const MaterializedGraph& mg);

/// Lowercase hex SHA-256.
std::string sha256_hex(std::string_view bytes);

namespace exit_code {
inline constexpr int kClean = 0;
inline constexpr int kErrors = 1;
inline constexpr int kInputFailure = 2;
inline constexpr int kUsage = 3;
}  // namespace exit_code

int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses the command line and runs it. `color_capable` says whether `out`
/// is a terminal; SKOSFORGE_NO_COLOR overrides it.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
               bool color_capable = false);

}  // namespace skosforge
