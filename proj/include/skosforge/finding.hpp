#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "skosforge/term.hpp"

namespace skosforge {

enum class Severity { Error, Warning };

std::string_view to_string(Severity severity);

/// One integrity violation or guideline warning.
struct Finding {
    std::string rule_id;  // "S14", "G-ORPHAN", ...
    Severity severity = Severity::Warning;
    Term focus = Term::iri("urn:unset");
    std::vector<Triple> evidence;
    std::string message;

    friend bool operator==(const Finding&, const Finding&) = default;
};

/// True for the rule ids whose violations are errors: the six SKOS integrity
/// conditions plus the checkable SKOS-XL ones (S48, S52, S58).
bool is_integrity_rule(std::string_view rule_id);

/// Orders rule ids with numeric awareness: S9 < S13 < S46; G-* ids sort
/// before S* ids.
bool rule_id_less(std::string_view a, std::string_view b);

/// Report order: severity (errors first), rule id, focus, then message and
/// evidence as tie-breakers.
bool finding_less(const Finding& a, const Finding& b);

void sort_findings(std::vector<Finding>& findings);

}  // namespace skosforge
