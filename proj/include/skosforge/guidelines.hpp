#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "skosforge/finding.hpp"
#include "skosforge/inference.hpp"

namespace skosforge {

struct GuidelineRule {
    std::string id;  // "G-..."
    std::string description;
    bool enabled = true;
};

namespace guideline {
inline constexpr std::string_view kHierCycle = "G-HIER-CYCLE";
inline constexpr std::string_view kReflexive = "G-REFLEXIVE";
inline constexpr std::string_view kSameSchemeMatch = "G-SAME-SCHEME-MATCH";
inline constexpr std::string_view kMissingPrefLabel = "G-MISSING-PREFLABEL";
inline constexpr std::string_view kTopWithBroader = "G-TOP-WITH-BROADER";
inline constexpr std::string_view kOrphan = "G-ORPHAN";
inline constexpr std::string_view kPlainLiteral = "G-PLAIN-LITERAL";
inline constexpr std::string_view kNotationUntyped = "G-NOTATION-UNTYPED";
inline constexpr std::string_view kMemberListMulti = "G-MEMBERLIST-MULTI";
inline constexpr std::string_view kUnionRange = "G-UNION-RANGE";
}  // namespace guideline

/// Every guideline rule, all enabled, in a fixed order.
std::vector<GuidelineRule> default_guideline_rules();

/// Sets `enabled` on the rule named `id`, or on every rule for "all".
/// Returns false when no such rule exists.
bool set_rule_enabled(std::vector<GuidelineRule>& rules, std::string_view id, bool enabled);

/// Warning-severity findings for every enabled rule. Expects `mg` to be
/// materialized under the reference profile.
std::vector<Finding> check_guidelines(const MaterializedGraph& mg, const std::vector<GuidelineRule>& rules);

/// Rules from a TOML-shaped document:
///
///     [guidelines]
///     disable = ["G-ORPHAN"]
///     enable = ["G-HIER-CYCLE"]
///
/// Disables are applied before enables; "all" matches every rule. Throws
/// std::invalid_argument on syntax errors or unknown rule ids.
void apply_guideline_config(std::vector<GuidelineRule>& rules, std::string_view toml_text);

}  // namespace skosforge
