#pragma once

#include <vector>

#include "skosforge/finding.hpp"
#include "skosforge/inference.hpp"

namespace skosforge {

/// Checks the SKOS integrity conditions (S9, S13, S14, S27, S37, S46) and the
/// checkable SKOS-XL conditions (S48, S52, S58). Expects `mg` to be
/// materialized under the reference profile; on raw data the disjointness
/// checks see only asserted types and relations.
///
/// Findings are Error severity, ordered by rule id then focus.
std::vector<Finding> check_integrity(const MaterializedGraph& mg);

}  // namespace skosforge
