#pragma once

#include <cstddef>
#include <span>
#include <unordered_map>
#include <vector>

#include "skosforge/finding.hpp"
#include "skosforge/graph.hpp"
#include "skosforge/vocab.hpp"

namespace skosforge {

/// First derivation found for a triple.
struct Derivation {
    int axiom = 0;  // axiom number, S<axiom>
    std::vector<IdTriple> premises;
};

using InferenceTrace = std::unordered_map<IdTriple, Derivation, IdTripleHash>;

/// Input triples plus everything derived from them. Term ids in `trace` refer
/// to `graph`.
struct MaterializedGraph {
    Graph graph;
    InferenceTrace trace;
    std::size_t derived_count = 0;
    Profile profile = Profile::Reference;
    /// memberList values that are not well-formed rdf:Lists. Their members
    /// are still derived from every cell reachable through rdf:rest.
    std::vector<Finding> list_issues;

    bool is_derived(IdTriple t) const { return trace.contains(t); }

    /// Wraps a graph without deriving anything.
    static MaterializedGraph from_asserted(Graph g);
};

/// Forward-chains every definition axiom of `profile` to a fixpoint using
/// semi-naive evaluation.
MaterializedGraph materialize(const Graph& g, Profile profile = Profile::Reference);

/// Same, for an explicit axiom subset. Axioms of kinds that license no
/// inference are ignored.
MaterializedGraph materialize_with(const Graph& g, std::span<const Axiom> axioms);

/// All y with (concept skos:broaderTransitive y) in `mg`.
std::vector<Term> broader_closure(const MaterializedGraph& mg, const Term& node);

/// `g` plus the skos labels implied by the SKOS-XL property chains S55-S57.
Graph dumb_down_xl(const Graph& g);

}  // namespace skosforge
