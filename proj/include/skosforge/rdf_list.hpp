#pragma once

#include <stdexcept>
#include <vector>

#include "skosforge/graph.hpp"

namespace skosforge {

class RdfListError : public std::runtime_error {
public:
    enum class Kind { Malformed, Cyclic, Ambiguous };

    RdfListError(Kind kind, Term node, const std::string& message)
        : std::runtime_error(message), kind_(kind), node_(std::move(node)) {}

    Kind kind() const { return kind_; }
    /// The list cell at which traversal failed.
    const Term& node() const { return node_; }

private:
    Kind kind_;
    Term node_;
};

/// Items of the rdf:List starting at `head`, in order. rdf:nil is the empty
/// list. Throws RdfListError for a cell missing rdf:first/rdf:rest, a cell
/// carrying several of either, or a cell visited twice.
std::vector<Term> read_rdf_list(const Graph& g, const Term& head);

struct IdListResult {
    std::vector<TermId> items;
    /// The (cell rdf:first item) triples walked, parallel to `items`.
    std::vector<IdTriple> first_triples;
};

IdListResult read_rdf_list_ids(const Graph& g, TermId head);

}  // namespace skosforge
