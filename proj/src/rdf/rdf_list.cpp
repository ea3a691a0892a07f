#include "skosforge/rdf_list.hpp"

#include <unordered_set>

#include "skosforge/vocab.hpp"

namespace skosforge {

IdListResult read_rdf_list_ids(const Graph& g, TermId head) {
    IdListResult out;
    const auto nil = g.find_iri(vocab::rdf::nil);
    const auto first = g.find_iri(vocab::rdf::first);
    const auto rest = g.find_iri(vocab::rdf::rest);

    std::unordered_set<TermId> seen;
    TermId cell = head;
    while (!(nil && cell == *nil)) {
        const Term& node = g.term(cell);
        if (node.is_literal()) {
            throw RdfListError(RdfListError::Kind::Malformed, node, "list cell is a literal: " + node.to_ntriples());
        }
        if (!seen.insert(cell).second) {
            throw RdfListError(RdfListError::Kind::Cyclic, node, "cyclic rdf:List at " + node.to_ntriples());
        }
        const auto items = first ? g.objects(cell, *first) : std::vector<TermId>{};
        const auto next = rest ? g.objects(cell, *rest) : std::vector<TermId>{};
        if (items.empty() || next.empty()) {
            throw RdfListError(RdfListError::Kind::Malformed, node,
                               "list cell " + node.to_ntriples() + " lacks rdf:first or rdf:rest");
        }
        if (items.size() > 1 || next.size() > 1) {
            throw RdfListError(RdfListError::Kind::Ambiguous, node,
                               "list cell " + node.to_ntriples() + " has several rdf:first or rdf:rest values");
        }
        out.items.push_back(items.front());
        out.first_triples.push_back(IdTriple{cell, *first, items.front()});
        cell = next.front();
    }
    return out;
}

std::vector<Term> read_rdf_list(const Graph& g, const Term& head) {
    if (head.is_iri() && head.as_iri().value == vocab::rdf::nil) return {};
    const auto id = g.find(head);
    if (!id) {
        throw RdfListError(RdfListError::Kind::Malformed, head, "list head not in graph: " + head.to_ntriples());
    }
    std::vector<Term> out;
    for (const TermId item : read_rdf_list_ids(g, *id).items) out.push_back(g.term(item));
    return out;
}

}  // namespace skosforge
