#include "skosforge/integrity.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>

namespace skosforge {

namespace {

using IdPair = std::pair<std::string_view, std::string_view>;

/// Disjoint pairs named by a disjointness axiom: either the first argument
/// against every `DisjointWith`, or all `role` arguments pairwise.
std::vector<IdPair> disjoint_pairs(const Axiom& a, Role role) {
    std::vector<IdPair> out;
    const auto primary = a.iris_with(role);
    const auto others = a.iris_with(Role::DisjointWith);
    if (!others.empty()) {
        for (auto p : primary) {
            for (auto q : others) out.emplace_back(p, q);
        }
    } else {
        for (std::size_t i = 0; i < primary.size(); ++i) {
            for (std::size_t j = i + 1; j < primary.size(); ++j) out.emplace_back(primary[i], primary[j]);
        }
    }
    return out;
}

bool is_symmetric(std::string_view property) {
    for (const Axiom& a : axiom_table()) {
        if (a.kind != AxiomKind::Symmetric) continue;
        for (auto p : a.iris_with(Role::Property)) {
            if (p == property) return true;
        }
    }
    return false;
}

void sort_evidence(std::vector<Triple>& evidence) {
    std::sort(evidence.begin(), evidence.end(),
              [](const Triple& x, const Triple& y) { return x.to_ntriples() < y.to_ntriples(); });
}

class Checker {
public:
    explicit Checker(const Graph& g) : g_(g) {}

    void run() {
        for (const Axiom& a : axiom_table()) {
            if (!a.is_integrity_condition) continue;
            switch (a.kind) {
            case AxiomKind::DisjointClasses: disjoint_classes(a); break;
            case AxiomKind::DisjointProperties: disjoint_properties(a); break;
            case AxiomKind::UniquePrefLabelPerLanguage: unique_per_language(a); break;
            case AxiomKind::CardinalityExactlyOne: exactly_one(a); break;
            default: break;
            }
        }
    }

    std::vector<Finding> take() { return std::move(findings_); }

private:
    std::optional<TermId> iri(std::string_view value) const { return g_.find_iri(value); }

    void add(const Axiom& a, TermId focus, std::vector<Triple> evidence, std::string message) {
        sort_evidence(evidence);
        findings_.push_back(Finding{a.id(), Severity::Error, g_.term(focus), std::move(evidence), std::move(message)});
    }

    void disjoint_classes(const Axiom& a) {
        const auto type = iri(vocab::rdf::type);
        if (!type) return;
        for (const auto& [first, second] : disjoint_pairs(a, Role::Class)) {
            const auto c1 = iri(first);
            const auto c2 = iri(second);
            if (!c1 || !c2) continue;
            g_.for_each_match(std::nullopt, *type, *c1, [&](const IdTriple& t) {
                const IdTriple other{t.s, *type, *c2};
                if (!g_.contains(other)) return;
                add(a, t.s, {g_.resolve(t), g_.resolve(other)},
                    "typed as both " + vocab::compact(first) + " and " + vocab::compact(second) +
                        ", which are disjoint classes");
            });
        }
    }

    void disjoint_properties(const Axiom& a) {
        for (const auto& [first, second] : disjoint_pairs(a, Role::Property)) {
            const auto p = iri(first);
            const auto q = iri(second);
            if (!p || !q) continue;
            const bool mirrored = is_symmetric(first) && is_symmetric(second);
            std::vector<IdTriple> hits;
            std::set<std::pair<TermId, TermId>> seen;
            g_.for_each_match(std::nullopt, *p, std::nullopt, [&](const IdTriple& t) {
                if (g_.contains(IdTriple{t.s, *q, t.o})) {
                    hits.push_back(t);
                    seen.emplace(t.s, t.o);
                }
            });
            for (const IdTriple& t : hits) {
                // Both properties symmetric: (x,y) and (y,x) are one clash.
                if (mirrored && t.s != t.o && seen.contains({t.o, t.s}) &&
                    g_.term(t.s).to_ntriples() > g_.term(t.o).to_ntriples()) {
                    continue;
                }
                const Triple via_p = g_.resolve(t);
                const Triple via_q = g_.resolve(IdTriple{t.s, *q, t.o});
                add(a, t.s, {via_p, via_q},
                    vocab::compact(first) + " and " + vocab::compact(second) + " are disjoint but both link to " +
                        via_p.object.to_ntriples());
            }
        }
    }

    void unique_per_language(const Axiom& a) {
        for (auto property : a.iris_with(Role::Property)) {
            const auto p = iri(property);
            if (!p) continue;
            // subject -> language bucket -> literals
            std::map<TermId, std::map<std::string, std::vector<IdTriple>>> buckets;
            g_.for_each_match(std::nullopt, *p, std::nullopt, [&](const IdTriple& t) {
                const Term& value = g_.term(t.o);
                if (!value.is_literal()) return;
                const auto& lang = value.as_literal().language;
                buckets[t.s][lang ? ascii_lower(*lang) : std::string()].push_back(t);
            });
            for (const auto& [subject, by_lang] : buckets) {
                for (const auto& [lang, triples] : by_lang) {
                    if (triples.size() < 2) continue;
                    std::vector<Triple> evidence;
                    for (const auto& t : triples) evidence.push_back(g_.resolve(t));
                    const std::string tag = lang.empty() ? "no language tag" : "language tag \"" + lang + "\"";
                    add(a, subject, std::move(evidence),
                        std::to_string(triples.size()) + " distinct " + vocab::compact(property) + " values share " +
                            tag);
                }
            }
        }
    }

    void exactly_one(const Axiom& a) {
        const auto type = iri(vocab::rdf::type);
        const auto cls = iri(a.iris_with(Role::Class).at(0));
        const auto property_iri = a.iris_with(Role::Property).at(0);
        const auto p = iri(property_iri);
        if (!type || !cls) return;
        g_.for_each_match(std::nullopt, *type, *cls, [&](const IdTriple& typed) {
            const auto values = p ? g_.objects(typed.s, *p) : std::vector<TermId>{};
            if (values.size() == 1) return;
            std::vector<Triple> evidence{g_.resolve(typed)};
            for (const TermId v : values) evidence.push_back(g_.resolve(IdTriple{typed.s, *p, v}));
            add(a, typed.s, std::move(evidence),
                "has " + std::to_string(values.size()) + " " + vocab::compact(property_iri) +
                    " values, exactly 1 required");
        });
    }

    const Graph& g_;
    std::vector<Finding> findings_;
};

}  // namespace

std::vector<Finding> check_integrity(const MaterializedGraph& mg) {
    Checker checker(mg.graph);
    checker.run();
    auto findings = checker.take();
    sort_findings(findings);
    return findings;
}

}  // namespace skosforge
