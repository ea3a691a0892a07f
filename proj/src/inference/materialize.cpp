#include <algorithm>
#include <string>
#include <unordered_set>

#include "skosforge/inference.hpp"
#include "skosforge/rdf_list.hpp"

namespace skosforge {

namespace {

struct Link {
    TermId target;
    int axiom;
};

struct ChainRule {
    TermId first;
    TermId second;
    TermId result;
    int axiom;
};

struct ListRule {
    TermId list_property;
    TermId member_property;
    int axiom;
};

/// The axiom catalog compiled against one graph's term ids.
struct RuleSet {
    TermId rdf_type = 0;
    std::unordered_map<TermId, std::vector<Link>> super_properties;
    std::unordered_map<TermId, std::vector<Link>> inverses;
    std::unordered_map<TermId, int> symmetric;
    std::unordered_map<TermId, int> transitive;
    std::unordered_map<TermId, std::vector<Link>> domains;
    std::unordered_map<TermId, std::vector<Link>> ranges;
    std::unordered_map<TermId, std::vector<Link>> super_classes;
    std::vector<ChainRule> chains;
    std::vector<ListRule> list_rules;
};

/// Pairs every `Sub` argument with the next `Super` argument.
template <typename Fn>
void for_each_sub_super(const Axiom& a, Fn&& fn) {
    std::vector<std::string_view> pending;
    for (const auto& arg : a.arguments) {
        if (arg.role == Role::Sub) {
            pending.push_back(arg.iri);
        } else if (arg.role == Role::Super) {
            for (auto sub : pending) fn(sub, arg.iri);
            pending.clear();
        }
    }
}

RuleSet compile(Graph& g, std::span<const Axiom> axioms) {
    RuleSet rules;
    auto id = [&](std::string_view iri) { return g.intern(Term::iri(std::string(iri))); };
    rules.rdf_type = id(vocab::rdf::type);

    for (const Axiom& a : axioms) {
        switch (a.kind) {
        case AxiomKind::SubPropertyOf:
            for_each_sub_super(a, [&](auto sub, auto super) {
                rules.super_properties[id(sub)].push_back({id(super), a.number});
            });
            break;
        case AxiomKind::SubClassOf:
            for_each_sub_super(a, [&](auto sub, auto super) {
                rules.super_classes[id(sub)].push_back({id(super), a.number});
            });
            break;
        case AxiomKind::Domain:
        case AxiomKind::Range: {
            auto& index = a.kind == AxiomKind::Domain ? rules.domains : rules.ranges;
            // A union range (S32) names no single class and derives nothing.
            for (auto property : a.iris_with(Role::Property)) {
                for (auto cls : a.iris_with(Role::Class)) index[id(property)].push_back({id(cls), a.number});
            }
            break;
        }
        case AxiomKind::InverseOf: {
            const TermId p = id(a.iris_with(Role::Property).at(0));
            const TermId q = id(a.iris_with(Role::Inverse).at(0));
            rules.inverses[p].push_back({q, a.number});
            rules.inverses[q].push_back({p, a.number});
            break;
        }
        case AxiomKind::Symmetric:
            for (auto p : a.iris_with(Role::Property)) rules.symmetric.emplace(id(p), a.number);
            break;
        case AxiomKind::Transitive:
            for (auto p : a.iris_with(Role::Property)) rules.transitive.emplace(id(p), a.number);
            break;
        case AxiomKind::PropertyChain: {
            const auto chain = a.iris_with(Role::Chain);
            rules.chains.push_back({id(chain.at(0)), id(chain.at(1)), id(a.iris_with(Role::Super).at(0)), a.number});
            break;
        }
        case AxiomKind::ListMemberRule:
            rules.list_rules.push_back(
                {id(a.iris_with(Role::ListProperty).at(0)), id(a.iris_with(Role::MemberProperty).at(0)), a.number});
            break;
        default:
            // checks, metaclass declarations, functional/cardinality: no inference
            break;
        }
    }
    return rules;
}

struct Pending {
    IdTriple triple;
    int axiom;
    std::vector<IdTriple> premises;
};

class Engine {
public:
    Engine(MaterializedGraph& mg, const RuleSet& rules) : mg_(mg), g_(mg.graph), rules_(rules) {}

    void run() {
        std::vector<IdTriple> delta(g_.id_triples().begin(), g_.id_triples().end());
        std::vector<IdTriple> next;
        std::vector<Pending> pending;
        while (!delta.empty()) {
            next.clear();
            for (const IdTriple& t : delta) {
                pending.clear();
                fire(t, pending);
                for (auto& d : pending) {
                    if (g_.insert(d.triple)) {
                        mg_.trace.emplace(d.triple, Derivation{d.axiom, std::move(d.premises)});
                        ++mg_.derived_count;
                        next.push_back(d.triple);
                    }
                }
            }
            delta.swap(next);
        }
    }

private:
    bool is_literal(TermId id) const { return g_.term(id).is_literal(); }

    void emit(std::vector<Pending>& out, IdTriple t, int axiom, std::vector<IdTriple> premises) const {
        if (g_.contains(t)) return;
        out.push_back({t, axiom, std::move(premises)});
    }

    void fire(const IdTriple& t, std::vector<Pending>& out) const {
        if (auto it = rules_.super_properties.find(t.p); it != rules_.super_properties.end()) {
            for (const Link& l : it->second) emit(out, {t.s, l.target, t.o}, l.axiom, {t});
        }
        if (!is_literal(t.o)) {
            if (auto it = rules_.inverses.find(t.p); it != rules_.inverses.end()) {
                for (const Link& l : it->second) emit(out, {t.o, l.target, t.s}, l.axiom, {t});
            }
            if (auto it = rules_.symmetric.find(t.p); it != rules_.symmetric.end()) {
                emit(out, {t.o, t.p, t.s}, it->second, {t});
            }
            if (auto it = rules_.ranges.find(t.p); it != rules_.ranges.end()) {
                for (const Link& l : it->second) emit(out, {t.o, rules_.rdf_type, l.target}, l.axiom, {t});
            }
        }
        if (auto it = rules_.domains.find(t.p); it != rules_.domains.end()) {
            for (const Link& l : it->second) emit(out, {t.s, rules_.rdf_type, l.target}, l.axiom, {t});
        }
        if (auto it = rules_.transitive.find(t.p); it != rules_.transitive.end()) {
            const int axiom = it->second;
            // t as the left premise: (s p o), (o p z)
            if (!is_literal(t.o)) {
                g_.for_each_match(t.o, t.p, std::nullopt, [&](const IdTriple& right) {
                    emit(out, {t.s, t.p, right.o}, axiom, {t, right});
                });
            }
            // t as the right premise: (w p s), (s p o)
            g_.for_each_match(std::nullopt, t.p, t.s, [&](const IdTriple& left) {
                emit(out, {left.s, t.p, t.o}, axiom, {left, t});
            });
        }
        if (t.p == rules_.rdf_type) {
            if (auto it = rules_.super_classes.find(t.o); it != rules_.super_classes.end()) {
                for (const Link& l : it->second) emit(out, {t.s, rules_.rdf_type, l.target}, l.axiom, {t});
            }
        }
        for (const ChainRule& c : rules_.chains) {
            if (t.p == c.first && !is_literal(t.o)) {
                g_.for_each_match(t.o, c.second, std::nullopt, [&](const IdTriple& link) {
                    emit(out, {t.s, c.result, link.o}, c.axiom, {t, link});
                });
            }
            if (t.p == c.second) {
                g_.for_each_match(std::nullopt, c.first, t.s, [&](const IdTriple& head) {
                    emit(out, {head.s, c.result, t.o}, c.axiom, {head, t});
                });
            }
        }
        for (const ListRule& r : rules_.list_rules) {
            if (t.p == r.list_property) expand_list(t, r, out);
        }
    }

    /// Members are the rdf:first values of every cell reachable from the list
    /// head through rdf:rest, which keeps the rule monotone; a list that is
    /// not a well-formed rdf:List is still expanded but also reported.
    void expand_list(const IdTriple& t, const ListRule& r, std::vector<Pending>& out) const {
        const auto first = g_.find_iri(vocab::rdf::first);
        const auto rest = g_.find_iri(vocab::rdf::rest);
        std::vector<TermId> cells{t.o};
        std::unordered_set<TermId> seen{t.o};
        for (std::size_t i = 0; i < cells.size(); ++i) {
            const TermId cell = cells[i];
            if (is_literal(cell)) continue;
            if (first) {
                for (const TermId item : g_.objects(cell, *first)) {
                    emit(out, {t.s, r.member_property, item}, r.axiom, {t, IdTriple{cell, *first, item}});
                }
            }
            if (rest) {
                for (const TermId next : g_.objects(cell, *rest)) {
                    if (seen.insert(next).second) cells.push_back(next);
                }
            }
        }
        try {
            (void)read_rdf_list_ids(g_, t.o);
        } catch (const RdfListError& e) {
            Finding f;
            f.rule_id = "S" + std::to_string(r.axiom);
            f.severity = Severity::Warning;
            f.focus = g_.term(t.s);
            f.evidence = {g_.resolve(t)};
            f.message = std::string("skos:memberList value is not a well-formed rdf:List: ") + e.what();
            mg_.list_issues.push_back(std::move(f));
        }
    }

    MaterializedGraph& mg_;
    Graph& g_;
    const RuleSet& rules_;
};

}  // namespace

MaterializedGraph MaterializedGraph::from_asserted(Graph g) {
    MaterializedGraph mg;
    mg.graph = std::move(g);
    return mg;
}

MaterializedGraph materialize_with(const Graph& g, std::span<const Axiom> axioms) {
    MaterializedGraph mg;
    mg.graph = g;
    const RuleSet rules = compile(mg.graph, axioms);
    Engine(mg, rules).run();
    sort_findings(mg.list_issues);
    return mg;
}

MaterializedGraph materialize(const Graph& g, Profile profile) {
    const auto axioms = axioms_for(profile);
    MaterializedGraph mg = materialize_with(g, axioms);
    mg.profile = profile;
    return mg;
}

std::vector<Term> broader_closure(const MaterializedGraph& mg, const Term& node) {
    const auto c = mg.graph.find(node);
    const auto bt = mg.graph.find_iri(vocab::skos::broaderTransitive);
    if (!c || !bt) return {};
    std::vector<Term> out;
    for (const TermId y : mg.graph.objects(*c, *bt)) out.push_back(mg.graph.term(y));
    std::sort(out.begin(), out.end(),
              [](const Term& a, const Term& b) { return a.to_ntriples() < b.to_ntriples(); });
    return out;
}

Graph dumb_down_xl(const Graph& g) {
    const std::vector<Axiom> chains{axiom(55), axiom(56), axiom(57)};
    return materialize_with(g, chains).graph;
}

}  // namespace skosforge
