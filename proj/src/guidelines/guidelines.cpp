#include "skosforge/guidelines.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace skosforge {

namespace {

namespace sk = vocab::skos;

std::vector<std::string_view> properties_of_kind(AxiomKind kind) {
    std::vector<std::string_view> out;
    for (const Axiom& a : axiom_table()) {
        if (a.kind != kind) continue;
        for (auto p : a.iris_with(Role::Property)) out.push_back(p);
    }
    return out;
}

class GuidelineChecker {
public:
    explicit GuidelineChecker(const MaterializedGraph& mg) : mg_(mg), g_(mg.graph) {}

    void run(std::string_view id) {
        if (id == guideline::kHierCycle) hierarchy_cycles();
        else if (id == guideline::kReflexive) reflexive();
        else if (id == guideline::kSameSchemeMatch) same_scheme_match();
        else if (id == guideline::kMissingPrefLabel) missing_pref_label();
        else if (id == guideline::kTopWithBroader) top_with_broader();
        else if (id == guideline::kOrphan) orphans();
        else if (id == guideline::kPlainLiteral) plain_literal();
        else if (id == guideline::kNotationUntyped) notation_untyped();
        else if (id == guideline::kMemberListMulti) member_list_multi();
        else if (id == guideline::kUnionRange) union_range();
    }

    std::vector<Finding> take() { return std::move(findings_); }

private:
    std::optional<TermId> iri(std::string_view v) const { return g_.find_iri(v); }

    std::vector<TermId> ids(const std::vector<std::string_view>& iris) const {
        std::vector<TermId> out;
        for (auto v : iris) {
            if (auto id = iri(v)) out.push_back(*id);
        }
        return out;
    }

    void add(std::string_view rule, TermId focus, std::vector<IdTriple> evidence, std::string message) {
        std::vector<Triple> resolved;
        std::sort(evidence.begin(), evidence.end(), [](const IdTriple& a, const IdTriple& b) {
            return std::tie(a.s, a.p, a.o) < std::tie(b.s, b.p, b.o);
        });
        evidence.erase(std::unique(evidence.begin(), evidence.end()), evidence.end());
        for (const auto& t : evidence) resolved.push_back(g_.resolve(t));
        std::sort(resolved.begin(), resolved.end(),
                  [](const Triple& a, const Triple& b) { return a.to_ntriples() < b.to_ntriples(); });
        findings_.push_back(
            Finding{std::string(rule), Severity::Warning, g_.term(focus), std::move(resolved), std::move(message)});
    }

    std::vector<IdTriple> typed(std::string_view cls) const {
        const auto type = iri(vocab::rdf::type);
        const auto c = iri(cls);
        if (!type || !c) return {};
        return g_.match_ids(std::nullopt, *type, *c);
    }

    /// Shortest chain of skos:broader edges leading from `start` back to it.
    std::vector<IdTriple> broader_cycle_through(TermId start, TermId broader) const {
        std::unordered_map<TermId, IdTriple> parent_edge;
        std::deque<TermId> queue{start};
        std::unordered_set<TermId> visited{start};
        while (!queue.empty()) {
            const TermId node = queue.front();
            queue.pop_front();
            for (const TermId next : g_.objects(node, broader)) {
                const IdTriple edge{node, broader, next};
                if (next == start) {
                    std::vector<IdTriple> path{edge};
                    for (TermId at = node; at != start; at = parent_edge.at(at).s) path.push_back(parent_edge.at(at));
                    return path;
                }
                if (visited.insert(next).second) {
                    parent_edge.emplace(next, edge);
                    queue.push_back(next);
                }
            }
        }
        return {};
    }

    void hierarchy_cycles() {
        const auto bt = iri(sk::broaderTransitive);
        if (!bt) return;
        const auto broader = iri(sk::broader);
        g_.for_each_match(std::nullopt, *bt, std::nullopt, [&](const IdTriple& t) {
            if (t.s != t.o) return;
            std::vector<IdTriple> evidence{t};
            if (broader) {
                for (const auto& e : broader_cycle_through(t.s, *broader)) evidence.push_back(e);
            }
            add(guideline::kHierCycle, t.s, std::move(evidence),
                "concept lies on a cycle of the broader hierarchy (skos:broaderTransitive reaches itself)");
        });
    }

    void reflexive() {
        for (auto property : {sk::broader, sk::related}) {
            const auto p = iri(property);
            if (!p) continue;
            g_.for_each_match(std::nullopt, *p, std::nullopt, [&](const IdTriple& t) {
                if (t.s != t.o) return;
                add(guideline::kReflexive, t.s, {t}, "concept is linked to itself by " + vocab::compact(property));
            });
        }
    }

    void same_scheme_match() {
        const auto in_scheme = iri(sk::inScheme);
        if (!in_scheme) return;
        const auto mapping = ids(vocab::descendants_of(sk::mappingRelation));
        // unordered concept pair -> mapping triples between them
        std::map<std::pair<TermId, TermId>, std::vector<IdTriple>> pairs;
        for (const TermId p : mapping) {
            g_.for_each_match(std::nullopt, p, std::nullopt, [&](const IdTriple& t) {
                if (t.s == t.o || g_.term(t.o).is_literal()) return;
                pairs[{std::min(t.s, t.o), std::max(t.s, t.o)}].push_back(t);
            });
        }
        for (auto& [pair, triples] : pairs) {
            const auto [x, y] = pair;
            auto schemes_y = g_.objects(y, *in_scheme);
            std::vector<IdTriple> evidence;
            for (const TermId scheme : g_.objects(x, *in_scheme)) {
                if (std::find(schemes_y.begin(), schemes_y.end(), scheme) == schemes_y.end()) continue;
                evidence.push_back({x, *in_scheme, scheme});
                evidence.push_back({y, *in_scheme, scheme});
            }
            if (evidence.empty()) continue;
            std::vector<IdTriple> asserted;
            for (const auto& t : triples) {
                if (!mg_.is_derived(t)) asserted.push_back(t);
            }
            const auto& shown = asserted.empty() ? triples : asserted;
            evidence.insert(evidence.end(), shown.begin(), shown.end());
            const TermId focus = g_.term(x).to_ntriples() <= g_.term(y).to_ntriples() ? x : y;
            const TermId other = focus == x ? y : x;
            add(guideline::kSameSchemeMatch, focus, std::move(evidence),
                "mapping relation to " + g_.term(other).to_ntriples() +
                    " within one concept scheme; mapping properties are meant for links across schemes");
        }
    }

    void missing_pref_label() {
        const auto pref = iri(sk::prefLabel);
        for (const IdTriple& t : typed(sk::Concept)) {
            if (pref && !g_.objects(t.s, *pref).empty()) continue;
            add(guideline::kMissingPrefLabel, t.s, {t}, "concept has no skos:prefLabel in any language");
        }
    }

    void top_with_broader() {
        const auto top_of = iri(sk::topConceptOf);
        const auto has_top = iri(sk::hasTopConcept);
        const auto broader = iri(sk::broader);
        const auto in_scheme = iri(sk::inScheme);
        if (!broader || !in_scheme) return;
        // (concept, scheme) -> declaring triples
        std::map<std::pair<TermId, TermId>, std::vector<IdTriple>> tops;
        if (top_of) {
            g_.for_each_match(std::nullopt, *top_of, std::nullopt,
                              [&](const IdTriple& t) { tops[{t.s, t.o}].push_back(t); });
        }
        if (has_top) {
            g_.for_each_match(std::nullopt, *has_top, std::nullopt, [&](const IdTriple& t) {
                if (!g_.term(t.o).is_literal()) tops[{t.o, t.s}].push_back(t);
            });
        }
        for (const auto& [key, declared] : tops) {
            const auto [top, scheme] = key;
            for (const TermId parent : g_.objects(top, *broader)) {
                const IdTriple membership{parent, *in_scheme, scheme};
                if (!g_.contains(membership)) continue;
                std::vector<IdTriple> evidence{declared.front(), {top, *broader, parent}, membership};
                add(guideline::kTopWithBroader, top, std::move(evidence),
                    "top concept of " + g_.term(scheme).to_ntriples() + " has broader concept " +
                        g_.term(parent).to_ntriples() + " in the same scheme");
            }
        }
    }

    void orphans() {
        const auto semantic = ids(vocab::descendants_of(sk::semanticRelation));
        const std::unordered_set<TermId> semantic_set(semantic.begin(), semantic.end());
        const auto top_of = iri(sk::topConceptOf);
        const auto has_top = iri(sk::hasTopConcept);
        for (const IdTriple& t : typed(sk::Concept)) {
            const TermId c = t.s;
            bool linked = false;
            g_.for_each_match(c, std::nullopt, std::nullopt, [&](const IdTriple& u) {
                if ((semantic_set.contains(u.p) && u.o != c) || (top_of && u.p == *top_of)) linked = true;
            });
            if (!linked) {
                g_.for_each_match(std::nullopt, std::nullopt, c, [&](const IdTriple& u) {
                    if ((semantic_set.contains(u.p) && u.s != c) || (has_top && u.p == *has_top)) linked = true;
                });
            }
            if (!linked) {
                add(guideline::kOrphan, c, {t}, "concept has no semantic relation to another concept and is not a top concept");
            }
        }
    }

    void plain_literal() {
        for (auto property : properties_of_kind(AxiomKind::PlainLiteralRange)) {
            const auto p = iri(property);
            if (!p) continue;
            g_.for_each_match(std::nullopt, *p, std::nullopt, [&](const IdTriple& t) {
                const Term& value = g_.term(t.o);
                if (value.is_literal() && value.as_literal().is_plain()) return;
                const std::string what = value.is_literal() ? "a typed literal" : "not a literal";
                add(guideline::kPlainLiteral, t.s, {t},
                    vocab::compact(property) + " value " + value.to_ntriples() + " is " + what +
                        "; a plain literal is expected");
            });
        }
    }

    void notation_untyped() {
        const auto p = iri(sk::notation);
        if (!p) return;
        g_.for_each_match(std::nullopt, *p, std::nullopt, [&](const IdTriple& t) {
            const Term& value = g_.term(t.o);
            if (!value.is_literal() || !value.as_literal().is_plain()) return;
            add(guideline::kNotationUntyped, t.s, {t},
                "skos:notation " + value.to_ntriples() + " is a plain literal; notations are typed literals");
        });
    }

    void member_list_multi() {
        for (auto property : properties_of_kind(AxiomKind::Functional)) {
            const auto p = iri(property);
            if (!p) continue;
            std::map<TermId, std::vector<IdTriple>> by_subject;
            g_.for_each_match(std::nullopt, *p, std::nullopt,
                              [&](const IdTriple& t) { by_subject[t.s].push_back(t); });
            for (auto& [subject, triples] : by_subject) {
                if (triples.size() < 2) continue;
                add(guideline::kMemberListMulti, subject, triples,
                    std::to_string(triples.size()) + " values for functional property " + vocab::compact(property));
            }
        }
    }

    void union_range() {
        const auto type = iri(vocab::rdf::type);
        std::vector<TermId> allowed;
        for (const Axiom& a : axiom_table()) {
            if (a.kind != AxiomKind::Range) continue;
            const auto members = a.iris_with(Role::UnionMember);
            if (members.empty()) continue;
            std::vector<TermId> classes;
            for (auto cls : members) {
                for (auto sub : vocab::descendants_of(cls)) {
                    if (auto id = iri(sub)) classes.push_back(*id);
                }
            }
            for (const TermId p : ids(a.iris_with(Role::Property))) {
                g_.for_each_match(std::nullopt, p, std::nullopt, [&](const IdTriple& t) {
                    bool ok = false;
                    if (type && !g_.term(t.o).is_literal()) {
                        for (const TermId cls : classes) ok = ok || g_.contains(IdTriple{t.o, *type, cls});
                    }
                    if (ok) return;
                    add(guideline::kUnionRange, t.s, {t},
                        "member " + g_.term(t.o).to_ntriples() + " is neither a skos:Concept nor a skos:Collection");
                });
            }
        }
    }

    const MaterializedGraph& mg_;
    const Graph& g_;
    std::vector<Finding> findings_;
};

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && (s[b] == ' ' || s[b] == '\t' || s[b] == '\r')) ++b;
    while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r')) --e;
    return std::string(s.substr(b, e - b));
}

/// Drops a `#` comment that is not inside a string.
std::string strip_comment(std::string_view line) {
    bool in_string = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        if (line[i] == '"') in_string = !in_string;
        if (line[i] == '#' && !in_string) return std::string(line.substr(0, i));
    }
    return std::string(line);
}

std::vector<std::string> parse_string_array(const std::string& text, std::size_t line_no) {
    auto fail = [&](const std::string& why) {
        throw std::invalid_argument("config line " + std::to_string(line_no) + ": " + why);
    };
    std::string body = trim(text);
    if (body.size() < 2 || body.front() != '[' || body.back() != ']') fail("expected an array of strings");
    body = body.substr(1, body.size() - 2);
    std::vector<std::string> out;
    std::size_t i = 0;
    while (true) {
        while (i < body.size() && (body[i] == ' ' || body[i] == '\t' || body[i] == '\n' || body[i] == '\r')) ++i;
        if (i >= body.size()) break;
        if (body[i] != '"') fail("expected a quoted rule id");
        const std::size_t close = body.find('"', i + 1);
        if (close == std::string::npos) fail("unterminated string");
        out.push_back(body.substr(i + 1, close - i - 1));
        i = close + 1;
        while (i < body.size() && (body[i] == ' ' || body[i] == '\t' || body[i] == '\n' || body[i] == '\r')) ++i;
        if (i < body.size()) {
            if (body[i] != ',') fail("expected ',' between array items");
            ++i;
        }
    }
    return out;
}

}  // namespace

std::vector<GuidelineRule> default_guideline_rules() {
    return {
        {std::string(guideline::kHierCycle), "concept on a cycle of the broader hierarchy", true},
        {std::string(guideline::kReflexive), "concept broader than or related to itself", true},
        {std::string(guideline::kSameSchemeMatch), "mapping relation between concepts of one scheme", true},
        {std::string(guideline::kMissingPrefLabel), "concept without any skos:prefLabel", true},
        {std::string(guideline::kTopWithBroader), "top concept with a broader concept in the same scheme", true},
        {std::string(guideline::kOrphan), "concept without semantic relations or top-concept status", true},
        {std::string(guideline::kPlainLiteral), "label or literal form that is not a plain literal", true},
        {std::string(guideline::kNotationUntyped), "skos:notation given as a plain literal", true},
        {std::string(guideline::kMemberListMulti), "resource with several skos:memberList values", true},
        {std::string(guideline::kUnionRange), "skos:member value that is neither Concept nor Collection", true},
    };
}

bool set_rule_enabled(std::vector<GuidelineRule>& rules, std::string_view id, bool enabled) {
    if (id == "all") {
        for (auto& r : rules) r.enabled = enabled;
        return true;
    }
    for (auto& r : rules) {
        if (r.id == id) {
            r.enabled = enabled;
            return true;
        }
    }
    return false;
}

std::vector<Finding> check_guidelines(const MaterializedGraph& mg, const std::vector<GuidelineRule>& rules) {
    GuidelineChecker checker(mg);
    for (const auto& rule : rules) {
        if (rule.enabled) checker.run(rule.id);
    }
    auto findings = checker.take();
    sort_findings(findings);
    return findings;
}

void apply_guideline_config(std::vector<GuidelineRule>& rules, std::string_view toml_text) {
    std::string section;
    std::vector<std::string> enable, disable;
    std::size_t line_no = 0;
    std::size_t start = 0;
    std::string pending_key, pending_value;
    std::size_t pending_line = 0;
    while (start <= toml_text.size()) {
        std::size_t end = toml_text.find('\n', start);
        if (end == std::string_view::npos) end = toml_text.size();
        const std::string line = trim(strip_comment(toml_text.substr(start, end - start)));
        start = end + 1;
        ++line_no;
        if (!pending_key.empty()) {
            pending_value += "\n" + line;
        } else if (line.empty()) {
            continue;
        } else if (line.front() == '[') {
            if (line.back() != ']') {
                throw std::invalid_argument("config line " + std::to_string(line_no) + ": malformed section header");
            }
            section = trim(line.substr(1, line.size() - 2));
            continue;
        } else {
            const auto eq = line.find('=');
            if (eq == std::string::npos) {
                throw std::invalid_argument("config line " + std::to_string(line_no) + ": expected key = value");
            }
            pending_key = trim(line.substr(0, eq));
            pending_value = trim(line.substr(eq + 1));
            pending_line = line_no;
        }
        if (pending_value.find(']') == std::string::npos && !pending_value.empty() && pending_value.front() == '[') {
            if (start > toml_text.size()) {
                throw std::invalid_argument("config line " + std::to_string(pending_line) + ": unterminated array");
            }
            continue;
        }
        if (section == "guidelines") {
            auto values = parse_string_array(pending_value, pending_line);
            if (pending_key == "enable") {
                enable.insert(enable.end(), values.begin(), values.end());
            } else if (pending_key == "disable") {
                disable.insert(disable.end(), values.begin(), values.end());
            } else {
                throw std::invalid_argument("config line " + std::to_string(pending_line) + ": unknown key '" +
                                            pending_key + "' in [guidelines]");
            }
        }
        pending_key.clear();
        pending_value.clear();
    }
    for (const auto& id : disable) {
        if (!set_rule_enabled(rules, id, false)) throw std::invalid_argument("unknown guideline rule '" + id + "'");
    }
    for (const auto& id : enable) {
        if (!set_rule_enabled(rules, id, true)) throw std::invalid_argument("unknown guideline rule '" + id + "'");
    }
}

}  // namespace skosforge
