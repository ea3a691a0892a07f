#include "skosforge/report.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <array>
#include <set>
#include <stdexcept>

#include "json.hpp"
#include "skosforge/ntriples.hpp"

namespace skosforge {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr std::string_view kRed = "\x1b[31m";
constexpr std::string_view kYellow = "\x1b[33m";
constexpr std::string_view kReset = "\x1b[0m";

std::string upper(std::string_view s) {
    std::string out(s);
    for (char& c : out) {
        if (c >= 'a' && c <= 'z') c = static_cast<char>(c - 'a' + 'A');
    }
    return out;
}

std::vector<std::string> ordered_tally_keys(const std::map<std::string, std::size_t>& tallies) {
    std::vector<std::string> keys;
    keys.reserve(tallies.size());
    for (const auto& [k, v] : tallies) keys.push_back(k);
    std::sort(keys.begin(), keys.end(), [](const std::string& a, const std::string& b) { return rule_id_less(a, b); });
    return keys;
}

std::string format_json(const Report& r) {
    ordered_json doc;
    doc["version"] = r.version;
    doc["inputs"] = ordered_json::array();
    for (const auto& in : r.inputs) {
        doc["inputs"].push_back({{"path", in.path}, {"sha256", in.sha256}, {"triples", in.triples}});
    }
    doc["asserted"] = r.asserted;
    doc["derived"] = r.derived;
    doc["findings"] = ordered_json::array();
    for (const Finding& f : r.findings) {
        ordered_json item;
        item["rule"] = f.rule_id;
        item["severity"] = std::string(to_string(f.severity));
        item["focus"] = f.focus.to_ntriples();
        item["message"] = f.message;
        item["evidence"] = ordered_json::array();
        for (const Triple& t : f.evidence) item["evidence"].push_back(t.to_ntriples());
        doc["findings"].push_back(std::move(item));
    }
    doc["tallies"] = ordered_json::object();
    for (const auto& key : ordered_tally_keys(r.tallies)) doc["tallies"][key] = r.tallies.at(key);
    doc["elapsed_ms"] = r.elapsed_ms;
    return doc.dump(2) + "\n";
}

std::string format_text(const Report& r, bool color) {
    std::string out;
    std::size_t errors = 0;
    for (const Finding& f : r.findings) {
        const std::string severity = upper(to_string(f.severity));
        if (f.severity == Severity::Error) ++errors;
        if (color) {
            out += f.severity == Severity::Error ? kRed : kYellow;
            out += severity;
            out += kReset;
        } else {
            out += severity;
        }
        out += ' ';
        out += f.rule_id;
        out += ' ';
        out += f.focus.to_ntriples();
        out += ": ";
        out += f.message;
        out += '\n';
    }
    out += std::to_string(errors) + " error(s), " + std::to_string(r.findings.size() - errors) + " warning(s); " +
           std::to_string(r.asserted) + " asserted, " + std::to_string(r.derived) + " derived triples\n";
    return out;
}

Severity severity_from_string(std::string_view s) {
    if (s == "error") return Severity::Error;
    if (s == "warning") return Severity::Warning;
    throw std::invalid_argument("unknown severity: " + std::string(s));
}

}  // namespace

std::vector<std::string> tallied_rule_ids() {
    std::vector<std::string> ids{"S9", "S13", "S14", "S27", "S36", "S37", "S46", "S48", "S52", "S58"};
    for (const auto& rule : default_guideline_rules()) ids.push_back(rule.id);
    std::sort(ids.begin(), ids.end(), [](const std::string& a, const std::string& b) { return rule_id_less(a, b); });
    return ids;
}

Report make_report(std::vector<InputDigest> inputs, std::size_t asserted, std::size_t derived,
                   std::vector<Finding> findings) {
    Report r;
    r.inputs = std::move(inputs);
    r.asserted = asserted;
    r.derived = derived;
    sort_findings(findings);
    r.findings = std::move(findings);
    for (const auto& id : tallied_rule_ids()) r.tallies[id] = 0;
    for (const Finding& f : r.findings) ++r.tallies[f.rule_id];
    return r;
}

std::string format_report(const Report& report, OutputFormat format, bool color) {
    return format == OutputFormat::Json ? format_json(report) : format_text(report, color);
}

Report report_from_json(std::string_view json) {
    try {
        const auto doc = nlohmann::json::parse(json);
        Report r;
        r.version = doc.at("version").get<std::string>();
        for (const auto& in : doc.at("inputs")) {
            r.inputs.push_back(InputDigest{in.at("path").get<std::string>(), in.at("sha256").get<std::string>(),
                                           in.at("triples").get<std::size_t>()});
        }
        r.asserted = doc.value("asserted", std::size_t{0});
        r.derived = doc.at("derived").get<std::size_t>();
        for (const auto& item : doc.at("findings")) {
            Finding f;
            f.rule_id = item.at("rule").get<std::string>();
            f.severity = severity_from_string(item.at("severity").get<std::string>());
            f.focus = parse_term(item.at("focus").get<std::string>());
            f.message = item.at("message").get<std::string>();
            for (const auto& e : item.at("evidence")) f.evidence.push_back(parse_triple(e.get<std::string>()));
            r.findings.push_back(std::move(f));
        }
        for (const auto& [k, v] : doc.at("tallies").items()) r.tallies[k] = v.get<std::size_t>();
        r.elapsed_ms = doc.at("elapsed_ms").get<std::int64_t>();
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed report: ") + e.what());
    } catch (const ParseError& e) {
        throw std::invalid_argument(std::string("malformed report term: ") + e.what());
    }
}

SchemeStats compute_stats(const MaterializedGraph& mg) {
    const Graph& g = mg.graph;
    SchemeStats s;
    const auto type = g.find_iri(vocab::rdf::type);
    auto count_typed = [&](std::string_view cls) -> std::size_t {
        const auto c = g.find_iri(cls);
        if (!type || !c) return 0;
        return g.subjects(*type, *c).size();
    };
    s.concepts = count_typed(vocab::skos::Concept);
    s.schemes = count_typed(vocab::skos::ConceptScheme);
    s.collections = count_typed(vocab::skos::Collection);

    for (auto label : {vocab::skos::prefLabel, vocab::skos::altLabel, vocab::skos::hiddenLabel}) {
        const auto p = g.find_iri(label);
        if (!p) continue;
        g.for_each_match(std::nullopt, *p, std::nullopt, [&](const IdTriple& t) {
            const Term& o = g.term(t.o);
            if (!o.is_literal()) return;
            const auto& lang = o.as_literal().language;
            ++s.labels_per_language[lang ? ascii_lower(*lang) : std::string()];
        });
    }

    for (auto property : vocab::descendants_of(vocab::skos::semanticRelation)) {
        const auto p = g.find_iri(property);
        if (!p) continue;
        g.for_each_match(std::nullopt, *p, std::nullopt, [&](const IdTriple& t) {
            if (!mg.is_derived(t)) ++s.semantic_relation_triples;
        });
    }
    return s;
}

std::string format_stats(const SchemeStats& stats, OutputFormat format) {
    if (format == OutputFormat::Json) {
        ordered_json doc;
        doc["concepts"] = stats.concepts;
        doc["schemes"] = stats.schemes;
        doc["collections"] = stats.collections;
        doc["labels_per_language"] = ordered_json::object();
        for (const auto& [lang, n] : stats.labels_per_language) doc["labels_per_language"][lang] = n;
        doc["semantic_relation_triples"] = stats.semantic_relation_triples;
        return doc.dump(2) + "\n";
    }
    std::string out;
    out += "concepts: " + std::to_string(stats.concepts) + "\n";
    out += "schemes: " + std::to_string(stats.schemes) + "\n";
    out += "collections: " + std::to_string(stats.collections) + "\n";
    out += "labels per language:\n";
    for (const auto& [lang, n] : stats.labels_per_language) {
        out += "  " + (lang.empty() ? std::string("(none)") : lang) + ": " + std::to_string(n) + "\n";
    }
    out += "semantic relation triples: " + std::to_string(stats.semantic_relation_triples) + "\n";
    return out;
}

std::string trace_to_json(const MaterializedGraph& mg) {
    std::vector<std::pair<std::string, const Derivation*>> rows;
    rows.reserve(mg.trace.size());
    for (const auto& [t, d] : mg.trace) rows.emplace_back(mg.graph.resolve(t).to_ntriples(), &d);
    std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    ordered_json doc = ordered_json::array();
    for (const auto& [derived, d] : rows) {
        ordered_json item;
        item["derived"] = derived;
        item["axiom"] = "S" + std::to_string(d->axiom);
        item["premises"] = ordered_json::array();
        for (const IdTriple& p : d->premises) item["premises"].push_back(mg.graph.resolve(p).to_ntriples());
        doc.push_back(std::move(item));
    }
    return doc.dump(2) + "\n";
}

std::string sha256_hex(std::string_view bytes) {
    std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
    unsigned int length = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), digest.data(), &length, EVP_sha256(), nullptr) != 1) {
        throw std::runtime_error("SHA-256 digest failed");
    }
    static constexpr char kHex[] = "0123456789abcdef";
    std::string out;
    out.reserve(length * 2);
    for (unsigned int i = 0; i < length; ++i) {
        out += kHex[digest[i] >> 4];
        out += kHex[digest[i] & 0xf];
    }
    return out;
}

}  // namespace skosforge
