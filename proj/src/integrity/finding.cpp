#include "skosforge/finding.hpp"

#include <algorithm>
#include <array>

namespace skosforge {

std::string_view to_string(Severity severity) {
    return severity == Severity::Error ? "error" : "warning";
}

bool is_integrity_rule(std::string_view rule_id) {
    static constexpr std::array<std::string_view, 9> ids{"S9", "S13", "S14", "S27", "S37", "S46", "S48", "S52", "S58"};
    return std::find(ids.begin(), ids.end(), rule_id) != ids.end();
}

bool rule_id_less(std::string_view a, std::string_view b) {
    auto split = [](std::string_view id) {
        std::size_t i = id.size();
        while (i > 0 && id[i - 1] >= '0' && id[i - 1] <= '9') --i;
        long number = -1;
        if (i < id.size()) {
            number = 0;
            for (char c : id.substr(i)) number = number * 10 + (c - '0');
        }
        return std::pair{id.substr(0, i), number};
    };
    const auto [pa, na] = split(a);
    const auto [pb, nb] = split(b);
    if (pa != pb) return pa < pb;
    if (na != nb) return na < nb;
    return a < b;
}

namespace {

std::vector<std::string> evidence_text(const Finding& f) {
    std::vector<std::string> out;
    out.reserve(f.evidence.size());
    for (const auto& t : f.evidence) out.push_back(t.to_ntriples());
    return out;
}

}  // namespace

bool finding_less(const Finding& a, const Finding& b) {
    if (a.severity != b.severity) return a.severity == Severity::Error;
    if (a.rule_id != b.rule_id) return rule_id_less(a.rule_id, b.rule_id);
    const auto fa = a.focus.to_ntriples();
    const auto fb = b.focus.to_ntriples();
    if (fa != fb) return fa < fb;
    if (a.message != b.message) return a.message < b.message;
    return evidence_text(a) < evidence_text(b);
}

void sort_findings(std::vector<Finding>& findings) {
    std::stable_sort(findings.begin(), findings.end(), finding_less);
}

}  // namespace skosforge
