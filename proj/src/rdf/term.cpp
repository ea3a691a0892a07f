#include "skosforge/term.hpp"

#include <functional>
#include <stdexcept>

namespace skosforge {

namespace {

void hash_combine(std::size_t& seed, std::size_t value) {
    seed ^= value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

bool is_ascii_alpha(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }
bool is_ascii_digit(char c) { return c >= '0' && c <= '9'; }

}  // namespace

std::string ascii_lower(std::string_view s) {
    std::string out(s);
    for (char& c : out) {
        if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    }
    return out;
}

bool language_tags_equal(std::string_view a, std::string_view b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        char x = a[i], y = b[i];
        if (x >= 'A' && x <= 'Z') x = static_cast<char>(x - 'A' + 'a');
        if (y >= 'A' && y <= 'Z') y = static_cast<char>(y - 'A' + 'a');
        if (x != y) return false;
    }
    return true;
}

bool operator==(const Literal& a, const Literal& b) {
    if (a.lexical != b.lexical || a.datatype != b.datatype) return false;
    if (a.language.has_value() != b.language.has_value()) return false;
    return !a.language || language_tags_equal(*a.language, *b.language);
}

std::string escape_literal(std::string_view lexical) {
    std::string out;
    out.reserve(lexical.size() + 2);
    for (char c : lexical) {
        switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\r': out += "\\r"; break;
        default: out += c;
        }
    }
    return out;
}

std::string Term::to_ntriples() const {
    switch (kind()) {
    case Kind::Iri: return "<" + as_iri().value + ">";
    case Kind::Blank: return "_:" + as_blank().label;
    case Kind::Literal: {
        const Literal& lit = as_literal();
        std::string out = "\"" + escape_literal(lit.lexical) + "\"";
        if (lit.language) {
            out += "@" + *lit.language;
        } else if (lit.datatype) {
            out += "^^<" + lit.datatype->value + ">";
        }
        return out;
    }
    }
    return {};
}

Triple::Triple(Term s, Iri p, Term o) : subject(std::move(s)), predicate(std::move(p)), object(std::move(o)) {
    if (subject.is_literal()) {
        throw std::invalid_argument("literal in subject position: " + subject.to_ntriples());
    }
}

std::string Triple::to_ntriples() const {
    return subject.to_ntriples() + " <" + predicate.value + "> " + object.to_ntriples() + " .";
}

bool is_valid_iri(std::string_view value) {
    if (value.empty()) return false;
    for (unsigned char c : value) {
        if (c <= 0x20 || c == 0x7f) return false;
        switch (c) {
        case '<': case '>': case '"': case '{': case '}':
        case '|': case '^': case '`': case '\\':
            return false;
        default: break;
        }
    }
    // scheme ":" ...
    if (!is_ascii_alpha(value[0])) return false;
    for (std::size_t i = 1; i < value.size(); ++i) {
        const char c = value[i];
        if (c == ':') return true;
        if (!(is_ascii_alpha(c) || is_ascii_digit(c) || c == '+' || c == '-' || c == '.')) return false;
    }
    return false;
}

bool is_valid_blank_label(std::string_view label) {
    if (label.empty()) return false;
    for (char c : label) {
        if (!(is_ascii_alpha(c) || is_ascii_digit(c) || c == '_')) return false;
    }
    return true;
}

bool is_valid_language_tag(std::string_view tag) {
    std::size_t i = 0;
    while (i < tag.size() && is_ascii_alpha(tag[i])) ++i;
    if (i == 0) return false;
    while (i < tag.size()) {
        if (tag[i] != '-') return false;
        const std::size_t start = ++i;
        while (i < tag.size() && (is_ascii_alpha(tag[i]) || is_ascii_digit(tag[i]))) ++i;
        if (i == start) return false;
    }
    return true;
}

}  // namespace skosforge

std::size_t std::hash<skosforge::Term>::operator()(const skosforge::Term& t) const noexcept {
    using skosforge::Term;
    std::size_t seed = static_cast<std::size_t>(t.kind());
    std::hash<std::string_view> h;
    switch (t.kind()) {
    case Term::Kind::Iri: skosforge::hash_combine(seed, h(t.as_iri().value)); break;
    case Term::Kind::Blank: skosforge::hash_combine(seed, h(t.as_blank().label)); break;
    case Term::Kind::Literal: {
        const auto& lit = t.as_literal();
        skosforge::hash_combine(seed, h(lit.lexical));
        if (lit.language) skosforge::hash_combine(seed, h(skosforge::ascii_lower(*lit.language)) + 1);
        if (lit.datatype) skosforge::hash_combine(seed, h(lit.datatype->value) + 2);
        break;
    }
    }
    return seed;
}

std::size_t std::hash<skosforge::Triple>::operator()(const skosforge::Triple& t) const noexcept {
    std::size_t seed = std::hash<skosforge::Term>{}(t.subject);
    skosforge::hash_combine(seed, std::hash<std::string_view>{}(t.predicate.value));
    skosforge::hash_combine(seed, std::hash<skosforge::Term>{}(t.object));
    return seed;
}
