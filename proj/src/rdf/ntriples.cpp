#include "skosforge/ntriples.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <optional>

namespace skosforge {

namespace {

struct LineError {
    std::size_t column;  // 0-based
    std::string message;
};

/// Returns the 0-based offset of the first invalid UTF-8 sequence, if any.
std::optional<std::size_t> find_invalid_utf8(std::string_view s) {
    std::size_t i = 0;
    while (i < s.size()) {
        const auto c = static_cast<unsigned char>(s[i]);
        std::size_t len = 0;
        std::uint32_t cp = 0;
        if (c < 0x80) {
            ++i;
            continue;
        } else if ((c & 0xE0) == 0xC0) {
            len = 2;
            cp = c & 0x1F;
        } else if ((c & 0xF0) == 0xE0) {
            len = 3;
            cp = c & 0x0F;
        } else if ((c & 0xF8) == 0xF0) {
            len = 4;
            cp = c & 0x07;
        } else {
            return i;
        }
        if (i + len > s.size()) return i;
        for (std::size_t k = 1; k < len; ++k) {
            const auto cc = static_cast<unsigned char>(s[i + k]);
            if ((cc & 0xC0) != 0x80) return i;
            cp = (cp << 6) | (cc & 0x3F);
        }
        const bool overlong = (len == 2 && cp < 0x80) || (len == 3 && cp < 0x800) || (len == 4 && cp < 0x10000);
        if (overlong || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) return i;
        i += len;
    }
    return std::nullopt;
}

void append_utf8(std::string& out, std::uint32_t cp) {
    if (cp < 0x80) {
        out += static_cast<char>(cp);
    } else if (cp < 0x800) {
        out += static_cast<char>(0xC0 | (cp >> 6));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    } else if (cp < 0x10000) {
        out += static_cast<char>(0xE0 | (cp >> 12));
        out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    } else {
        out += static_cast<char>(0xF0 | (cp >> 18));
        out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
        out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    }
}

bool is_iri_forbidden(unsigned char c) {
    if (c <= 0x20 || c == 0x7f) return true;
    switch (c) {
    case '<': case '>': case '"': case '{': case '}':
    case '|': case '^': case '`': case '\\':
        return true;
    default:
        return false;
    }
}

class LineParser {
public:
    explicit LineParser(std::string_view line) : line_(line) {}

    Triple parse_triple() {
        skip_ws();
        Term subject = parse_subject();
        skip_ws();
        Iri predicate = parse_predicate();
        skip_ws();
        Term object = parse_object();
        skip_ws();
        if (at_end() || peek() != '.') fail("missing terminal '.'");
        ++pos_;
        skip_ws();
        if (!at_end() && peek() != '#') fail("unexpected content after '.'");
        return Triple(std::move(subject), std::move(predicate), std::move(object));
    }

    Term parse_single_term() {
        skip_ws();
        Term t = parse_object();
        skip_ws();
        if (!at_end()) fail("unexpected content after term");
        return t;
    }

private:
    bool at_end() const { return pos_ >= line_.size(); }
    char peek() const { return line_[pos_]; }
    void skip_ws() {
        while (!at_end() && (peek() == ' ' || peek() == '\t')) ++pos_;
    }
    [[noreturn]] void fail(std::string message) const { throw LineError{pos_, std::move(message)}; }
    [[noreturn]] void fail_at(std::size_t col, std::string message) const { throw LineError{col, std::move(message)}; }

    Term parse_subject() {
        if (at_end()) fail("expected subject");
        if (peek() == '<') return Term(parse_iri());
        if (peek() == '_') return Term(parse_blank());
        if (peek() == '"') fail("literal in subject position");
        fail("expected IRI or blank node as subject");
    }

    Iri parse_predicate() {
        if (at_end() || peek() != '<') fail("expected IRI as predicate");
        return parse_iri();
    }

    Term parse_object() {
        if (at_end()) fail("expected object");
        if (peek() == '<') return Term(parse_iri());
        if (peek() == '_') return Term(parse_blank());
        if (peek() == '"') return Term(parse_literal());
        fail("expected IRI, blank node or literal as object");
    }

    std::uint32_t parse_hex(std::size_t digits) {
        const std::size_t start = pos_;
        if (pos_ + digits > line_.size()) fail_at(start, "bad escape: truncated \\u sequence");
        std::uint32_t cp = 0;
        for (std::size_t k = 0; k < digits; ++k) {
            const char c = line_[pos_ + k];
            std::uint32_t v = 0;
            if (c >= '0' && c <= '9') v = static_cast<std::uint32_t>(c - '0');
            else if (c >= 'a' && c <= 'f') v = static_cast<std::uint32_t>(c - 'a' + 10);
            else if (c >= 'A' && c <= 'F') v = static_cast<std::uint32_t>(c - 'A' + 10);
            else fail_at(pos_ + k, "bad escape: non-hex digit in \\u sequence");
            cp = (cp << 4) | v;
        }
        pos_ += digits;
        if (cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) fail_at(start, "bad escape: invalid code point");
        return cp;
    }

    /// Handles the character after a backslash for \u and \U; returns false for other escapes.
    bool parse_uchar(std::string& out) {
        const char c = peek();
        if (c == 'u' || c == 'U') {
            ++pos_;
            append_utf8(out, parse_hex(c == 'u' ? 4 : 8));
            return true;
        }
        return false;
    }

    Iri parse_iri() {
        const std::size_t start = pos_;
        ++pos_;  // '<'
        std::string value;
        while (true) {
            if (at_end()) fail_at(start, "malformed IRI: missing '>'");
            const char c = peek();
            if (c == '>') {
                ++pos_;
                break;
            }
            if (c == '\\') {
                ++pos_;
                if (at_end() || !parse_uchar(value)) fail("bad escape in IRI");
                continue;
            }
            if (is_iri_forbidden(static_cast<unsigned char>(c))) fail("malformed IRI: illegal character");
            value += c;
            ++pos_;
        }
        if (!is_valid_iri(value)) fail_at(start, "malformed IRI: <" + value + "> is not an absolute IRI");
        return Iri{std::move(value)};
    }

    BlankNode parse_blank() {
        const std::size_t start = pos_;
        if (pos_ + 1 >= line_.size() || line_[pos_ + 1] != ':') fail("malformed blank node: expected '_:'");
        pos_ += 2;
        const std::size_t label_start = pos_;
        while (!at_end() && peek() != ' ' && peek() != '\t' && peek() != '.' && peek() != '<' && peek() != '"') ++pos_;
        std::string label(line_.substr(label_start, pos_ - label_start));
        // a trailing '.' directly after the label is the terminator
        if (!is_valid_blank_label(label)) fail_at(start, "malformed blank node label '" + label + "'");
        return BlankNode{std::move(label)};
    }

    Literal parse_literal() {
        const std::size_t start = pos_;
        ++pos_;  // '"'
        std::string lexical;
        while (true) {
            if (at_end()) fail_at(start, "unterminated literal");
            const char c = peek();
            if (c == '"') {
                ++pos_;
                break;
            }
            if (c == '\r') fail("raw carriage return in literal");
            if (c == '\\') {
                const std::size_t esc = pos_;
                ++pos_;
                if (at_end()) fail_at(start, "unterminated literal");
                if (parse_uchar(lexical)) continue;
                switch (peek()) {
                case 't': lexical += '\t'; break;
                case 'b': lexical += '\b'; break;
                case 'n': lexical += '\n'; break;
                case 'r': lexical += '\r'; break;
                case 'f': lexical += '\f'; break;
                case '"': lexical += '"'; break;
                case '\'': lexical += '\''; break;
                case '\\': lexical += '\\'; break;
                default: fail_at(esc, std::string("bad escape '\\") + peek() + "'");
                }
                ++pos_;
                continue;
            }
            lexical += c;
            ++pos_;
        }
        Literal lit{std::move(lexical), {}, {}};
        if (!at_end() && peek() == '@') {
            const std::size_t tag_start = ++pos_;
            while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '-')) ++pos_;
            std::string tag(line_.substr(tag_start, pos_ - tag_start));
            if (!is_valid_language_tag(tag)) fail_at(tag_start, "malformed language tag '" + tag + "'");
            lit.language = std::move(tag);
        } else if (!at_end() && peek() == '^') {
            if (pos_ + 1 >= line_.size() || line_[pos_ + 1] != '^') fail("malformed datatype: expected '^^'");
            pos_ += 2;
            if (at_end() || peek() != '<') fail("malformed datatype: expected IRI");
            lit.datatype = parse_iri();
        }
        return lit;
    }

    std::string_view line_;
    std::size_t pos_ = 0;
};

bool is_blank_or_comment(std::string_view line) {
    for (char c : line) {
        if (c == ' ' || c == '\t') continue;
        return c == '#';
    }
    return true;
}

std::vector<Triple> parse_lines(std::string_view text) {
    std::vector<Triple> out;
    std::vector<ParseIssue> issues;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        start = end + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (auto bad = find_invalid_utf8(line)) {
            issues.push_back({line_no, *bad + 1, "invalid UTF-8"});
            continue;
        }
        if (is_blank_or_comment(line)) continue;
        try {
            out.push_back(LineParser(line).parse_triple());
        } catch (const LineError& e) {
            issues.push_back({line_no, e.column + 1, e.message});
        }
    }
    if (!issues.empty()) throw ParseError(std::move(issues));
    return out;
}

std::string describe(const std::vector<ParseIssue>& issues) {
    std::string msg = "N-Triples parse error";
    if (!issues.empty()) {
        msg += " at line " + std::to_string(issues.front().line) + ", column " +
               std::to_string(issues.front().column) + ": " + issues.front().message;
        if (issues.size() > 1) msg += " (+" + std::to_string(issues.size() - 1) + " more)";
    }
    return msg;
}

}  // namespace

ParseError::ParseError(std::vector<ParseIssue> issues)
    : std::runtime_error(describe(issues)), issues_(std::move(issues)) {}

Graph parse_ntriples(std::string_view text) {
    Graph g;
    parse_ntriples_into(text, g);
    return g;
}

void parse_ntriples_into(std::string_view text, Graph& g) {
    for (const auto& t : parse_lines(text)) g.insert(t);
}

Term parse_term(std::string_view text) {
    try {
        return LineParser(text).parse_single_term();
    } catch (const LineError& e) {
        throw ParseError({ParseIssue{1, e.column + 1, e.message}});
    }
}

Triple parse_triple(std::string_view line) {
    try {
        return LineParser(line).parse_triple();
    } catch (const LineError& e) {
        throw ParseError({ParseIssue{1, e.column + 1, e.message}});
    }
}

std::string serialize_ntriples(const Graph& g) {
    struct Row {
        std::string s, p, o;
    };
    std::vector<std::string> term_text(g.term_count());
    std::vector<bool> have(g.term_count(), false);
    auto text = [&](TermId id) -> const std::string& {
        if (!have[id]) {
            term_text[id] = g.term(id).to_ntriples();
            have[id] = true;
        }
        return term_text[id];
    };
    std::vector<Row> rows;
    rows.reserve(g.size());
    for (const auto& t : g.id_triples()) rows.push_back({text(t.s), text(t.p), text(t.o)});
    std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
        if (a.s != b.s) return a.s < b.s;
        if (a.p != b.p) return a.p < b.p;
        return a.o < b.o;
    });
    std::string out;
    for (const auto& r : rows) {
        out += r.s;
        out += ' ';
        out += r.p;
        out += ' ';
        out += r.o;
        out += " .\n";
    }
    return out;
}

}  // namespace skosforge
