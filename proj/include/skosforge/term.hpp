#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace skosforge {

struct Iri {
    std::string value;

    friend bool operator==(const Iri&, const Iri&) = default;
    friend auto operator<=>(const Iri&, const Iri&) = default;
};

struct BlankNode {
    std::string label;

    friend bool operator==(const BlankNode&, const BlankNode&) = default;
};

/// An RDF literal. Language tags keep the case they were written with but
/// compare case-insensitively; a literal never carries both a language tag and
/// a datatype.
struct Literal {
    std::string lexical;
    std::optional<std::string> language;
    std::optional<Iri> datatype;

    /// No datatype (a language tag is allowed).
    bool is_plain() const { return !datatype.has_value(); }

    friend bool operator==(const Literal& a, const Literal& b);
};

/// Lower-cases ASCII letters; used for language-tag comparison.
std::string ascii_lower(std::string_view s);

bool language_tags_equal(std::string_view a, std::string_view b);

/// IRI, blank node or literal.
class Term {
public:
    enum class Kind : unsigned char { Iri, Blank, Literal };

    Term(Iri iri) : value_(std::move(iri)) {}
    Term(BlankNode node) : value_(std::move(node)) {}
    Term(Literal literal) : value_(std::move(literal)) {}

    static Term iri(std::string value) { return Term(Iri{std::move(value)}); }
    static Term blank(std::string label) { return Term(BlankNode{std::move(label)}); }
    static Term literal(std::string lexical) { return Term(Literal{std::move(lexical), {}, {}}); }
    static Term lang_literal(std::string lexical, std::string tag) {
        return Term(Literal{std::move(lexical), std::move(tag), {}});
    }
    static Term typed_literal(std::string lexical, std::string datatype) {
        return Term(Literal{std::move(lexical), {}, Iri{std::move(datatype)}});
    }

    Kind kind() const { return static_cast<Kind>(value_.index()); }
    bool is_iri() const { return kind() == Kind::Iri; }
    bool is_blank() const { return kind() == Kind::Blank; }
    bool is_literal() const { return kind() == Kind::Literal; }
    /// IRIs and blank nodes may stand in subject position.
    bool is_resource() const { return !is_literal(); }

    const Iri& as_iri() const { return std::get<Iri>(value_); }
    const BlankNode& as_blank() const { return std::get<BlankNode>(value_); }
    const Literal& as_literal() const { return std::get<Literal>(value_); }

    /// N-Triples form: `<iri>`, `_:label`, `"lex"`, `"lex"@tag`, `"lex"^^<dt>`.
    std::string to_ntriples() const;

    friend bool operator==(const Term&, const Term&) = default;

private:
    std::variant<Iri, BlankNode, Literal> value_;
};

struct Triple {
    Term subject;
    Iri predicate;
    Term object;

    /// Throws std::invalid_argument when the subject is a literal.
    Triple(Term s, Iri p, Term o);

    /// `<s> <p> <o> .` without a trailing newline.
    std::string to_ntriples() const;

    friend bool operator==(const Triple&, const Triple&) = default;
};

/// Checks the IRI invariants: non-empty, a scheme, and no whitespace,
/// control or N-Triples-reserved characters.
bool is_valid_iri(std::string_view value);

/// Blank node labels are restricted to `[A-Za-z0-9_]+`.
bool is_valid_blank_label(std::string_view label);

/// `[a-zA-Z]+(-[a-zA-Z0-9]+)*`
bool is_valid_language_tag(std::string_view tag);

std::string escape_literal(std::string_view lexical);

}  // namespace skosforge

template <>
struct std::hash<skosforge::Term> {
    std::size_t operator()(const skosforge::Term& t) const noexcept;
};

template <>
struct std::hash<skosforge::Triple> {
    std::size_t operator()(const skosforge::Triple& t) const noexcept;
};
