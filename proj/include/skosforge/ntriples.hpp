#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "skosforge/graph.hpp"

namespace skosforge {

struct ParseIssue {
    std::size_t line = 0;    // 1-based
    std::size_t column = 0;  // 1-based, in bytes
    std::string message;
};

/// Thrown when any line of an N-Triples document is malformed. Every issue in
/// the document is collected before throwing; no partial graph is returned.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(std::vector<ParseIssue> issues);

    const std::vector<ParseIssue>& issues() const { return issues_; }

private:
    std::vector<ParseIssue> issues_;
};

/// Parses UTF-8 N-Triples. Blank lines and `#` comments are ignored.
Graph parse_ntriples(std::string_view text);

/// Adds the triples of `text` to `g`; on error `g` is left untouched.
void parse_ntriples_into(std::string_view text, Graph& g);

/// Parses a single term in N-Triples syntax (e.g. `"x"@en`).
Term parse_term(std::string_view text);

/// Parses a single `s p o .` line.
Triple parse_triple(std::string_view line);

/// Canonical form: one triple per line, sorted by the serialized (subject,
/// predicate, object), `\n` terminated.
std::string serialize_ntriples(const Graph& g);

}  // namespace skosforge
