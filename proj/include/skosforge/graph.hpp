#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "skosforge/term.hpp"

namespace skosforge {

/// Dense per-graph handle for an interned term.
using TermId = std::uint32_t;

struct IdTriple {
    TermId s = 0;
    TermId p = 0;
    TermId o = 0;

    friend bool operator==(const IdTriple&, const IdTriple&) = default;
};

struct IdTripleHash {
    std::size_t operator()(const IdTriple& t) const noexcept {
        std::uint64_t h = (std::uint64_t{t.s} * 0x9E3779B185EBCA87ULL) ^ (std::uint64_t{t.p} * 0xC2B2AE3D27D4EB4FULL) ^
                          (std::uint64_t{t.o} * 0x165667B19E3779F9ULL);
        return static_cast<std::size_t>(h ^ (h >> 29));
    }
};

/// A set of RDF triples with (s), (p), (o), (s,p) and (p,o) indexes.
///
/// Terms are interned into a dictionary owned by the graph; ids are only
/// meaningful for the graph that issued them. Copies share nothing. When two
/// literals differ only in language-tag case, the dictionary keeps the
/// lexicographically smallest spelling so that the stored form does not depend
/// on insertion order.
class Graph {
public:
    Graph() = default;

    /// Returns true when the triple was not already present.
    bool insert(const Triple& t);
    bool insert(IdTriple t);

    bool contains(const Triple& t) const;
    bool contains(IdTriple t) const;

    std::size_t size() const { return triples_.size(); }
    bool empty() const { return triples_.empty(); }

    TermId intern(const Term& term);
    std::optional<TermId> find(const Term& term) const;
    std::optional<TermId> find_iri(std::string_view iri) const;
    const Term& term(TermId id) const { return terms_[id]; }
    std::size_t term_count() const { return terms_.size(); }

    Triple resolve(IdTriple t) const;

    /// Triples in insertion order.
    std::span<const IdTriple> id_triples() const { return triples_; }
    std::vector<Triple> triples() const;

    /// Calls `fn` for every triple agreeing with the bound positions. `fn`
    /// must not mutate the graph.
    void for_each_match(std::optional<TermId> s, std::optional<TermId> p, std::optional<TermId> o,
                        const std::function<void(const IdTriple&)>& fn) const;

    std::vector<IdTriple> match_ids(std::optional<TermId> s, std::optional<TermId> p,
                                    std::optional<TermId> o) const;

    /// Objects of (s, p, ?).
    std::vector<TermId> objects(TermId s, TermId p) const;
    /// Subjects of (?, p, o).
    std::vector<TermId> subjects(TermId p, TermId o) const;

    /// Set equality on triples, independent of term ids.
    friend bool operator==(const Graph& a, const Graph& b);

private:
    using Postings = std::vector<std::uint32_t>;

    static std::uint64_t pair_key(TermId a, TermId b) { return (std::uint64_t{a} << 32) | b; }

    const Postings* postings(const std::unordered_map<TermId, Postings>& index, TermId key) const;
    const Postings* postings(const std::unordered_map<std::uint64_t, Postings>& index, std::uint64_t key) const;

    std::vector<Term> terms_;
    std::unordered_map<Term, TermId> term_ids_;

    std::vector<IdTriple> triples_;
    std::unordered_set<IdTriple, IdTripleHash> triple_set_;
    std::unordered_map<TermId, Postings> by_s_;
    std::unordered_map<TermId, Postings> by_p_;
    std::unordered_map<TermId, Postings> by_o_;
    std::unordered_map<std::uint64_t, Postings> by_sp_;
    std::unordered_map<std::uint64_t, Postings> by_po_;
};

/// Triples agreeing with every bound position, in no particular order.
std::vector<Triple> match(const Graph& g, const std::optional<Term>& s, const std::optional<Iri>& p,
                          const std::optional<Term>& o);

}  // namespace skosforge
