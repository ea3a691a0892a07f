#include "skosforge/graph.hpp"

namespace skosforge {

TermId Graph::intern(const Term& term) {
    if (auto it = term_ids_.find(term); it != term_ids_.end()) {
        Term& stored = terms_[it->second];
        if (term.is_literal() && term.as_literal().language) {
            const auto& incoming = *term.as_literal().language;
            const auto& current = *stored.as_literal().language;
            if (incoming < current) stored = term;
        }
        return it->second;
    }
    const auto id = static_cast<TermId>(terms_.size());
    terms_.push_back(term);
    term_ids_.emplace(term, id);
    return id;
}

std::optional<TermId> Graph::find(const Term& term) const {
    if (auto it = term_ids_.find(term); it != term_ids_.end()) return it->second;
    return std::nullopt;
}

std::optional<TermId> Graph::find_iri(std::string_view iri) const {
    return find(Term::iri(std::string(iri)));
}

bool Graph::insert(const Triple& t) {
    const TermId s = intern(t.subject);
    const TermId p = intern(Term(t.predicate));
    const TermId o = intern(t.object);
    return insert(IdTriple{s, p, o});
}

bool Graph::insert(IdTriple t) {
    if (!triple_set_.insert(t).second) return false;
    const auto pos = static_cast<std::uint32_t>(triples_.size());
    triples_.push_back(t);
    by_s_[t.s].push_back(pos);
    by_p_[t.p].push_back(pos);
    by_o_[t.o].push_back(pos);
    by_sp_[pair_key(t.s, t.p)].push_back(pos);
    by_po_[pair_key(t.p, t.o)].push_back(pos);
    return true;
}

bool Graph::contains(IdTriple t) const { return triple_set_.contains(t); }

bool Graph::contains(const Triple& t) const {
    const auto s = find(t.subject);
    const auto p = find(Term(t.predicate));
    const auto o = find(t.object);
    return s && p && o && contains(IdTriple{*s, *p, *o});
}

Triple Graph::resolve(IdTriple t) const {
    return Triple(terms_[t.s], terms_[t.p].as_iri(), terms_[t.o]);
}

std::vector<Triple> Graph::triples() const {
    std::vector<Triple> out;
    out.reserve(triples_.size());
    for (const auto& t : triples_) out.push_back(resolve(t));
    return out;
}

const Graph::Postings* Graph::postings(const std::unordered_map<TermId, Postings>& index, TermId key) const {
    auto it = index.find(key);
    return it == index.end() ? nullptr : &it->second;
}

const Graph::Postings* Graph::postings(const std::unordered_map<std::uint64_t, Postings>& index,
                                       std::uint64_t key) const {
    auto it = index.find(key);
    return it == index.end() ? nullptr : &it->second;
}

void Graph::for_each_match(std::optional<TermId> s, std::optional<TermId> p, std::optional<TermId> o,
                           const std::function<void(const IdTriple&)>& fn) const {
    if (s && p && o) {
        if (contains(IdTriple{*s, *p, *o})) fn(IdTriple{*s, *p, *o});
        return;
    }
    const Postings* list = nullptr;
    if (s && p) {
        list = postings(by_sp_, pair_key(*s, *p));
    } else if (p && o) {
        list = postings(by_po_, pair_key(*p, *o));
    } else if (s) {
        list = postings(by_s_, *s);
    } else if (o) {
        list = postings(by_o_, *o);
    } else if (p) {
        list = postings(by_p_, *p);
    } else {
        for (const auto& t : triples_) fn(t);
        return;
    }
    if (list == nullptr) return;
    for (const std::uint32_t pos : *list) {
        const IdTriple& t = triples_[pos];
        // (s,o) bound without p is served by the s index
        if (o && t.o != *o) continue;
        fn(t);
    }
}

std::vector<IdTriple> Graph::match_ids(std::optional<TermId> s, std::optional<TermId> p,
                                       std::optional<TermId> o) const {
    std::vector<IdTriple> out;
    for_each_match(s, p, o, [&](const IdTriple& t) { out.push_back(t); });
    return out;
}

std::vector<TermId> Graph::objects(TermId s, TermId p) const {
    std::vector<TermId> out;
    if (const Postings* list = postings(by_sp_, pair_key(s, p))) {
        out.reserve(list->size());
        for (const std::uint32_t pos : *list) out.push_back(triples_[pos].o);
    }
    return out;
}

std::vector<TermId> Graph::subjects(TermId p, TermId o) const {
    std::vector<TermId> out;
    if (const Postings* list = postings(by_po_, pair_key(p, o))) {
        out.reserve(list->size());
        for (const std::uint32_t pos : *list) out.push_back(triples_[pos].s);
    }
    return out;
}

bool operator==(const Graph& a, const Graph& b) {
    if (a.size() != b.size()) return false;
    for (const auto& t : a.triples_) {
        const auto s = b.find(a.term(t.s));
        const auto p = b.find(a.term(t.p));
        const auto o = b.find(a.term(t.o));
        if (!s || !p || !o || !b.contains(IdTriple{*s, *p, *o})) return false;
    }
    return true;
}

std::vector<Triple> match(const Graph& g, const std::optional<Term>& s, const std::optional<Iri>& p,
                          const std::optional<Term>& o) {
    std::optional<TermId> sid, pid, oid;
    if (s) {
        sid = g.find(*s);
        if (!sid) return {};
    }
    if (p) {
        pid = g.find(Term(*p));
        if (!pid) return {};
    }
    if (o) {
        oid = g.find(*o);
        if (!oid) return {};
    }
    std::vector<Triple> out;
    g.for_each_match(sid, pid, oid, [&](const IdTriple& t) { out.push_back(g.resolve(t)); });
    return out;
}

}  // namespace skosforge
