#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <random>

#include "oracles.hpp"
#include "skosforge/graph.hpp"
#include "skosforge/ntriples.hpp"
#include "skosforge/rdf_list.hpp"
#include "skosforge/vocab.hpp"

namespace skosforge {
namespace {

const std::string kEx = "http://example.org/";

Term ex(const std::string& local) { return Term::iri(kEx + local); }
Iri exp(const std::string& local) { return Iri{kEx + local}; }

TEST(Term, LiteralSubjectRejected) {
    EXPECT_THROW(Triple(Term::literal("x"), exp("p"), ex("o")), std::invalid_argument);
}

TEST(Term, LanguageTagsCompareCaseInsensitively) {
    EXPECT_EQ(Term::lang_literal("colour", "en-GB"), Term::lang_literal("colour", "en-gb"));
    EXPECT_NE(Term::lang_literal("colour", "en"), Term::lang_literal("colour", "en-gb"));
    EXPECT_EQ(std::hash<Term>{}(Term::lang_literal("a", "EN")), std::hash<Term>{}(Term::lang_literal("a", "en")));
}

TEST(Term, LanguageTagKeptAsWritten) {
    EXPECT_EQ(Term::lang_literal("colour", "en-GB").to_ntriples(), "\"colour\"@en-GB");
}

TEST(Term, XsdStringIsNotFoldedIntoPlain) {
    const Term typed = Term::typed_literal("x", std::string(vocab::xsd::string));
    EXPECT_NE(typed, Term::literal("x"));
    EXPECT_FALSE(typed.as_literal().is_plain());
    EXPECT_TRUE(Term::lang_literal("x", "en").as_literal().is_plain());
}

TEST(Term, IriValidation) {
    EXPECT_TRUE(is_valid_iri("http://example.org/a"));
    EXPECT_TRUE(is_valid_iri("urn:isbn:123"));
    EXPECT_FALSE(is_valid_iri(""));
    EXPECT_FALSE(is_valid_iri("http://example.org/a b"));
    EXPECT_FALSE(is_valid_iri("no-scheme"));
    EXPECT_FALSE(is_valid_iri("http://example.org/<x>"));
}

TEST(Term, BlankLabelValidation) {
    EXPECT_TRUE(is_valid_blank_label("b0"));
    EXPECT_TRUE(is_valid_blank_label("A_z9"));
    EXPECT_FALSE(is_valid_blank_label(""));
    EXPECT_FALSE(is_valid_blank_label("a-b"));
    EXPECT_FALSE(is_valid_blank_label("a.b"));
}

TEST(Term, EscapingInSerialization) {
    EXPECT_EQ(Term::literal("a\"b\\c\nd\re").to_ntriples(), "\"a\\\"b\\\\c\\nd\\re\"");
    EXPECT_EQ(Term::literal("tab\there").to_ntriples(), "\"tab\there\"");
}

TEST(Graph, DuplicateInsertKeepsSize) {
    Graph g;
    const Triple t(ex("a"), exp("p"), ex("b"));
    EXPECT_TRUE(g.insert(t));
    EXPECT_FALSE(g.insert(t));
    EXPECT_EQ(g.size(), 1u);
}

TEST(Graph, TagCaseVariantsAreOneTriple) {
    Graph g;
    g.insert(Triple(ex("a"), exp("p"), Term::lang_literal("x", "en-GB")));
    g.insert(Triple(ex("a"), exp("p"), Term::lang_literal("x", "EN-gb")));
    EXPECT_EQ(g.size(), 1u);
}

TEST(Graph, MatchWildcardReturnsAll) {
    Graph g;
    g.insert(Triple(ex("a"), exp("p"), ex("b")));
    g.insert(Triple(ex("b"), exp("q"), Term::literal("x")));
    EXPECT_EQ(match(g, std::nullopt, std::nullopt, std::nullopt).size(), 2u);
}

TEST(Graph, MatchAbsentTermIsEmpty) {
    Graph g;
    g.insert(Triple(ex("a"), exp("p"), ex("b")));
    EXPECT_TRUE(match(g, ex("zzz"), std::nullopt, std::nullopt).empty());
    EXPECT_TRUE(match(g, std::nullopt, exp("zzz"), std::nullopt).empty());
    EXPECT_TRUE(match(g, std::nullopt, std::nullopt, Term::literal("none")).empty());
}

TEST(Graph, EqualityIgnoresInsertionOrder) {
    Graph a;
    Graph b;
    a.insert(Triple(ex("a"), exp("p"), ex("b")));
    a.insert(Triple(ex("c"), exp("p"), ex("d")));
    b.insert(Triple(ex("c"), exp("p"), ex("d")));
    b.insert(Triple(ex("a"), exp("p"), ex("b")));
    EXPECT_EQ(a, b);
    b.insert(Triple(ex("e"), exp("p"), ex("f")));
    EXPECT_NE(a, b);
}

// Every bound/unbound combination of a pattern against a linear scan.
TEST(GraphProperty, MatchEqualsLinearScan) {
    std::mt19937_64 rng(17);
    for (int round = 0; round < 60; ++round) {
        const Graph g = testing::random_skos_graph(rng, 120);
        const auto all = g.triples();
        if (all.empty()) continue;
        for (int probe = 0; probe < 20; ++probe) {
            const Triple& seed = all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)];
            const Triple& other = all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)];
            for (int mask = 0; mask < 8; ++mask) {
                std::optional<Term> s;
                std::optional<Iri> p;
                std::optional<Term> o;
                if (mask & 1) s = seed.subject;
                if (mask & 2) p = (probe % 2 ? other : seed).predicate;
                if (mask & 4) o = seed.object;
                auto got = match(g, s, p, o);
                std::vector<Triple> want;
                for (const Triple& t : all) {
                    if ((!s || t.subject == *s) && (!p || t.predicate == *p) && (!o || t.object == *o)) {
                        want.push_back(t);
                    }
                }
                auto key = [](const Triple& t) { return t.to_ntriples(); };
                auto by_key = [&](const Triple& x, const Triple& y) { return key(x) < key(y); };
                std::sort(got.begin(), got.end(), by_key);
                std::sort(want.begin(), want.end(), by_key);
                ASSERT_EQ(got, want) << "mask " << mask;
            }
        }
    }
}

TEST(GraphProperty, InsertTwiceSameSize) {
    std::mt19937_64 rng(5);
    for (int round = 0; round < 30; ++round) {
        Graph g = testing::random_skos_graph(rng, 80);
        for (const Triple& t : g.triples()) {
            const std::size_t before = g.size();
            g.insert(t);
            ASSERT_EQ(g.size(), before);
        }
    }
}

TEST(NTriples, LoveExampleLine) {
    const Graph g = parse_ntriples(
        "<http://example.org/concept-1234> <http://www.w3.org/2008/05/skos-xl#prefLabel> "
        "<http://example.org/label-5678> .\n");
    ASSERT_EQ(g.size(), 1u);
    EXPECT_EQ(g.triples()[0].predicate.value, vocab::skosxl::prefLabel);
}

TEST(NTriples, EmptyInput) {
    EXPECT_TRUE(parse_ntriples("").empty());
    EXPECT_EQ(serialize_ntriples(Graph{}), "");
}

TEST(NTriples, RepeatedTripleIsOne) {
    const std::string line = "<http://a.example/s> <http://a.example/p> \"o\" .\n";
    EXPECT_EQ(parse_ntriples(line + line).size(), 1u);
}

TEST(NTriples, CommentsBlankLinesAndCrlf) {
    const Graph g = parse_ntriples("# header\n\n<http://a.example/s> <http://a.example/p> _:x . # trailing\r\n");
    ASSERT_EQ(g.size(), 1u);
    EXPECT_TRUE(g.triples()[0].object.is_blank());
}

TEST(NTriples, LiteralForms) {
    const Graph g = parse_ntriples(
        "<http://a.example/s> <http://a.example/p> \"plain\" .\n"
        "<http://a.example/s> <http://a.example/p> \"tagged\"@en-GB .\n"
        "<http://a.example/s> <http://a.example/p> \"5\"^^<http://www.w3.org/2001/XMLSchema#integer> .\n");
    EXPECT_EQ(serialize_ntriples(g),
              "<http://a.example/s> <http://a.example/p> \"5\"^^<http://www.w3.org/2001/XMLSchema#integer> .\n"
              "<http://a.example/s> <http://a.example/p> \"plain\" .\n"
              "<http://a.example/s> <http://a.example/p> \"tagged\"@en-GB .\n");
}

TEST(NTriples, UnicodeEscapesDecoded) {
    const Graph g = parse_ntriples("<http://a.example/s> <http://a.example/p> \"caf\\u00E9 \\U0001F600\" .\n");
    EXPECT_EQ(g.triples()[0].object.as_literal().lexical, "caf\xC3\xA9 \xF0\x9F\x98\x80");
}

TEST(NTriples, EcharEscapesDecoded) {
    const Graph g = parse_ntriples("<http://a.example/s> <http://a.example/p> \"a\\tb\\nc\\\"d\\\\e\\'f\" .\n");
    EXPECT_EQ(g.triples()[0].object.as_literal().lexical, "a\tb\nc\"d\\e'f");
}

TEST(NTriples, ErrorsCarryLineAndColumn) {
    try {
        parse_ntriples("<http://a.example/s> <http://a.example/p> <http://a.example/o> .\n"
                       "<http://a.example/s> <http://a.example/p> \"open .\n"
                       "\"lit\" <http://a.example/p> <http://a.example/o> .\n");
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        ASSERT_EQ(e.issues().size(), 2u);
        EXPECT_EQ(e.issues()[0].line, 2u);
        EXPECT_EQ(e.issues()[1].line, 3u);
        EXPECT_EQ(e.issues()[1].column, 1u);
    }
}

TEST(NTriples, RejectsMalformedLines) {
    const std::vector<std::string> bad{
        "<http://a.example/s> <http://a.example/p> <http://a.example/o>\n",       // no terminator
        "<http://a.example/s> _:p <http://a.example/o> .\n",                      // blank predicate
        "<relative> <http://a.example/p> <http://a.example/o> .\n",              // no scheme
        "<http://a.example/s> <http://a.example/p> \"x\"@ .\n",                   // empty tag
        "<http://a.example/s> <http://a.example/p> \"x\"@en^^<http://t/> .\n",    // tag and datatype
        "<http://a.example/s> <http://a.example/p> \"bad \\q escape\" .\n",       // unknown escape
        "<http://a.example/s> <http://a.example/p> \"\\u12\" .\n",                // short escape
        "<http://a.example/s> <http://a.example/p> _:a-b .\n",                    // label outside [A-Za-z0-9_]
        "<http://a.example/s> <http://a.example/p> <http://a.example/o> . x\n",  // trailing garbage
        "<http://a.example/s> <http://a.example/p> \"\xFF\" .\n",                 // invalid UTF-8
    };
    for (const auto& line : bad) EXPECT_THROW(parse_ntriples(line), ParseError) << line;
}

TEST(NTriples, ParseErrorLeavesTargetUntouched) {
    Graph g;
    g.insert(Triple(ex("a"), exp("p"), ex("b")));
    EXPECT_THROW(parse_ntriples_into("<http://a.example/s> <http://a.example/p> <http://a.example/o> .\nbad\n", g),
                 ParseError);
    EXPECT_EQ(g.size(), 1u);
}

TEST(NTriples, ParseTermAndTriple) {
    EXPECT_EQ(parse_term("\"x\"@en"), Term::lang_literal("x", "en"));
    EXPECT_EQ(parse_term("_:b1"), Term::blank("b1"));
    EXPECT_EQ(parse_triple("<http://a.example/s> <http://a.example/p> \"o\" ."),
              Triple(Term::iri("http://a.example/s"), Iri{"http://a.example/p"}, Term::literal("o")));
}

// Shuffled line order of the same triple set serializes to the same bytes.
TEST(NTriplesProperty, PermutationStableSerialization) {
    std::mt19937_64 rng(99);
    for (int round = 0; round < 40; ++round) {
        const Graph g = testing::random_skos_graph(rng, 150);
        const std::string canonical = serialize_ntriples(g);
        std::vector<std::string> lines;
        for (const Triple& t : g.triples()) lines.push_back(t.to_ntriples());
        std::shuffle(lines.begin(), lines.end(), rng);
        std::string text;
        for (const auto& l : lines) text += l + "\n";
        ASSERT_EQ(serialize_ntriples(parse_ntriples(text)), canonical);
    }
}

TEST(NTriplesProperty, RoundTripOnRandomGraphs) {
    std::mt19937_64 rng(3);
    for (int round = 0; round < 80; ++round) {
        const Graph g = testing::random_skos_graph(rng, 200);
        const Graph back = parse_ntriples(serialize_ntriples(g));
        ASSERT_EQ(back, g);
    }
}

std::vector<std::filesystem::path> corpus_files() {
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(std::string(SKOSFORGE_FIXTURE_DIR) + "/ntriples")) {
        if (entry.path().extension() == ".nt") files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    return files;
}

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

TEST(NTriplesCorpus, EveryFileRoundTrips) {
    const auto files = corpus_files();
    ASSERT_GE(files.size(), 50u);
    for (const auto& path : files) {
        SCOPED_TRACE(path.filename().string());
        const Graph g = parse_ntriples(slurp(path));
        const std::string canonical = serialize_ntriples(g);
        const Graph back = parse_ntriples(canonical);
        EXPECT_EQ(back, g);
        EXPECT_EQ(serialize_ntriples(back), canonical);
    }
}

TEST(NTriplesCorpus, EscapesDecodeToExpectedValues) {
    const Graph g = parse_ntriples(slurp(std::string(SKOSFORGE_FIXTURE_DIR) + "/ntriples/escapes_uchar.nt"));
    EXPECT_FALSE(match(g, std::nullopt, std::nullopt, Term::literal("caf\xC3\xA9")).empty());
    EXPECT_FALSE(match(g, std::nullopt, std::nullopt, Term::literal("smile \xF0\x9F\x98\x80")).empty());
    EXPECT_FALSE(match(g, ex("caf\xC3\xA9"), std::nullopt, std::nullopt).empty());
}

class RdfListTest : public ::testing::Test {
protected:
    Iri first{std::string(vocab::rdf::first)};
    Iri rest{std::string(vocab::rdf::rest)};
    Term nil = Term::iri(std::string(vocab::rdf::nil));
    Graph g;

    void cell(const Term& node, const Term& item, const Term& next) {
        g.insert(Triple(node, first, item));
        g.insert(Triple(node, rest, next));
    }
};

TEST_F(RdfListTest, NilIsEmpty) { EXPECT_TRUE(read_rdf_list(g, nil).empty()); }

TEST_F(RdfListTest, ThreeItemsInOrder) {
    cell(Term::blank("l0"), ex("x"), Term::blank("l1"));
    cell(Term::blank("l1"), ex("y"), Term::blank("l2"));
    cell(Term::blank("l2"), Term::literal("z"), nil);
    EXPECT_EQ(read_rdf_list(g, Term::blank("l0")), (std::vector<Term>{ex("x"), ex("y"), Term::literal("z")}));
}

TEST_F(RdfListTest, CycleDetected) {
    cell(Term::blank("l0"), ex("x"), Term::blank("l1"));
    cell(Term::blank("l1"), ex("y"), Term::blank("l0"));
    try {
        read_rdf_list(g, Term::blank("l0"));
        FAIL();
    } catch (const RdfListError& e) {
        EXPECT_EQ(e.kind(), RdfListError::Kind::Cyclic);
        EXPECT_EQ(e.node(), Term::blank("l0"));
    }
}

TEST_F(RdfListTest, MissingRestIsMalformed) {
    g.insert(Triple(Term::blank("l0"), first, ex("x")));
    try {
        read_rdf_list(g, Term::blank("l0"));
        FAIL();
    } catch (const RdfListError& e) {
        EXPECT_EQ(e.kind(), RdfListError::Kind::Malformed);
    }
}

TEST_F(RdfListTest, TwoFirstsIsAmbiguous) {
    cell(Term::blank("l0"), ex("x"), nil);
    g.insert(Triple(Term::blank("l0"), first, ex("y")));
    try {
        read_rdf_list(g, Term::blank("l0"));
        FAIL();
    } catch (const RdfListError& e) {
        EXPECT_EQ(e.kind(), RdfListError::Kind::Ambiguous);
    }
}

TEST_F(RdfListTest, AbsentHeadIsMalformed) {
    EXPECT_THROW(read_rdf_list(g, Term::blank("nowhere")), RdfListError);
}

TEST_F(RdfListTest, TerminatesOnRandomGraphs) {
    std::mt19937_64 rng(11);
    for (int round = 0; round < 100; ++round) {
        const Graph r = testing::random_skos_graph(rng, 120);
        for (const Triple& t : r.triples()) {
            if (t.subject.is_literal()) continue;
            try {
                (void)read_rdf_list(r, t.subject);
            } catch (const RdfListError&) {
            }
        }
    }
}

}  // namespace
}  // namespace skosforge
