#include <gtest/gtest.h>

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "skosforge/vocab.hpp"

namespace skosforge {
namespace {

struct AuditRow {
    std::string id;
    int table;
    bool rdf_schema;
    bool owl_dl_prune;
    bool integrity;
    std::string kind;
};

std::vector<AuditRow> load_audit() {
    std::ifstream in(std::string(SKOSFORGE_FIXTURE_DIR) + "/axiom_audit.tsv");
    std::vector<AuditRow> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream fields(line);
        AuditRow r;
        int schema = 0;
        int prune = 0;
        int integrity = 0;
        fields >> r.id >> r.table >> schema >> prune >> integrity >> r.kind;
        r.rdf_schema = schema != 0;
        r.owl_dl_prune = prune != 0;
        r.integrity = integrity != 0;
        rows.push_back(r);
    }
    return rows;
}

TEST(Catalog, SixtyTwoAxiomsDenseIds) {
    const auto table = axiom_table();
    ASSERT_EQ(table.size(), 62u);
    for (std::size_t i = 0; i < table.size(); ++i) EXPECT_EQ(table[i].number, static_cast<int>(i + 1));
}

TEST(Catalog, TableRowCounts) {
    int counts[4] = {0, 0, 0, 0};
    for (const Axiom& a : axiom_table()) ++counts[a.table];
    EXPECT_EQ(counts[1], 40);
    EXPECT_EQ(counts[2], 6);
    EXPECT_EQ(counts[3], 16);
}

TEST(Catalog, MatchesAuditFixtureCellForCell) {
    const auto rows = load_audit();
    ASSERT_EQ(rows.size(), 62u);
    for (const AuditRow& row : rows) {
        const auto number = parse_axiom_id(row.id);
        ASSERT_TRUE(number) << row.id;
        const Axiom& a = axiom(*number);
        EXPECT_EQ(a.table, row.table) << row.id;
        EXPECT_EQ(a.in_rdf_schema, row.rdf_schema) << row.id;
        EXPECT_EQ(a.in_owl_dl_prune, row.owl_dl_prune) << row.id;
        EXPECT_EQ(a.is_integrity_condition, row.integrity) << row.id;
        EXPECT_EQ(to_string(a.kind), row.kind) << row.id;
    }
}

TEST(Catalog, IntegrityPartitionOfFirst46) {
    std::set<int> integrity;
    for (const Axiom& a : axiom_table()) {
        if (a.number <= 46 && a.is_integrity_condition) integrity.insert(a.number);
    }
    EXPECT_EQ(integrity, (std::set<int>{9, 13, 14, 27, 37, 46}));
}

TEST(Catalog, S25IsInverseOfNarrowerBroader) {
    const Axiom& a = axiom(25);
    EXPECT_EQ(a.kind, AxiomKind::InverseOf);
    EXPECT_EQ(a.iris_with(Role::Property), (std::vector<std::string_view>{vocab::skos::narrower}));
    EXPECT_EQ(a.iris_with(Role::Inverse), (std::vector<std::string_view>{vocab::skos::broader}));
}

TEST(Catalog, S52IsExactlyOneLiteralForm) {
    const Axiom& a = axiom(52);
    EXPECT_EQ(a.kind, AxiomKind::CardinalityExactlyOne);
    EXPECT_EQ(a.iris_with(Role::Class), (std::vector<std::string_view>{vocab::skosxl::Label}));
    EXPECT_EQ(a.iris_with(Role::Property), (std::vector<std::string_view>{vocab::skosxl::literalForm}));
}

TEST(Catalog, ArgumentIrisStayInKnownNamespaces) {
    for (const Axiom& a : axiom_table()) {
        for (const auto& arg : a.arguments) {
            const bool known = arg.iri.starts_with(vocab::kSkosNs) || arg.iri.starts_with(vocab::kSkosXlNs) ||
                               arg.iri.starts_with(vocab::kRdfNs) || arg.iri.starts_with(vocab::kRdfsNs) ||
                               arg.iri.starts_with(vocab::kOwlNs);
            EXPECT_TRUE(known) << a.id() << " " << arg.iri;
        }
    }
}

TEST(Profiles, Sizes) {
    EXPECT_EQ(axioms_for(Profile::Reference).size(), 62u);
    // 62 minus S12 S13 S14 S27 S36 S46 S55 S56 S57
    EXPECT_EQ(axioms_for(Profile::RdfSchema).size(), 53u);
    // 46 minus S11 S12 S13 S14 S17 S27 S34 S36 S46
    EXPECT_EQ(axioms_for(Profile::OwlDlPrune).size(), 37u);
}

TEST(Profiles, KnownProfileCells) {
    auto has = [](Profile p, int n) {
        for (const Axiom& a : axioms_for(p)) {
            if (a.number == n) return true;
        }
        return false;
    };
    EXPECT_TRUE(has(Profile::RdfSchema, 11));
    EXPECT_FALSE(has(Profile::OwlDlPrune, 11));
    EXPECT_FALSE(has(Profile::RdfSchema, 13));
    EXPECT_FALSE(has(Profile::OwlDlPrune, 13));
    for (int n = 47; n <= 62; ++n) EXPECT_FALSE(has(Profile::OwlDlPrune, n)) << n;
}

TEST(Profiles, NestedOverFirst46) {
    auto numbers = [](Profile p) {
        std::set<int> out;
        for (const Axiom& a : axioms_for(p)) {
            if (a.number <= 46) out.insert(a.number);
        }
        return out;
    };
    const auto reference = numbers(Profile::Reference);
    const auto schema = numbers(Profile::RdfSchema);
    const auto prune = numbers(Profile::OwlDlPrune);
    EXPECT_TRUE(std::includes(reference.begin(), reference.end(), schema.begin(), schema.end()));
    EXPECT_TRUE(std::includes(schema.begin(), schema.end(), prune.begin(), prune.end()));
}

TEST(Profiles, NamesRoundTrip) {
    for (Profile p : {Profile::Reference, Profile::RdfSchema, Profile::OwlDlPrune}) {
        EXPECT_EQ(profile_from_string(to_string(p)), p);
    }
    EXPECT_FALSE(profile_from_string("owl2"));
}

TEST(AxiomId, Parsing) {
    EXPECT_EQ(parse_axiom_id("S1"), 1);
    EXPECT_EQ(parse_axiom_id("S62"), 62);
    EXPECT_FALSE(parse_axiom_id("S0"));
    EXPECT_FALSE(parse_axiom_id("S63"));
    EXPECT_FALSE(parse_axiom_id("s5"));
    EXPECT_FALSE(parse_axiom_id("S"));
    EXPECT_FALSE(parse_axiom_id("S01x"));
}

TEST(AxiomJson, ShapeAndOrder) {
    const auto doc = nlohmann::json::parse(axioms_to_json(axiom_table()));
    ASSERT_EQ(doc.size(), 62u);
    EXPECT_EQ(doc[24]["id"], "S25");
    EXPECT_EQ(doc[24]["kind"], "InverseOf");
    EXPECT_EQ(doc[24]["arguments"][0]["iri"], std::string(vocab::skos::narrower));
    EXPECT_EQ(doc[10]["in_rdf_schema"], true);
    EXPECT_EQ(doc[10]["in_owl_dl_prune"], false);
    EXPECT_EQ(doc[8]["is_integrity_condition"], true);
}

TEST(Vocab, CompactNames) {
    EXPECT_EQ(vocab::compact(vocab::skos::prefLabel), "skos:prefLabel");
    EXPECT_EQ(vocab::compact(vocab::skosxl::Label), "skosxl:Label");
    EXPECT_EQ(vocab::compact("http://example.org/x"), "http://example.org/x");
}

TEST(Vocab, DescendantsOfSemanticRelation) {
    const auto d = vocab::descendants_of(vocab::skos::semanticRelation);
    const std::set<std::string_view> got(d.begin(), d.end());
    const std::set<std::string_view> want{
        vocab::skos::semanticRelation, vocab::skos::broaderTransitive, vocab::skos::narrowerTransitive,
        vocab::skos::related,          vocab::skos::broader,           vocab::skos::narrower,
        vocab::skos::mappingRelation,  vocab::skos::closeMatch,        vocab::skos::broadMatch,
        vocab::skos::narrowMatch,      vocab::skos::relatedMatch,      vocab::skos::exactMatch};
    EXPECT_EQ(got, want);
}

}  // namespace
}  // namespace skosforge
