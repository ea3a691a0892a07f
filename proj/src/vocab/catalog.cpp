#include <algorithm>
#include <array>
#include <stdexcept>

#include "json.hpp"
#include "skosforge/vocab.hpp"

namespace skosforge {

namespace {

namespace sk = vocab::skos;
namespace xl = vocab::skosxl;

using K = AxiomKind;
using R = Role;

struct Presence {
    bool rdf_schema;
    bool owl_dl_prune;
};

constexpr Presence kGreenGreen{true, true};
constexpr Presence kGreenRed{true, false};
constexpr Presence kRedRed{false, false};
// SKOS-XL has a single schema column and no OWL DL prune.
constexpr Presence kXlGreen{true, false};
constexpr Presence kXlRed{false, false};

Axiom make(int number, int table, K kind, std::vector<AxiomArgument> args, Presence presence,
           bool integrity = false) {
    Axiom a;
    a.number = number;
    a.table = table;
    a.kind = kind;
    a.arguments = std::move(args);
    a.in_rdf_schema = presence.rdf_schema;
    a.in_owl_dl_prune = presence.owl_dl_prune;
    a.is_integrity_condition = integrity;
    return a;
}

std::vector<Axiom> build_catalog() {
    const auto owl_class = vocab::owl::Class;
    const auto object_property = vocab::owl::ObjectProperty;
    const auto annotation_property = vocab::owl::AnnotationProperty;
    const auto datatype_property = vocab::owl::DatatypeProperty;

    std::vector<Axiom> c;
    c.reserve(62);
    // Definition axioms
    c.push_back(make(1, 1, K::InstanceOfMetaclass, {{R::Instance, sk::Concept}, {R::Metaclass, owl_class}}, kGreenGreen));
    c.push_back(make(2, 1, K::InstanceOfMetaclass, {{R::Instance, sk::ConceptScheme}, {R::Metaclass, owl_class}},
                     kGreenGreen));
    c.push_back(make(3, 1, K::InstanceOfMetaclass,
                     {{R::Instance, sk::inScheme}, {R::Instance, sk::hasTopConcept}, {R::Instance, sk::topConceptOf},
                      {R::Metaclass, object_property}},
                     kGreenGreen));
    c.push_back(make(4, 1, K::Range, {{R::Property, sk::inScheme}, {R::Class, sk::ConceptScheme}}, kGreenGreen));
    c.push_back(make(5, 1, K::Domain, {{R::Property, sk::hasTopConcept}, {R::Class, sk::ConceptScheme}}, kGreenGreen));
    c.push_back(make(6, 1, K::Range, {{R::Property, sk::hasTopConcept}, {R::Class, sk::Concept}}, kGreenGreen));
    c.push_back(make(7, 1, K::SubPropertyOf, {{R::Sub, sk::topConceptOf}, {R::Super, sk::inScheme}}, kGreenGreen));
    c.push_back(make(8, 1, K::InverseOf, {{R::Property, sk::topConceptOf}, {R::Inverse, sk::hasTopConcept}}, kGreenGreen));
    c.push_back(make(9, 2, K::DisjointClasses, {{R::Class, sk::ConceptScheme}, {R::DisjointWith, sk::Concept}},
                     kGreenGreen, true));
    c.push_back(make(10, 1, K::InstanceOfMetaclass,
                     {{R::Instance, sk::prefLabel}, {R::Instance, sk::altLabel}, {R::Instance, sk::hiddenLabel},
                      {R::Metaclass, annotation_property}},
                     kGreenGreen));
    c.push_back(make(11, 1, K::SubPropertyOf,
                     {{R::Sub, sk::prefLabel}, {R::Sub, sk::altLabel}, {R::Sub, sk::hiddenLabel},
                      {R::Super, vocab::rdfs::label}},
                     kGreenRed));
    c.push_back(make(12, 1, K::PlainLiteralRange,
                     {{R::Property, sk::prefLabel}, {R::Property, sk::altLabel}, {R::Property, sk::hiddenLabel}},
                     kRedRed));
    c.push_back(make(13, 2, K::DisjointProperties,
                     {{R::Property, sk::prefLabel}, {R::Property, sk::altLabel}, {R::Property, sk::hiddenLabel}},
                     kRedRed, true));
    c.push_back(make(14, 2, K::UniquePrefLabelPerLanguage, {{R::Property, sk::prefLabel}}, kRedRed, true));
    c.push_back(make(15, 1, K::InstanceOfMetaclass, {{R::Instance, sk::notation}, {R::Metaclass, datatype_property}},
                     kGreenGreen));
    c.push_back(make(16, 1, K::InstanceOfMetaclass,
                     {{R::Instance, sk::note}, {R::Instance, sk::changeNote}, {R::Instance, sk::definition},
                      {R::Instance, sk::editorialNote}, {R::Instance, sk::example}, {R::Instance, sk::historyNote},
                      {R::Instance, sk::scopeNote}, {R::Metaclass, annotation_property}},
                     kGreenGreen));
    c.push_back(make(17, 1, K::SubPropertyOf,
                     {{R::Sub, sk::changeNote}, {R::Sub, sk::definition}, {R::Sub, sk::editorialNote},
                      {R::Sub, sk::example}, {R::Sub, sk::historyNote}, {R::Sub, sk::scopeNote},
                      {R::Super, sk::note}},
                     kGreenRed));
    c.push_back(make(18, 1, K::InstanceOfMetaclass,
                     {{R::Instance, sk::semanticRelation}, {R::Instance, sk::broader}, {R::Instance, sk::narrower},
                      {R::Instance, sk::related}, {R::Instance, sk::broaderTransitive},
                      {R::Instance, sk::narrowerTransitive}, {R::Metaclass, object_property}},
                     kGreenGreen));
    c.push_back(make(19, 1, K::Domain, {{R::Property, sk::semanticRelation}, {R::Class, sk::Concept}}, kGreenGreen));
    c.push_back(make(20, 1, K::Range, {{R::Property, sk::semanticRelation}, {R::Class, sk::Concept}}, kGreenGreen));
    c.push_back(make(21, 1, K::SubPropertyOf,
                     {{R::Sub, sk::broaderTransitive}, {R::Sub, sk::narrowerTransitive}, {R::Sub, sk::related},
                      {R::Super, sk::semanticRelation}},
                     kGreenGreen));
    c.push_back(make(22, 1, K::SubPropertyOf,
                     {{R::Sub, sk::broader}, {R::Super, sk::broaderTransitive}, {R::Sub, sk::narrower},
                      {R::Super, sk::narrowerTransitive}},
                     kGreenGreen));
    c.push_back(make(23, 1, K::Symmetric, {{R::Property, sk::related}}, kGreenGreen));
    c.push_back(make(24, 1, K::Transitive, {{R::Property, sk::broaderTransitive}, {R::Property, sk::narrowerTransitive}},
                     kGreenGreen));
    c.push_back(make(25, 1, K::InverseOf, {{R::Property, sk::narrower}, {R::Inverse, sk::broader}}, kGreenGreen));
    c.push_back(make(26, 1, K::InverseOf, {{R::Property, sk::narrowerTransitive}, {R::Inverse, sk::broaderTransitive}},
                     kGreenGreen));
    c.push_back(make(27, 2, K::DisjointProperties, {{R::Property, sk::related}, {R::DisjointWith, sk::broaderTransitive}},
                     kRedRed, true));
    c.push_back(make(28, 1, K::InstanceOfMetaclass,
                     {{R::Instance, sk::Collection}, {R::Instance, sk::OrderedCollection}, {R::Metaclass, owl_class}},
                     kGreenGreen));
    c.push_back(make(29, 1, K::SubClassOf, {{R::Sub, sk::OrderedCollection}, {R::Super, sk::Collection}}, kGreenGreen));
    c.push_back(make(30, 1, K::InstanceOfMetaclass,
                     {{R::Instance, sk::member}, {R::Instance, sk::memberList}, {R::Metaclass, object_property}},
                     kGreenGreen));
    c.push_back(make(31, 1, K::Domain, {{R::Property, sk::member}, {R::Class, sk::Collection}}, kGreenGreen));
    c.push_back(make(32, 1, K::Range,
                     {{R::Property, sk::member}, {R::UnionMember, sk::Concept}, {R::UnionMember, sk::Collection}},
                     kGreenGreen));
    c.push_back(make(33, 1, K::Domain, {{R::Property, sk::memberList}, {R::Class, sk::OrderedCollection}}, kGreenGreen));
    c.push_back(make(34, 1, K::Range, {{R::Property, sk::memberList}, {R::Class, vocab::rdf::List}}, kGreenRed));
    c.push_back(make(35, 1, K::Functional, {{R::Property, sk::memberList}}, kGreenGreen));
    c.push_back(make(36, 1, K::ListMemberRule, {{R::ListProperty, sk::memberList}, {R::MemberProperty, sk::member}},
                     kRedRed));
    c.push_back(make(37, 2, K::DisjointClasses,
                     {{R::Class, sk::Collection}, {R::DisjointWith, sk::Concept}, {R::DisjointWith, sk::ConceptScheme}},
                     kGreenGreen, true));
    c.push_back(make(38, 1, K::InstanceOfMetaclass,
                     {{R::Instance, sk::mappingRelation}, {R::Instance, sk::closeMatch}, {R::Instance, sk::exactMatch},
                      {R::Instance, sk::broadMatch}, {R::Instance, sk::narrowMatch}, {R::Instance, sk::relatedMatch},
                      {R::Metaclass, object_property}},
                     kGreenGreen));
    c.push_back(make(39, 1, K::SubPropertyOf, {{R::Sub, sk::mappingRelation}, {R::Super, sk::semanticRelation}},
                     kGreenGreen));
    c.push_back(make(40, 1, K::SubPropertyOf,
                     {{R::Sub, sk::closeMatch}, {R::Sub, sk::broadMatch}, {R::Sub, sk::narrowMatch},
                      {R::Sub, sk::relatedMatch}, {R::Super, sk::mappingRelation}},
                     kGreenGreen));
    c.push_back(make(41, 1, K::SubPropertyOf,
                     {{R::Sub, sk::broadMatch}, {R::Super, sk::broader}, {R::Sub, sk::narrowMatch},
                      {R::Super, sk::narrower}, {R::Sub, sk::relatedMatch}, {R::Super, sk::related}},
                     kGreenGreen));
    c.push_back(make(42, 1, K::SubPropertyOf, {{R::Sub, sk::exactMatch}, {R::Super, sk::closeMatch}}, kGreenGreen));
    c.push_back(make(43, 1, K::InverseOf, {{R::Property, sk::narrowMatch}, {R::Inverse, sk::broadMatch}}, kGreenGreen));
    c.push_back(make(44, 1, K::Symmetric,
                     {{R::Property, sk::relatedMatch}, {R::Property, sk::closeMatch}, {R::Property, sk::exactMatch}},
                     kGreenGreen));
    c.push_back(make(45, 1, K::Transitive, {{R::Property, sk::exactMatch}}, kGreenGreen));
    c.push_back(make(46, 2, K::DisjointProperties,
                     {{R::Property, sk::exactMatch}, {R::DisjointWith, sk::broadMatch},
                      {R::DisjointWith, sk::relatedMatch}},
                     kRedRed, true));
    // SKOS-XL
    c.push_back(make(47, 3, K::InstanceOfMetaclass, {{R::Instance, xl::Label}, {R::Metaclass, owl_class}}, kXlGreen));
    c.push_back(make(48, 3, K::DisjointClasses,
                     {{R::Class, xl::Label}, {R::DisjointWith, sk::Concept}, {R::DisjointWith, sk::ConceptScheme},
                      {R::DisjointWith, sk::Collection}},
                     kXlGreen, true));
    c.push_back(make(49, 3, K::InstanceOfMetaclass, {{R::Instance, xl::literalForm}, {R::Metaclass, datatype_property}},
                     kXlGreen));
    c.push_back(make(50, 3, K::Domain, {{R::Property, xl::literalForm}, {R::Class, xl::Label}}, kXlGreen));
    c.push_back(make(51, 3, K::PlainLiteralRange, {{R::Property, xl::literalForm}}, kXlGreen));
    c.push_back(make(52, 3, K::CardinalityExactlyOne, {{R::Class, xl::Label}, {R::Property, xl::literalForm}}, kXlGreen,
                     true));
    c.push_back(make(53, 3, K::InstanceOfMetaclass,
                     {{R::Instance, xl::prefLabel}, {R::Instance, xl::altLabel}, {R::Instance, xl::hiddenLabel},
                      {R::Metaclass, object_property}},
                     kXlGreen));
    c.push_back(make(54, 3, K::Range,
                     {{R::Property, xl::prefLabel}, {R::Property, xl::altLabel}, {R::Property, xl::hiddenLabel},
                      {R::Class, xl::Label}},
                     kXlGreen));
    c.push_back(make(55, 3, K::PropertyChain,
                     {{R::Chain, xl::prefLabel}, {R::Chain, xl::literalForm}, {R::Super, sk::prefLabel}}, kXlRed));
    c.push_back(make(56, 3, K::PropertyChain,
                     {{R::Chain, xl::altLabel}, {R::Chain, xl::literalForm}, {R::Super, sk::altLabel}}, kXlRed));
    c.push_back(make(57, 3, K::PropertyChain,
                     {{R::Chain, xl::hiddenLabel}, {R::Chain, xl::literalForm}, {R::Super, sk::hiddenLabel}}, kXlRed));
    c.push_back(make(58, 3, K::DisjointProperties,
                     {{R::Property, xl::prefLabel}, {R::Property, xl::altLabel}, {R::Property, xl::hiddenLabel}},
                     kXlGreen, true));
    c.push_back(make(59, 3, K::InstanceOfMetaclass, {{R::Instance, xl::labelRelation}, {R::Metaclass, object_property}},
                     kXlGreen));
    c.push_back(make(60, 3, K::Domain, {{R::Property, xl::labelRelation}, {R::Class, xl::Label}}, kXlGreen));
    c.push_back(make(61, 3, K::Range, {{R::Property, xl::labelRelation}, {R::Class, xl::Label}}, kXlGreen));
    c.push_back(make(62, 3, K::Symmetric, {{R::Property, xl::labelRelation}}, kXlGreen));
    return c;
}

const std::vector<Axiom>& catalog() {
    static const std::vector<Axiom> instance = build_catalog();
    return instance;
}

}  // namespace

std::string_view to_string(AxiomKind kind) {
    switch (kind) {
    case K::SubPropertyOf: return "SubPropertyOf";
    case K::SubClassOf: return "SubClassOf";
    case K::Domain: return "Domain";
    case K::Range: return "Range";
    case K::InverseOf: return "InverseOf";
    case K::Symmetric: return "Symmetric";
    case K::Transitive: return "Transitive";
    case K::Functional: return "Functional";
    case K::DisjointClasses: return "DisjointClasses";
    case K::DisjointProperties: return "DisjointProperties";
    case K::PropertyChain: return "PropertyChain";
    case K::CardinalityExactlyOne: return "CardinalityExactlyOne";
    case K::ListMemberRule: return "ListMemberRule";
    case K::UniquePrefLabelPerLanguage: return "UniquePrefLabelPerLanguage";
    case K::PlainLiteralRange: return "PlainLiteralRange";
    case K::InstanceOfMetaclass: return "InstanceOfMetaclass";
    }
    return "?";
}

std::string_view to_string(Role role) {
    switch (role) {
    case R::Sub: return "sub";
    case R::Super: return "super";
    case R::Property: return "property";
    case R::Inverse: return "inverse";
    case R::Class: return "class";
    case R::DisjointWith: return "disjoint_with";
    case R::UnionMember: return "union_member";
    case R::Chain: return "chain";
    case R::ListProperty: return "list_property";
    case R::MemberProperty: return "member_property";
    case R::Instance: return "instance";
    case R::Metaclass: return "metaclass";
    }
    return "?";
}

std::string_view to_string(Profile profile) {
    switch (profile) {
    case Profile::Reference: return "reference";
    case Profile::RdfSchema: return "rdf-schema";
    case Profile::OwlDlPrune: return "owl-dl-prune";
    }
    return "?";
}

std::optional<Profile> profile_from_string(std::string_view name) {
    if (name == "reference") return Profile::Reference;
    if (name == "rdf-schema") return Profile::RdfSchema;
    if (name == "owl-dl-prune") return Profile::OwlDlPrune;
    return std::nullopt;
}

std::vector<std::string_view> Axiom::iris_with(Role role) const {
    std::vector<std::string_view> out;
    for (const auto& arg : arguments) {
        if (arg.role == role) out.push_back(arg.iri);
    }
    return out;
}

std::span<const Axiom> axiom_table() { return catalog(); }

const Axiom& axiom(int number) {
    if (number < 1 || number > 62) throw std::out_of_range("no axiom S" + std::to_string(number));
    return catalog()[static_cast<std::size_t>(number - 1)];
}

std::optional<int> parse_axiom_id(std::string_view id) {
    if (id.size() < 2 || id.size() > 3 || id[0] != 'S') return std::nullopt;
    int n = 0;
    for (char ch : id.substr(1)) {
        if (ch < '0' || ch > '9') return std::nullopt;
        n = n * 10 + (ch - '0');
    }
    if (id[1] == '0' || n < 1 || n > 62) return std::nullopt;
    return n;
}

std::vector<Axiom> axioms_for(Profile profile) {
    std::vector<Axiom> out;
    for (const auto& a : catalog()) {
        const bool present = profile == Profile::Reference   ? true
                             : profile == Profile::RdfSchema ? a.in_rdf_schema
                                                             : a.in_owl_dl_prune;
        if (present) out.push_back(a);
    }
    return out;
}

std::string axioms_to_json(std::span<const Axiom> axioms) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& a : axioms) {
        nlohmann::ordered_json args = nlohmann::ordered_json::array();
        for (const auto& arg : a.arguments) {
            args.push_back({{"role", to_string(arg.role)}, {"iri", arg.iri}});
        }
        arr.push_back({{"id", a.id()},
                       {"table", a.table},
                       {"kind", to_string(a.kind)},
                       {"arguments", std::move(args)},
                       {"in_rdf_schema", a.in_rdf_schema},
                       {"in_owl_dl_prune", a.in_owl_dl_prune},
                       {"is_integrity_condition", a.is_integrity_condition}});
    }
    return arr.dump(2) + "\n";
}

std::vector<std::string_view> vocab::descendants_of(std::string_view root) {
    std::vector<std::pair<std::string_view, std::string_view>> down;  // super, sub
    for (const Axiom& a : catalog()) {
        if (a.kind != AxiomKind::SubPropertyOf && a.kind != AxiomKind::SubClassOf) continue;
        std::vector<std::string_view> pending;
        for (const auto& arg : a.arguments) {
            if (arg.role == Role::Sub) {
                pending.push_back(arg.iri);
            } else if (arg.role == Role::Super) {
                for (auto sub : pending) down.emplace_back(arg.iri, sub);
                pending.clear();
            }
        }
    }
    std::vector<std::string_view> out{root};
    for (std::size_t i = 0; i < out.size(); ++i) {
        for (const auto& [super, sub] : down) {
            if (super == out[i] && std::find(out.begin(), out.end(), sub) == out.end()) out.push_back(sub);
        }
    }
    return out;
}

std::string vocab::compact(std::string_view iri) {
    static constexpr std::array<std::pair<std::string_view, std::string_view>, 6> prefixes{{
        {kSkosNs, "skos:"},
        {kSkosXlNs, "skosxl:"},
        {kRdfNs, "rdf:"},
        {kRdfsNs, "rdfs:"},
        {kOwlNs, "owl:"},
        {kXsdNs, "xsd:"},
    }};
    for (const auto& [ns, prefix] : prefixes) {
        if (iri.starts_with(ns)) return std::string(prefix) + std::string(iri.substr(ns.size()));
    }
    return std::string(iri);
}

}  // namespace skosforge
