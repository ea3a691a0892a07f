#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace skosforge {

namespace vocab {

inline constexpr std::string_view kSkosNs = "http://www.w3.org/2004/02/skos/core#";
inline constexpr std::string_view kSkosXlNs = "http://www.w3.org/2008/05/skos-xl#";
inline constexpr std::string_view kRdfNs = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr std::string_view kRdfsNs = "http://www.w3.org/2000/01/rdf-schema#";
inline constexpr std::string_view kOwlNs = "http://www.w3.org/2002/07/owl#";
inline constexpr std::string_view kXsdNs = "http://www.w3.org/2001/XMLSchema#";

namespace skos {
inline constexpr std::string_view Concept = "http://www.w3.org/2004/02/skos/core#Concept";
inline constexpr std::string_view ConceptScheme = "http://www.w3.org/2004/02/skos/core#ConceptScheme";
inline constexpr std::string_view Collection = "http://www.w3.org/2004/02/skos/core#Collection";
inline constexpr std::string_view OrderedCollection = "http://www.w3.org/2004/02/skos/core#OrderedCollection";
inline constexpr std::string_view inScheme = "http://www.w3.org/2004/02/skos/core#inScheme";
inline constexpr std::string_view hasTopConcept = "http://www.w3.org/2004/02/skos/core#hasTopConcept";
inline constexpr std::string_view topConceptOf = "http://www.w3.org/2004/02/skos/core#topConceptOf";
inline constexpr std::string_view prefLabel = "http://www.w3.org/2004/02/skos/core#prefLabel";
inline constexpr std::string_view altLabel = "http://www.w3.org/2004/02/skos/core#altLabel";
inline constexpr std::string_view hiddenLabel = "http://www.w3.org/2004/02/skos/core#hiddenLabel";
inline constexpr std::string_view notation = "http://www.w3.org/2004/02/skos/core#notation";
inline constexpr std::string_view note = "http://www.w3.org/2004/02/skos/core#note";
inline constexpr std::string_view changeNote = "http://www.w3.org/2004/02/skos/core#changeNote";
inline constexpr std::string_view definition = "http://www.w3.org/2004/02/skos/core#definition";
inline constexpr std::string_view editorialNote = "http://www.w3.org/2004/02/skos/core#editorialNote";
inline constexpr std::string_view example = "http://www.w3.org/2004/02/skos/core#example";
inline constexpr std::string_view historyNote = "http://www.w3.org/2004/02/skos/core#historyNote";
inline constexpr std::string_view scopeNote = "http://www.w3.org/2004/02/skos/core#scopeNote";
inline constexpr std::string_view semanticRelation = "http://www.w3.org/2004/02/skos/core#semanticRelation";
inline constexpr std::string_view broader = "http://www.w3.org/2004/02/skos/core#broader";
inline constexpr std::string_view narrower = "http://www.w3.org/2004/02/skos/core#narrower";
inline constexpr std::string_view related = "http://www.w3.org/2004/02/skos/core#related";
inline constexpr std::string_view broaderTransitive = "http://www.w3.org/2004/02/skos/core#broaderTransitive";
inline constexpr std::string_view narrowerTransitive = "http://www.w3.org/2004/02/skos/core#narrowerTransitive";
inline constexpr std::string_view member = "http://www.w3.org/2004/02/skos/core#member";
inline constexpr std::string_view memberList = "http://www.w3.org/2004/02/skos/core#memberList";
inline constexpr std::string_view mappingRelation = "http://www.w3.org/2004/02/skos/core#mappingRelation";
inline constexpr std::string_view closeMatch = "http://www.w3.org/2004/02/skos/core#closeMatch";
inline constexpr std::string_view exactMatch = "http://www.w3.org/2004/02/skos/core#exactMatch";
inline constexpr std::string_view broadMatch = "http://www.w3.org/2004/02/skos/core#broadMatch";
inline constexpr std::string_view narrowMatch = "http://www.w3.org/2004/02/skos/core#narrowMatch";
inline constexpr std::string_view relatedMatch = "http://www.w3.org/2004/02/skos/core#relatedMatch";
}  // namespace skos

namespace skosxl {
inline constexpr std::string_view Label = "http://www.w3.org/2008/05/skos-xl#Label";
inline constexpr std::string_view literalForm = "http://www.w3.org/2008/05/skos-xl#literalForm";
inline constexpr std::string_view prefLabel = "http://www.w3.org/2008/05/skos-xl#prefLabel";
inline constexpr std::string_view altLabel = "http://www.w3.org/2008/05/skos-xl#altLabel";
inline constexpr std::string_view hiddenLabel = "http://www.w3.org/2008/05/skos-xl#hiddenLabel";
inline constexpr std::string_view labelRelation = "http://www.w3.org/2008/05/skos-xl#labelRelation";
}  // namespace skosxl

namespace rdf {
inline constexpr std::string_view type = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";
inline constexpr std::string_view List = "http://www.w3.org/1999/02/22-rdf-syntax-ns#List";
inline constexpr std::string_view first = "http://www.w3.org/1999/02/22-rdf-syntax-ns#first";
inline constexpr std::string_view rest = "http://www.w3.org/1999/02/22-rdf-syntax-ns#rest";
inline constexpr std::string_view nil = "http://www.w3.org/1999/02/22-rdf-syntax-ns#nil";
}  // namespace rdf

namespace rdfs {
inline constexpr std::string_view label = "http://www.w3.org/2000/01/rdf-schema#label";
}  // namespace rdfs

namespace owl {
inline constexpr std::string_view Class = "http://www.w3.org/2002/07/owl#Class";
inline constexpr std::string_view ObjectProperty = "http://www.w3.org/2002/07/owl#ObjectProperty";
inline constexpr std::string_view DatatypeProperty = "http://www.w3.org/2002/07/owl#DatatypeProperty";
inline constexpr std::string_view AnnotationProperty = "http://www.w3.org/2002/07/owl#AnnotationProperty";
}  // namespace owl

namespace xsd {
inline constexpr std::string_view string = "http://www.w3.org/2001/XMLSchema#string";
}  // namespace xsd

/// `skos:prefLabel` for a known namespace, otherwise the IRI unchanged.
std::string compact(std::string_view iri);

}  // namespace vocab

enum class AxiomKind {
    SubPropertyOf,
    SubClassOf,
    Domain,
    Range,
    InverseOf,
    Symmetric,
    Transitive,
    Functional,
    DisjointClasses,
    DisjointProperties,
    PropertyChain,
    CardinalityExactlyOne,
    ListMemberRule,
    UniquePrefLabelPerLanguage,
    PlainLiteralRange,
    InstanceOfMetaclass,
};

std::string_view to_string(AxiomKind kind);

/// Role an IRI plays inside an axiom.
///
/// Sub-property and sub-class axioms list `Sub` arguments followed by the
/// `Super` they all specialise, possibly repeated (S22 is sub, super, sub,
/// super). Disjointness axioms either list several `Property`/`Class`
/// arguments that are pairwise disjoint, or one followed by `DisjointWith`
/// arguments. A range whose classes are `UnionMember` is a union.
enum class Role {
    Sub,
    Super,
    Property,
    Inverse,
    Class,
    DisjointWith,
    UnionMember,
    Chain,
    ListProperty,
    MemberProperty,
    Instance,
    Metaclass,
};

std::string_view to_string(Role role);

struct AxiomArgument {
    Role role;
    std::string_view iri;
};

struct Axiom {
    int number = 0;  // 1..62
    int table = 0;   // 1 definition axioms, 2 integrity conditions, 3 SKOS-XL
    AxiomKind kind{};
    std::vector<AxiomArgument> arguments;
    bool in_rdf_schema = false;
    bool in_owl_dl_prune = false;
    bool is_integrity_condition = false;

    /// "S25"
    std::string id() const { return "S" + std::to_string(number); }

    std::vector<std::string_view> iris_with(Role role) const;
};

enum class Profile { Reference, RdfSchema, OwlDlPrune };

std::string_view to_string(Profile profile);
std::optional<Profile> profile_from_string(std::string_view name);

/// The 62 axioms S1..S62 in id order.
std::span<const Axiom> axiom_table();

const Axiom& axiom(int number);

/// Parses "S25" (case-sensitive); nullopt for anything outside S1..S62.
std::optional<int> parse_axiom_id(std::string_view id);

std::vector<Axiom> axioms_for(Profile profile);

/// `{"id", "table", "kind", "arguments":[{"role","iri"}], "in_rdf_schema",
/// "in_owl_dl_prune", "is_integrity_condition"}` per axiom, as a JSON array.
std::string axioms_to_json(std::span<const Axiom> axioms);

namespace vocab {
/// `root` followed by every property or class below it through the catalog's
/// sub-property and sub-class axioms (all profiles).
std::vector<std::string_view> descendants_of(std::string_view root);
}  // namespace vocab

}  // namespace skosforge
