#pragma once

#include <string>
#include <string_view>

#include "rdf.hpp"

namespace skosbridge::vocab {

inline constexpr std::string_view kRdf = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr std::string_view kRdfs = "http://www.w3.org/2000/01/rdf-schema#";
inline constexpr std::string_view kOwl = "http://www.w3.org/2002/07/owl#";
inline constexpr std::string_view kXsd = "http://www.w3.org/2001/XMLSchema#";
inline constexpr std::string_view kSkos = "http://www.w3.org/2004/02/skos/core#";
inline constexpr std::string_view kSkosXl = "http://www.w3.org/2008/05/skos-xl#";
inline constexpr std::string_view kDct = "http://purl.org/dc/terms/";

/// Default namespace for the combination-mapping extension vocabulary.
inline constexpr std::string_view kDefaultExtension = "http://example.org/skos-ext#";

inline Iri in(std::string_view ns, std::string_view local) { return Iri(std::string(ns) + std::string(local)); }

inline const Iri rdf_type = in(kRdf, "type");
inline const Iri rdfs_label = in(kRdfs, "label");
inline const Iri dct_title = in(kDct, "title");

inline const Iri skos_Concept = in(kSkos, "Concept");
inline const Iri skos_ConceptScheme = in(kSkos, "ConceptScheme");
inline const Iri skos_inScheme = in(kSkos, "inScheme");
inline const Iri skos_topConceptOf = in(kSkos, "topConceptOf");
inline const Iri skos_hasTopConcept = in(kSkos, "hasTopConcept");
inline const Iri skos_prefLabel = in(kSkos, "prefLabel");
inline const Iri skos_altLabel = in(kSkos, "altLabel");
inline const Iri skos_hiddenLabel = in(kSkos, "hiddenLabel");
inline const Iri skos_broader = in(kSkos, "broader");
inline const Iri skos_narrower = in(kSkos, "narrower");
inline const Iri skos_related = in(kSkos, "related");
inline const Iri skos_mappingRelation = in(kSkos, "mappingRelation");
inline const Iri skos_exactMatch = in(kSkos, "exactMatch");
inline const Iri skos_closeMatch = in(kSkos, "closeMatch");
inline const Iri skos_broadMatch = in(kSkos, "broadMatch");
inline const Iri skos_narrowMatch = in(kSkos, "narrowMatch");
inline const Iri skos_relatedMatch = in(kSkos, "relatedMatch");

inline const Iri skosxl_Label = in(kSkosXl, "Label");
inline const Iri skosxl_prefLabel = in(kSkosXl, "prefLabel");
inline const Iri skosxl_altLabel = in(kSkosXl, "altLabel");
inline const Iri skosxl_hiddenLabel = in(kSkosXl, "hiddenLabel");
inline const Iri skosxl_literalForm = in(kSkosXl, "literalForm");

inline bool is_skos_mapping_property(const Iri& p)
{
    return p == skos_exactMatch || p == skos_closeMatch || p == skos_broadMatch || p == skos_narrowMatch ||
           p == skos_relatedMatch || p == skos_mappingRelation;
}

/// The combination-mapping extension, rooted at a configurable namespace.
struct Extension {
    Iri ns;
    Iri matches_combination;
    Iri member;
    Iri concept_combination;

    explicit Extension(const Iri& namespace_iri)
        : ns(namespace_iri), matches_combination(in(ns.str(), "matchesCombination")),
          member(in(ns.str(), "member")), concept_combination(in(ns.str(), "ConceptCombination"))
    {
    }

    Extension() : Extension(Iri(std::string(kDefaultExtension))) {}
};

/// Built-in prefixes used for CURIE expansion and Turtle output.
inline PrefixMap builtin_prefixes()
{
    PrefixMap map;
    map.add("skos", Iri(std::string(kSkos)));
    map.add("skosxl", Iri(std::string(kSkosXl)));
    map.add("rdf", Iri(std::string(kRdf)));
    map.add("rdfs", Iri(std::string(kRdfs)));
    map.add("owl", Iri(std::string(kOwl)));
    map.add("dct", Iri(std::string(kDct)));
    return map;
}

} // namespace skosbridge::vocab
