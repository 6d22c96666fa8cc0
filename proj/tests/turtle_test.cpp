#include <gtest/gtest.h>

#include <skosbridge/turtle.hpp>

#include "support.hpp"

using namespace skosbridge;

TEST(Turtle, EmptyGraphIsEmptyOutput)
{
    EXPECT_EQ(serialize_turtle(Graph(), vocab::builtin_prefixes()), "");
}

TEST(Turtle, GroupsBySubjectAndPredicate)
{
    Graph g;
    Iri c("http://lod.gesis.org/thesoz/concept/10039068");
    g.insert(Triple(c, vocab::rdf_type, vocab::skos_Concept));
    g.insert(Triple(c, vocab::skos_prefLabel, Literal::lang_string("Informationswissenschaft", "de")));
    g.insert(Triple(c, vocab::skos_prefLabel, Literal::lang_string("information science", "en")));
    g.insert(Triple(c, vocab::skos_exactMatch, Iri("http://zbw.eu/stw/descriptor/11971-0")));
    PrefixMap prefixes{{"thesoz", "http://lod.gesis.org/thesoz/concept/"},
                       {"stw", "http://zbw.eu/stw/descriptor/"},
                       {"skos", "http://www.w3.org/2004/02/skos/core#"},
                       {"unused", "http://unused.example/"}};
    EXPECT_EQ(serialize_turtle(g, prefixes), "@prefix thesoz: <http://lod.gesis.org/thesoz/concept/> .\n"
                                             "@prefix stw: <http://zbw.eu/stw/descriptor/> .\n"
                                             "@prefix skos: <http://www.w3.org/2004/02/skos/core#> .\n"
                                             "\n"
                                             "thesoz:10039068 a skos:Concept ;\n"
                                             "    skos:exactMatch stw:11971-0 ;\n"
                                             "    skos:prefLabel \"Informationswissenschaft\"@de, "
                                             "\"information science\"@en .\n");
}

TEST(Turtle, LongestNamespaceWins)
{
    Graph g;
    g.insert(Triple(Iri("http://ex.org/a/b/c"), Iri("http://ex.org/p"), Literal("x")));
    PrefixMap prefixes{{"short", "http://ex.org/"}, {"long", "http://ex.org/a/b/"}};
    EXPECT_EQ(serialize_turtle(g, prefixes), "@prefix short: <http://ex.org/> .\n"
                                             "@prefix long: <http://ex.org/a/b/> .\n\n"
                                             "long:c short:p \"x\" .\n");
}

TEST(Turtle, UnsafeLocalNamesStayFullIris)
{
    Graph g;
    g.insert(Triple(Iri("http://ex.org/a/b"), Iri("http://ex.org/end."), Literal("x")));
    PrefixMap prefixes{{"ex", "http://ex.org/"}};
    EXPECT_EQ(serialize_turtle(g, prefixes), "<http://ex.org/a/b> <http://ex.org/end.> \"x\" .\n");
}

TEST(Turtle, SimpleLocalNames)
{
    EXPECT_TRUE(detail::is_simple_local_name("11971-0"));
    EXPECT_TRUE(detail::is_simple_local_name("a.b_c"));
    EXPECT_TRUE(detail::is_simple_local_name(""));
    EXPECT_FALSE(detail::is_simple_local_name("a/b"));
    EXPECT_FALSE(detail::is_simple_local_name("-a"));
    EXPECT_FALSE(detail::is_simple_local_name("a."));
    EXPECT_FALSE(detail::is_simple_local_name("a#b"));
    EXPECT_FALSE(detail::is_simple_local_name("\xc3\xa9"));
}

TEST(Turtle, DatatypesAndBlankNodes)
{
    Graph g;
    g.insert(Triple(BlankNode("b1"), Iri("http://ex.org/p"),
                    Literal::typed("5", Iri("http://www.w3.org/2001/XMLSchema#integer"))));
    PrefixMap prefixes{{"xsd", "http://www.w3.org/2001/XMLSchema#"}, {"ex", "http://ex.org/"}};
    EXPECT_EQ(serialize_turtle(g, prefixes), "@prefix xsd: <http://www.w3.org/2001/XMLSchema#> .\n"
                                             "@prefix ex: <http://ex.org/> .\n\n"
                                             "_:b1 ex:p \"5\"^^xsd:integer .\n");
}
