#include <algorithm>
#include <set>

#include <gtest/gtest.h>

#include "support.hpp"

using namespace skosbridge;
using testsupport::RandomRdf;

TEST(Iri, AcceptsAbsoluteIris)
{
    EXPECT_TRUE(is_valid_iri("http://zbw.eu/stw/descriptor/11971-0"));
    EXPECT_TRUE(is_valid_iri("urn:isbn:0451450523"));
    EXPECT_TRUE(is_valid_iri("tag:a.b+c-d:x"));
}

TEST(Iri, RejectsRelativeOrMalformed)
{
    EXPECT_FALSE(is_valid_iri(""));
    EXPECT_FALSE(is_valid_iri("concept/1"));
    EXPECT_FALSE(is_valid_iri("/a:b"));
    EXPECT_FALSE(is_valid_iri("1http://x"));
    EXPECT_FALSE(is_valid_iri("http://a b"));
    EXPECT_FALSE(is_valid_iri("http://a<b"));
    EXPECT_FALSE(is_valid_iri("http://a\"b"));
    EXPECT_THROW(Iri("no scheme"), std::invalid_argument);
    EXPECT_FALSE(Iri::parse("x y:z").has_value());
}

TEST(Literal, LanguageTagsAreLowercasedAndValidated)
{
    auto lit = Literal::lang_string("x", "EN-GB");
    EXPECT_EQ(lit.lang(), "en-gb");
    EXPECT_THROW(Literal::lang_string("x", "e"), std::invalid_argument);
    EXPECT_THROW(Literal::lang_string("x", "english"), std::invalid_argument);
    EXPECT_THROW(Literal::lang_string("x", "en-toolongsubtag"), std::invalid_argument);
    EXPECT_THROW(Literal::lang_string("x", "en-"), std::invalid_argument);
    EXPECT_NO_THROW(Literal::lang_string("x", "zh-hant-tw"));
}

TEST(BlankNode, LabelsAreAlphanumeric)
{
    EXPECT_NO_THROW(BlankNode("b0"));
    EXPECT_THROW(BlankNode(""), std::invalid_argument);
    EXPECT_THROW(BlankNode("a-b"), std::invalid_argument);
}

TEST(Term, KindsOrderIriThenBlankThenLiteral)
{
    Term i = Iri("http://z/");
    Term b = BlankNode("a");
    Term l = Literal("a");
    EXPECT_LT(i, b);
    EXPECT_LT(b, l);
    EXPECT_LT(i, l);
    EXPECT_LT(Term(Iri("http://a/")), Term(Iri("http://b/")));
}

TEST(Term, LiteralsDifferingOnlyInTagOrDatatypeAreDistinct)
{
    Term plain = Literal("x");
    Term tagged = Literal::lang_string("x", "de");
    Term typed = Literal::typed("x", Iri("http://www.w3.org/2001/XMLSchema#string"));
    EXPECT_NE(plain, tagged);
    EXPECT_NE(plain, typed);
    EXPECT_NE(tagged, typed);
    EXPECT_LT(plain, tagged);
}

TEST(Term, OrderingIsByteWise)
{
    // 'Z' (0x5A) sorts before 'a' (0x61) and both before any multi-byte lead.
    EXPECT_LT(Term(Literal("Z")), Term(Literal("a")));
    EXPECT_LT(Term(Literal("z")), Term(Literal("\xc3\xa9")));
}

TEST(Graph, InsertReportsNovelty)
{
    Graph g;
    Triple t(Iri("http://a/"), Iri("http://p/"), Literal("o"));
    EXPECT_TRUE(g.insert(t));
    EXPECT_FALSE(g.insert(t));
    EXPECT_EQ(g.size(), 1u);
    EXPECT_TRUE(g.contains(t));
}

TEST(Graph, CopiesKeepWorkingIndexes)
{
    Graph g;
    g.insert(Triple(Iri("http://a/"), Iri("http://p/"), Literal("o")));
    Graph copy = g;
    g = Graph();
    EXPECT_EQ(copy.match(Term(Iri("http://a/")), std::nullopt, std::nullopt).size(), 1u);
    Graph assigned;
    assigned = copy;
    copy.insert(Triple(Iri("http://b/"), Iri("http://p/"), Literal("o")));
    EXPECT_EQ(assigned.match(std::nullopt, Iri("http://p/"), std::nullopt).size(), 1u);
    EXPECT_EQ(copy.match(std::nullopt, Iri("http://p/"), std::nullopt).size(), 2u);
}

TEST(Graph, ObjectsAndSubjects)
{
    Graph g;
    Iri a("http://a/"), b("http://b/"), p("http://p/");
    g.insert(Triple(a, p, b));
    g.insert(Triple(a, p, Literal("x")));
    g.insert(Triple(b, p, b));
    EXPECT_EQ(g.objects(a, p).size(), 2u);
    EXPECT_EQ(g.subjects(p, b), (std::vector<Term>{a, b}));
    EXPECT_TRUE(g.has_subject(b));
    EXPECT_FALSE(g.has_subject(Iri("http://c/")));
}

// Property: insertion with duplicates agrees with a naive std::set oracle.
TEST(GraphProperty, InsertMatchesSetOracle)
{
    RandomRdf gen(17);
    for (int round = 0; round < 20; ++round) {
        Graph g;
        std::set<Triple> oracle;
        std::vector<Triple> pool;
        for (int i = 0; i < 200; ++i)
            pool.push_back(Triple(Iri("http://s/" + std::to_string(gen.uniform(10))),
                                  Iri("http://p/" + std::to_string(gen.uniform(3))),
                                  Term(Literal(std::to_string(gen.uniform(10))))));
        for (auto& t : pool) {
            bool fresh = oracle.insert(t).second;
            EXPECT_EQ(g.insert(t), fresh);
        }
        EXPECT_EQ(g.size(), oracle.size());
        EXPECT_TRUE(std::equal(g.begin(), g.end(), oracle.begin(), oracle.end()));
    }
}

namespace {

std::vector<Triple> brute_force(const std::vector<Triple>& all, const std::optional<Term>& s,
                                const std::optional<Iri>& p, const std::optional<Term>& o)
{
    std::vector<Triple> out;
    for (auto& t : all)
        if ((!s || t.subject() == *s) && (!p || t.predicate() == *p) && (!o || t.object() == *o))
            out.push_back(t);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

// Property: every one of the 8 bound/unbound pattern shapes agrees with a
// linear scan, on graphs up to 10 000 triples with heavy term reuse.
TEST(GraphProperty, MatchEqualsBruteForce)
{
    RandomRdf gen(4242);
    for (std::size_t size : {0u, 1u, 50u, 1000u, 10000u}) {
        Graph g;
        std::vector<Triple> all;
        for (std::size_t i = 0; i < size; ++i) {
            Term s = gen.chance(0.9) ? Term(gen.iri(40)) : Term(BlankNode("b" + std::to_string(gen.uniform(5))));
            Term o = gen.chance(0.5) ? Term(gen.iri(40)) : Term(Literal(std::to_string(gen.uniform(30))));
            Triple t(s, gen.iri(6), o);
            if (g.insert(t))
                all.push_back(t);
        }
        for (int q = 0; q < 64; ++q) {
            std::optional<Term> s, o;
            std::optional<Iri> p;
            const Triple* seed = all.empty() ? nullptr : &all[gen.uniform(all.size())];
            bool miss = gen.chance(0.1);
            if (q & 1)
                s = seed && !miss ? seed->subject() : Term(gen.iri(50));
            if (q & 2)
                p = seed && !miss ? seed->predicate() : gen.iri(7);
            if (q & 4)
                o = seed && !miss ? seed->object() : Term(Literal("none"));
            ASSERT_EQ(g.match(s, p, o), brute_force(all, s, p, o)) << "size " << size << " shape " << (q & 7);
        }
    }
}

TEST(PrefixMap, ExpandsAndRejectsDuplicates)
{
    PrefixMap m{{"ex", "http://example.org/"}};
    EXPECT_EQ(m.expand("ex:a/b")->str(), "http://example.org/a/b");
    EXPECT_FALSE(m.expand("other:a").has_value());
    EXPECT_FALSE(m.expand("noColon").has_value());
    EXPECT_THROW(m.add("ex", Iri("http://other/")), std::invalid_argument);
    EXPECT_FALSE(m.add_if_absent("ex", Iri("http://other/")));
    EXPECT_EQ(m.find("ex")->str(), "http://example.org/");
}
