#include <thread>

#include <gtest/gtest.h>
#include <httplib.h>

#include <skosbridge/http_server.hpp>
#include <skosbridge/ldservice.hpp>
#include <skosbridge/manifest.hpp>

#include "support.hpp"

using namespace skosbridge;

namespace {

const std::string kInfoSciPath = "concept/10039068";

class LdServiceTest : public ::testing::Test {
protected:
    void SetUp() override
    {
        auto m = load_manifest(testsupport::fixture("manifest.json"));
        store_ = build_store(m).store;
        service_ = std::make_unique<LinkedDataService>(store_, route_config_from(m));
    }

    Response get(const std::string& path, std::vector<std::pair<std::string, std::string>> headers = {},
                 std::map<std::string, std::string> query = {}, std::string method = "GET") const
    {
        Request r;
        r.method = std::move(method);
        r.path = path;
        r.headers = std::move(headers);
        r.query = std::move(query);
        return service_->handle(r);
    }

    std::shared_ptr<const MultiStore> store_;
    std::unique_ptr<LinkedDataService> service_;
};

} // namespace

TEST_F(LdServiceTest, ResourceRedirectsPerAcceptType)
{
    struct Case {
        const char* accept;
        const char* location;
    } cases[] = {
        {"text/html", "/thesoz/page/concept/10039068"},
        {"text/turtle", "/thesoz/data/concept/10039068"},
        {"application/n-triples", "/thesoz/data/concept/10039068"},
        {"application/rdf+xml, text/turtle;q=0.5", "/thesoz/data/concept/10039068"},
        {"*/*", "/thesoz/page/concept/10039068"},
    };
    for (auto& c : cases) {
        auto r = get("/thesoz/resource/" + kInfoSciPath, {{"Accept", c.accept}});
        EXPECT_EQ(r.status, 303) << c.accept;
        EXPECT_EQ(r.header("Location"), c.location) << c.accept;
        EXPECT_EQ(r.header("Vary"), "Accept");
    }
    auto none = get("/thesoz/resource/" + kInfoSciPath);
    EXPECT_EQ(none.header("Location"), "/thesoz/page/concept/10039068");
}

TEST_F(LdServiceTest, ResourceNotAcceptable)
{
    EXPECT_EQ(get("/thesoz/resource/" + kInfoSciPath, {{"Accept", "image/png"}}).status, 406);
    EXPECT_EQ(get("/thesoz/resource/" + kInfoSciPath, {{"Accept", "application/rdf+xml"}}).status, 406);
}

TEST_F(LdServiceTest, UnknownResourcesAndRoutesAre404)
{
    EXPECT_EQ(get("/thesoz/resource/concept/0").status, 404);
    EXPECT_EQ(get("/thesoz/page/concept/0").status, 404);
    EXPECT_EQ(get("/thesoz/data/concept/0").status, 404);
    EXPECT_EQ(get("/nosuch/page/x").status, 404);
    EXPECT_EQ(get("/nosuch/query").status, 404);
}

TEST_F(LdServiceTest, OtherMethodsAre405)
{
    for (auto method : {"POST", "PUT", "DELETE", "PATCH", "OPTIONS"}) {
        auto r = get("/thesoz/page/" + kInfoSciPath, {}, {}, method);
        EXPECT_EQ(r.status, 405) << method;
        EXPECT_EQ(r.header("Allow"), "GET, HEAD");
    }
}

TEST_F(LdServiceTest, HeadHasHeadersButNoBody)
{
    auto head = get("/thesoz/page/" + kInfoSciPath, {}, {}, "HEAD");
    EXPECT_EQ(head.status, 200);
    EXPECT_TRUE(head.body.empty());
    EXPECT_EQ(head.header("Content-Type"), "text/html; charset=utf-8");
}

TEST_F(LdServiceTest, PageShowsPartnerLabelAndLink)
{
    auto r = get("/thesoz/page/" + kInfoSciPath);
    ASSERT_EQ(r.status, 200);
    EXPECT_EQ(r.header("Content-Type"), "text/html; charset=utf-8");
    EXPECT_NE(r.body.find("<h1>Informationswissenschaft</h1>"), std::string::npos);
    EXPECT_NE(r.body.find("href=\"/stw/page/descriptor/11971-0\""), std::string::npos);
    EXPECT_NE(r.body.find(">Informationswissenschaft</a>"), std::string::npos);
    EXPECT_NE(r.body.find("skos:exactMatch"), std::string::npos);
}

TEST_F(LdServiceTest, CombinationPageListsMembers)
{
    auto r = get("/thesoz/page/concept/10040552");
    ASSERT_EQ(r.status, 200);
    EXPECT_NE(r.body.find("class=\"combination\""), std::string::npos);
    EXPECT_NE(r.body.find("/stw/page/descriptor/10079-4"), std::string::npos);
    EXPECT_NE(r.body.find("/stw/page/descriptor/12034-6"), std::string::npos);
}

TEST_F(LdServiceTest, LanguagePrecedence)
{
    auto heading = [&](std::vector<std::pair<std::string, std::string>> headers, std::map<std::string, std::string> q) {
        auto body = get("/thesoz/page/" + kInfoSciPath, std::move(headers), std::move(q)).body;
        auto start = body.find("<h1>") + 4;
        return body.substr(start, body.find("</h1>") - start);
    };
    EXPECT_EQ(heading({}, {}), "Informationswissenschaft");
    EXPECT_EQ(heading({{"Accept-Language", "en"}}, {}), "information science");
    EXPECT_EQ(heading({{"Accept-Language", "en"}}, {{"lang", "de"}}), "Informationswissenschaft");
    EXPECT_EQ(heading({}, {{"lang", "en"}}), "information science");
}

TEST_F(LdServiceTest, DataViewsCarryMappingTriples)
{
    const std::string single_match = "<http://lod.gesis.org/thesoz/concept/10039068> "
                                    "<http://www.w3.org/2004/02/skos/core#exactMatch> "
                                    "<http://zbw.eu/stw/descriptor/11971-0> .\n";
    auto nt = get("/thesoz/data/" + kInfoSciPath, {{"Accept", "application/n-triples"}});
    ASSERT_EQ(nt.status, 200);
    EXPECT_EQ(nt.header("Content-Type"), "application/n-triples; charset=utf-8");
    EXPECT_NE(nt.body.find(single_match), std::string::npos);
    auto parsed = parse_ntriples(nt.body);
    EXPECT_TRUE(parsed.errors.empty());

    auto ttl = get("/thesoz/data/" + kInfoSciPath);
    EXPECT_EQ(ttl.header("Content-Type"), "text/turtle; charset=utf-8");
    EXPECT_NE(ttl.body.find("skos:exactMatch"), std::string::npos);

    EXPECT_EQ(get("/thesoz/data/" + kInfoSciPath, {{"Accept", "text/html"}}).status, 406);

    // the partner's data view includes the inbound triple
    auto partner = get("/stw/data/descriptor/11971-0", {{"Accept", "application/n-triples"}});
    EXPECT_NE(partner.body.find(single_match), std::string::npos);
}

TEST_F(LdServiceTest, QueryEndpoint)
{
    auto r = get("/query", {}, {{"s", "thesoz:10039068"}, {"p", "skos:exactMatch"}});
    ASSERT_EQ(r.status, 200);
    EXPECT_EQ(r.header("Content-Type"), "application/n-triples; charset=utf-8");
    EXPECT_EQ(r.body, "<http://lod.gesis.org/thesoz/concept/10039068> <http://www.w3.org/2004/02/skos/core#exactMatch> "
                      "<http://zbw.eu/stw/descriptor/11971-0> .\n");
    EXPECT_FALSE(r.header("Truncated").has_value());

    auto lit = get("/query", {}, {{"o", "\"Migration\"@de"}});
    EXPECT_EQ(parse_ntriples(lit.body).graph.size(), 2u);

    EXPECT_EQ(get("/query", {}, {{"p", "\"x\""}}).status, 400);
    EXPECT_EQ(get("/query", {}, {{"s", "not an iri"}}).status, 400);
    EXPECT_TRUE(get("/stw/query", {}, {{"s", "thesoz:10039068"}}).body.empty());
}

TEST_F(LdServiceTest, QueryTruncationHeader)
{
    auto m = load_manifest(testsupport::fixture("manifest.json"));
    auto cfg = route_config_from(m);
    cfg.result_limit = 3;
    LinkedDataService small(store_, cfg);
    Request req;
    req.path = "/query";
    auto r = small.handle(req);
    EXPECT_EQ(r.header("Truncated"), "true");
    EXPECT_EQ(parse_ntriples(r.body).graph.size(), 3u);
}

TEST_F(LdServiceTest, IndexListsRegistrations)
{
    auto r = get("/");
    ASSERT_EQ(r.status, 200);
    EXPECT_NE(r.body.find("TheSoz (mini)"), std::string::npos);
    EXPECT_NE(r.body.find("thesoz-stw: 14 triples"), std::string::npos);
}

TEST(RouteConfig, RejectsBadTemplates)
{
    RouteConfig cfg;
    cfg.page_template = cfg.resource_template;
    EXPECT_THROW(cfg.validate(), std::invalid_argument);
    cfg = RouteConfig();
    cfg.data_template = "/data/";
    EXPECT_THROW(cfg.validate(), std::invalid_argument);
    cfg = RouteConfig();
    cfg.data_template = "{id}/data/";
    EXPECT_THROW(cfg.validate(), std::invalid_argument);
}

TEST_F(LdServiceTest, ExternalBaseUrlPrefixesLocations)
{
    auto m = load_manifest(testsupport::fixture("manifest.json"));
    auto cfg = route_config_from(m);
    cfg.external_base_url = "https://thesauri.example.org";
    LinkedDataService svc(store_, cfg);
    Request req;
    req.path = "/stw/resource/descriptor/11971-0";
    req.headers = {{"Accept", "text/turtle"}};
    EXPECT_EQ(svc.handle(req).header("Location"), "https://thesauri.example.org/stw/data/descriptor/11971-0");
}

// The same routes over a real socket.
TEST_F(LdServiceTest, OverHttp)
{
    HttpFrontend front(*service_);
    int port = front.bind("127.0.0.1", 0);
    ASSERT_GT(port, 0);
    std::thread server([&] { front.run(); });
    front.wait_until_ready();

    httplib::Client client("127.0.0.1", port);
    client.set_follow_location(false);
    auto res = client.Get("/thesoz/resource/" + kInfoSciPath, {{"Accept", "text/turtle"}});
    ASSERT_TRUE(res);
    EXPECT_EQ(res->status, 303);
    EXPECT_EQ(res->get_header_value("Location"), "/thesoz/data/concept/10039068");
    EXPECT_EQ(res->get_header_value("Vary"), "Accept");

    auto page = client.Get("/thesoz/page/" + kInfoSciPath);
    ASSERT_TRUE(page);
    EXPECT_EQ(page->status, 200);
    EXPECT_EQ(page->get_header_value("Content-Type"), "text/html; charset=utf-8");

    auto head = client.Head("/thesoz/page/" + kInfoSciPath);
    ASSERT_TRUE(head);
    EXPECT_EQ(head->status, 200);
    EXPECT_TRUE(head->body.empty());

    auto post = client.Post("/thesoz/page/" + kInfoSciPath, "", "text/plain");
    ASSERT_TRUE(post);
    EXPECT_EQ(post->status, 405);

    auto query = client.Get("/query?s=thesoz%3A10039068&p=skos%3AexactMatch");
    ASSERT_TRUE(query);
    EXPECT_EQ(query->status, 200);
    EXPECT_EQ(parse_ntriples(query->body).graph.size(), 1u);

    front.stop();
    server.join();
}
