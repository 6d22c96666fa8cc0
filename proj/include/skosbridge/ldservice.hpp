#pragma once

// Linked-data frontend over a sealed MultiStore.
//
// URL layout per registration (templates are configurable):
//   /{id}/resource/<rest>  303 to page or data view, chosen by Accept
//   /{id}/page/<rest>      HTML view that combines all thesauri
//   /{id}/data/<rest>      Turtle or N-Triples
// where the described IRI is the registration's base IRI followed by <rest>.
// Handlers are transport-independent; http_server.hpp binds them to sockets.

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "conneg.hpp"
#include "manifest.hpp"
#include "multistore.hpp"
#include "ntriples.hpp"
#include "rdf.hpp"
#include "skos.hpp"
#include "turtle.hpp"
#include "vocab.hpp"

namespace skosbridge {

inline constexpr std::string_view kHtml = "text/html";
inline constexpr std::string_view kTurtle = "text/turtle";
inline constexpr std::string_view kNTriples = "application/n-triples";
inline constexpr std::string_view kRdfXml = "application/rdf+xml";

struct RouteConfig {
    std::string listen_host = "127.0.0.1";
    int listen_port = 8080;
    std::string external_base_url;
    std::map<std::string, std::string> segments; // registration id -> path segment; default is the id
    std::string resource_template = "/{id}/resource/";
    std::string page_template = "/{id}/page/";
    std::string data_template = "/{id}/data/";
    std::size_t result_limit = 10000;

    /// Throws std::invalid_argument unless each template holds exactly one
    /// `{id}` and the three are pairwise distinct.
    void validate() const
    {
        for (auto* t : {&resource_template, &page_template, &data_template}) {
            auto first = t->find("{id}");
            if (first == std::string::npos || t->find("{id}", first + 1) != std::string::npos)
                throw std::invalid_argument("path template '" + *t + "' must contain exactly one {id}");
            if (t->empty() || t->front() != '/')
                throw std::invalid_argument("path template '" + *t + "' must start with '/'");
        }
        if (resource_template == page_template || resource_template == data_template || page_template == data_template)
            throw std::invalid_argument("resource, page and data templates must differ");
    }

    std::string segment_for(const std::string& id) const
    {
        auto it = segments.find(id);
        return it == segments.end() ? id : it->second;
    }
};

struct Request {
    std::string method = "GET";
    std::string path; // percent-decoded
    std::map<std::string, std::string> query;
    std::vector<std::pair<std::string, std::string>> headers;

    std::optional<std::string> header(std::string_view name) const
    {
        for (auto& [k, v] : headers)
            if (detail::ascii_lowercase(k) == detail::ascii_lowercase(name))
                return v;
        return std::nullopt;
    }
};

struct Response {
    int status = 200;
    std::vector<std::pair<std::string, std::string>> headers;
    std::string body;

    std::optional<std::string> header(std::string_view name) const
    {
        for (auto& [k, v] : headers)
            if (detail::ascii_lowercase(k) == detail::ascii_lowercase(name))
                return v;
        return std::nullopt;
    }

    void set_header(std::string name, std::string value)
    {
        for (auto& [k, v] : headers)
            if (detail::ascii_lowercase(k) == detail::ascii_lowercase(name)) {
                v = std::move(value);
                return;
            }
        headers.emplace_back(std::move(name), std::move(value));
    }
};

/// Everything the service says about one IRI.
struct Description {
    Iri focus;
    std::vector<Triple> outbound;         // subject == focus
    std::vector<Triple> inbound_triples;  // mapping triples that point at focus
    std::vector<MappingLink> outbound_mappings;
    std::vector<MappingLink> inbound_mappings;
    std::map<Iri, Literal> neighbor_labels;

    bool empty() const { return outbound.empty() && inbound_triples.empty(); }

    Graph graph() const
    {
        Graph g;
        for (auto& t : outbound)
            g.insert(t);
        for (auto& t : inbound_triples)
            g.insert(t);
        return g;
    }
};

/// Gathers the focus IRI's own triples (owning thesaurus and all mapping
/// graphs), the mappings that target it, and the best label of every IRI it
/// links to, whichever thesaurus that IRI lives in.
inline Description describe(const MultiStore& store, const Iri& iri, const std::vector<std::string>& lang_pref)
{
    Description d{iri, {}, {}, {}, {}, {}};
    Term self(iri);
    Graph outbound;
    if (const auto* reg = store.owner_of(iri))
        for (auto& t : reg->graph->match(self, std::nullopt, std::nullopt))
            outbound.insert(t);
    Graph inbound;
    const auto& ext = store.extension();
    for (auto& m : store.mapping_graphs()) {
        for (auto& t : m.graph->match(self, std::nullopt, std::nullopt))
            outbound.insert(t);
        for (auto& t : m.graph->match(std::nullopt, std::nullopt, self)) {
            if (vocab::is_skos_mapping_property(t.predicate())) {
                inbound.insert(t);
            } else if (t.predicate() == ext.member) {
                inbound.insert(t);
                for (auto& s : m.graph->match(std::nullopt, ext.matches_combination, t.subject()))
                    inbound.insert(s);
            }
        }
    }
    d.outbound.assign(outbound.begin(), outbound.end());
    d.inbound_triples.assign(inbound.begin(), inbound.end());

    for (auto& link : store.mappings_for(iri, lang_pref))
        (link.direction == Direction::Outbound ? d.outbound_mappings : d.inbound_mappings).push_back(link);

    auto add_label = [&](const Iri& other) {
        if (d.neighbor_labels.count(other))
            return;
        if (auto label = store.label_for(other, lang_pref))
            d.neighbor_labels.emplace(other, *label);
    };
    for (auto& t : d.outbound)
        if (auto* o = t.object().as_iri())
            add_label(*o);
    for (auto* links : {&d.outbound_mappings, &d.inbound_mappings})
        for (auto& link : *links)
            for (auto& o : link.others)
                add_label(o);
    return d;
}

namespace detail {

inline std::string html_escape(std::string_view s)
{
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        case '\'': out += "&#39;"; break;
        default: out += c;
        }
    }
    return out;
}

inline std::string percent_encode_path(std::string_view s)
{
    static constexpr char kHex[] = "0123456789ABCDEF";
    std::string out;
    for (char c : s) {
        auto uc = static_cast<unsigned char>(c);
        if (is_ascii_alnum(c) || std::string_view("-._~!$&'()*+,;=:@/").find(c) != std::string_view::npos) {
            out += c;
        } else {
            out += '%';
            out += kHex[uc >> 4];
            out += kHex[uc & 0xF];
        }
    }
    return out;
}

inline std::pair<std::string, std::string> split_template(const std::string& tmpl)
{
    auto pos = tmpl.find("{id}");
    return {tmpl.substr(0, pos), tmpl.substr(pos + 4)};
}

} // namespace detail

enum class RouteKind { Resource, Page, Data };

struct RouteMatch {
    RouteKind kind;
    const ThesaurusRegistration* registration;
    std::string rest;
};

class LinkedDataService {
public:
    LinkedDataService(std::shared_ptr<const MultiStore> store, RouteConfig config)
        : store_(std::move(store)), config_(std::move(config))
    {
        config_.validate();
        if (!store_ || !store_->sealed())
            throw std::invalid_argument("LinkedDataService needs a sealed store");
    }

    /// Atomically replaces the store; in-flight requests keep the old one.
    void replace_store(std::shared_ptr<const MultiStore> store)
    {
        if (!store || !store->sealed())
            throw std::invalid_argument("replacement store must be sealed");
        std::lock_guard lock(mutex_);
        store_ = std::move(store);
    }

    std::shared_ptr<const MultiStore> store() const
    {
        std::lock_guard lock(mutex_);
        return store_;
    }

    const RouteConfig& config() const { return config_; }

    Response handle(const Request& req) const
    {
        auto store = this->store();
        if (req.method != "GET" && req.method != "HEAD") {
            Response r = text_response(405, "Method Not Allowed\n");
            r.set_header("Allow", "GET, HEAD");
            return r;
        }
        Response r = dispatch(*store, req);
        if (req.method == "HEAD")
            r.body.clear();
        return r;
    }

    std::optional<RouteMatch> match_route(const MultiStore& store, std::string_view path) const
    {
        for (auto [kind, tmpl] : {std::pair{RouteKind::Resource, &config_.resource_template},
                                  std::pair{RouteKind::Page, &config_.page_template},
                                  std::pair{RouteKind::Data, &config_.data_template}}) {
            auto [prefix, suffix] = detail::split_template(*tmpl);
            for (auto& reg : store.registrations()) {
                std::string head = prefix + config_.segment_for(reg.id) + suffix;
                if (path.substr(0, head.size()) == head)
                    return RouteMatch{kind, &reg, std::string(path.substr(head.size()))};
            }
        }
        return std::nullopt;
    }

    /// Absolute (or host-relative) URL of `iri`'s view, or nullopt when the
    /// IRI lies outside every registered base.
    std::optional<std::string> url_for(const MultiStore& store, RouteKind kind, const Iri& iri) const
    {
        const auto* reg = store.owner_of(iri);
        if (!reg)
            return std::nullopt;
        const std::string& tmpl = kind == RouteKind::Resource ? config_.resource_template
                                  : kind == RouteKind::Page   ? config_.page_template
                                                              : config_.data_template;
        auto [prefix, suffix] = detail::split_template(tmpl);
        return config_.external_base_url + prefix + detail::percent_encode_path(config_.segment_for(reg->id)) +
               suffix + detail::percent_encode_path(iri.str().substr(reg->base_iri.str().size()));
    }

    /// Language preference: `?lang=` first, then Accept-Language, then the
    /// registration default.
    std::vector<std::string> language_preference(const Request& req, const ThesaurusRegistration* reg) const
    {
        std::vector<std::string> prefs;
        if (auto it = req.query.find("lang"); it != req.query.end() && !it->second.empty())
            prefs.push_back(detail::ascii_lowercase(it->second));
        if (auto al = req.header("Accept-Language"))
            for (auto& tag : parse_accept_language(*al))
                prefs.push_back(tag);
        if (reg && !reg->default_lang.empty())
            prefs.push_back(reg->default_lang);
        return prefs;
    }

    Response handle_resource(const MultiStore& store, const Request& req, const RouteMatch& m) const
    {
        auto iri = Iri::parse(m.registration->base_iri.str() + m.rest);
        if (!iri || describe(store, *iri, {}).empty())
            return with_vary(text_response(404, "Not Found\n"), "Accept");

        auto header = req.header("Accept");
        std::vector<std::string> offers{std::string(kHtml), std::string(kTurtle), std::string(kNTriples),
                                        std::string(kRdfXml)};
        auto chosen = negotiate(header ? std::optional<std::string_view>(*header) : std::nullopt, offers);
        RouteKind target = RouteKind::Page;
        if (!chosen) {
            return with_vary(not_acceptable(), "Accept");
        } else if (*chosen == kRdfXml) {
            // served as Turtle or N-Triples, so only if one of them is admitted
            auto ranges = parse_accept(*header);
            if (quality_of(ranges, kTurtle) <= 0.0 && quality_of(ranges, kNTriples) <= 0.0)
                return with_vary(not_acceptable(), "Accept");
            target = RouteKind::Data;
        } else if (*chosen != kHtml) {
            target = RouteKind::Data;
        }
        Response r;
        r.status = 303;
        r.set_header("Location", *url_for(store, target, *iri));
        r.set_header("Content-Type", "text/plain; charset=utf-8");
        r.body = "See Other\n";
        return with_vary(std::move(r), "Accept");
    }

    Response handle_page(const MultiStore& store, const Request& req, const RouteMatch& m) const
    {
        auto iri = Iri::parse(m.registration->base_iri.str() + m.rest);
        auto prefs = language_preference(req, m.registration);
        if (!iri)
            return with_vary(text_response(404, "Not Found\n"), "Accept, Accept-Language");
        auto d = describe(store, *iri, prefs);
        if (d.empty())
            return with_vary(text_response(404, "Not Found\n"), "Accept, Accept-Language");
        Response r;
        r.set_header("Content-Type", "text/html; charset=utf-8");
        r.body = render_page(store, *m.registration, d, prefs);
        return with_vary(std::move(r), "Accept, Accept-Language");
    }

    Response handle_data(const MultiStore& store, const Request& req, const RouteMatch& m) const
    {
        auto iri = Iri::parse(m.registration->base_iri.str() + m.rest);
        if (!iri)
            return with_vary(text_response(404, "Not Found\n"), "Accept");
        auto d = describe(store, *iri, {});
        if (d.empty())
            return with_vary(text_response(404, "Not Found\n"), "Accept");
        auto header = req.header("Accept");
        auto chosen = negotiate(header ? std::optional<std::string_view>(*header) : std::nullopt,
                                {std::string(kTurtle), std::string(kNTriples)});
        if (!chosen)
            return with_vary(not_acceptable(), "Accept");
        Response r;
        Graph g = d.graph();
        if (*chosen == kNTriples) {
            r.set_header("Content-Type", "application/n-triples; charset=utf-8");
            r.body = serialize_ntriples(g);
        } else {
            r.set_header("Content-Type", "text/turtle; charset=utf-8");
            r.body = serialize_turtle(g, prefixes_for(store, m.registration));
        }
        return with_vary(std::move(r), "Accept");
    }

    /// Minimal triple-pattern endpoint. Parameters `s`, `p`, `o` take
    /// N-Triples terms, CURIEs, or bare absolute IRIs.
    Response handle_query(const MultiStore& store, const Request& req, const std::optional<std::string>& scope) const
    {
        auto prefixes = prefixes_for(store, nullptr);
        QueryPattern pattern;
        std::string error;
        auto param = [&](const char* name) -> std::optional<Term> {
            auto it = req.query.find(name);
            if (it == req.query.end() || it->second.empty())
                return std::nullopt;
            auto t = parse_query_term(it->second, prefixes, error);
            if (!t)
                error = std::string("parameter ") + name + ": " + error;
            return t;
        };
        pattern.subject = param("s");
        if (error.empty()) {
            auto p = param("p");
            if (p && !p->is_iri())
                error = "parameter p: predicate must be an IRI";
            else if (p)
                pattern.predicate = p->iri();
        }
        if (error.empty())
            pattern.object = param("o");
        if (!error.empty())
            return text_response(400, "Bad Request: " + error + "\n");

        auto result = store.query(scope, pattern, config_.result_limit);
        if (!result)
            return text_response(404, "Not Found\n");
        Response r;
        r.set_header("Content-Type", "application/n-triples; charset=utf-8");
        if (result->truncated)
            r.set_header("Truncated", "true");
        r.body = serialize_ntriples_range(result->triples);
        return r;
    }

    Response handle_index(const MultiStore& store) const
    {
        std::ostringstream html;
        html << "<!DOCTYPE html>\n<html>\n<head>\n<meta charset=\"utf-8\">\n<title>Thesauri</title>\n</head>\n<body>\n"
             << "<h1>Thesauri</h1>\n<table class=\"registrations\">\n"
             << "<thead><tr><th>Id</th><th>Title</th><th>Base IRI</th><th>Concepts</th><th>Triples</th></tr></thead>\n"
             << "<tbody>\n";
        for (auto& reg : store.registrations()) {
            html << "<tr><td>" << detail::html_escape(reg.id) << "</td><td>" << detail::html_escape(reg.title)
                 << "</td><td><code>" << detail::html_escape(reg.base_iri.str()) << "</code></td><td>"
                 << ConceptIndex(*reg.graph).concepts().size() << "</td><td>" << reg.graph->size() << "</td></tr>\n";
        }
        html << "</tbody>\n</table>\n<h2>Mapping sets</h2>\n<ul>\n";
        for (auto& m : store.mapping_graphs())
            html << "<li>" << detail::html_escape(m.id) << ": " << m.graph->size() << " triples</li>\n";
        html << "</ul>\n<p><a href=\"" << detail::html_escape(config_.external_base_url)
             << "/query\">Triple pattern query</a> (parameters s, p, o)</p>\n</body>\n</html>\n";
        Response r;
        r.set_header("Content-Type", "text/html; charset=utf-8");
        r.body = html.str();
        return r;
    }

    /// N-Triples terms, CURIEs over `prefixes`, or bare absolute IRIs.
    static std::optional<Term> parse_query_term(const std::string& token, const PrefixMap& prefixes,
                                                std::string& error)
    {
        if (!token.empty() && (token.front() == '<' || token.front() == '"' || token.front() == '_'))
            return parse_term(token, &error);
        if (auto iri = prefixes.expand(token))
            return Term(*iri);
        if (auto iri = Iri::parse(token))
            return Term(*iri);
        error = "'" + token + "' is neither an absolute IRI nor an N-Triples term";
        return std::nullopt;
    }

private:
    Response dispatch(const MultiStore& store, const Request& req) const
    {
        if (req.path == "/" || req.path.empty())
            return handle_index(store);
        if (req.path == "/query")
            return handle_query(store, req, std::nullopt);
        for (auto& reg : store.registrations())
            if (req.path == "/" + config_.segment_for(reg.id) + "/query")
                return handle_query(store, req, reg.id);
        auto m = match_route(store, req.path);
        if (!m)
            return text_response(404, "Not Found\n");
        switch (m->kind) {
        case RouteKind::Resource: return handle_resource(store, req, *m);
        case RouteKind::Page: return handle_page(store, req, *m);
        case RouteKind::Data: return handle_data(store, req, *m);
        }
        return text_response(404, "Not Found\n");
    }

    static Response text_response(int status, std::string body)
    {
        Response r;
        r.status = status;
        r.set_header("Content-Type", "text/plain; charset=utf-8");
        r.body = std::move(body);
        return r;
    }

    static Response not_acceptable()
    {
        return text_response(406, "Not Acceptable: available as text/html, text/turtle, application/n-triples\n");
    }

    static Response with_vary(Response r, std::string vary)
    {
        r.set_header("Vary", std::move(vary));
        return r;
    }

    PrefixMap prefixes_for(const MultiStore& store, const ThesaurusRegistration* reg) const
    {
        PrefixMap map;
        if (reg)
            for (auto& [p, ns] : reg->prefixes.entries())
                map.add_if_absent(p, ns);
        for (auto& other : store.registrations())
            for (auto& [p, ns] : other.prefixes.entries())
                map.add_if_absent(p, ns);
        auto builtin = vocab::builtin_prefixes();
        for (auto& [p, ns] : builtin.entries())
            map.add_if_absent(p, ns);
        map.add_if_absent("ext", store.extension().ns);
        return map;
    }

    std::string curie(const MultiStore& store, const Iri& iri) const
    {
        auto map = prefixes_for(store, nullptr);
        for (auto& [p, ns] : map.entries())
            if (iri.starts_with(ns.str()) && iri.str().size() > ns.str().size())
                return p + ":" + iri.str().substr(ns.str().size());
        return iri.str();
    }

    // Anchor to the partner's page when we host it, to the IRI otherwise.
    std::string link(const MultiStore& store, const Iri& iri, const std::optional<Literal>& label,
                     const char* css_class) const
    {
        auto href = url_for(store, RouteKind::Page, iri).value_or(iri.str());
        std::string text = label ? label->lexical() : iri.str();
        std::string out = "<a";
        if (css_class)
            out += std::string(" class=\"") + css_class + "\"";
        out += " href=\"" + detail::html_escape(href) + "\" data-iri=\"" + detail::html_escape(iri.str()) + "\"";
        if (label && !label->lang().empty())
            out += " lang=\"" + label->lang() + "\"";
        return out + ">" + detail::html_escape(text) + "</a>";
    }

    std::string render_page(const MultiStore& store, const ThesaurusRegistration& reg, const Description& d,
                            const std::vector<std::string>& prefs) const
    {
        auto found = extract_concept(*reg.graph, d.focus);
        std::optional<Literal> heading;
        if (found)
            heading = choose_label(found->pref_labels, prefs);
        std::string title = heading ? heading->lexical() : d.focus.str();
        auto neighbor = [&](const Iri& iri) -> std::optional<Literal> {
            auto it = d.neighbor_labels.find(iri);
            if (it == d.neighbor_labels.end())
                return std::nullopt;
            return it->second;
        };

        std::ostringstream html;
        html << "<!DOCTYPE html>\n<html" << (heading && !heading->lang().empty() ? " lang=\"" + heading->lang() + "\"" : "")
             << ">\n<head>\n<meta charset=\"utf-8\">\n<title>" << detail::html_escape(title) << " | "
             << detail::html_escape(reg.title) << "</title>\n";
        auto data_url = url_for(store, RouteKind::Data, d.focus).value_or("");
        html << "<link rel=\"alternate\" type=\"text/turtle\" href=\"" << detail::html_escape(data_url) << "\">\n"
             << "<link rel=\"alternate\" type=\"application/n-triples\" href=\"" << detail::html_escape(data_url)
             << "\">\n</head>\n<body>\n";
        html << "<p class=\"thesaurus\"><a href=\"" << detail::html_escape(config_.external_base_url) << "/\">Index</a> / "
             << detail::html_escape(reg.title) << "</p>\n";
        html << "<h1>" << detail::html_escape(title) << "</h1>\n<p class=\"iri\"><code>"
             << detail::html_escape(d.focus.str()) << "</code></p>\n";

        if (found) {
            html << "<section class=\"labels\">\n<h2>Labels</h2>\n<dl>\n";
            for (auto& [lang, lit] : found->pref_labels)
                html << "<dt>Preferred" << (lang.empty() ? "" : " (" + lang + ")") << "</dt><dd>"
                     << detail::html_escape(lit.lexical()) << "</dd>\n";
            for (auto& [lang, lit] : found->alt_labels)
                html << "<dt>Alternative" << (lang.empty() ? "" : " (" + lang + ")") << "</dt><dd>"
                     << detail::html_escape(lit.lexical()) << "</dd>\n";
            html << "</dl>\n</section>\n";
            for (auto [heading_text, set] : {std::pair{"Broader", &found->broader},
                                             std::pair{"Narrower", &found->narrower},
                                             std::pair{"Related", &found->related}}) {
                if (set->empty())
                    continue;
                html << "<section class=\"" << detail::ascii_lowercase(heading_text) << "\">\n<h2>" << heading_text
                     << "</h2>\n<ul>\n";
                for (auto& iri : *set)
                    html << "<li>" << link(store, iri, neighbor(iri), nullptr) << "</li>\n";
                html << "</ul>\n</section>\n";
            }
        } else {
            html << "<section class=\"statements\">\n<h2>Statements</h2>\n<table>\n";
            for (auto& t : d.outbound) {
                html << "<tr><td>" << detail::html_escape(curie(store, t.predicate())) << "</td><td>";
                if (auto* o = t.object().as_iri())
                    html << link(store, *o, neighbor(*o), nullptr);
                else if (auto* lit = t.object().as_literal())
                    html << detail::html_escape(lit->lexical());
                else
                    html << detail::html_escape(to_ntriples(t.object()));
                html << "</td></tr>\n";
            }
            html << "</table>\n</section>\n";
        }

        html << "<section class=\"mappings\" id=\"mappings\">\n<h2>Mappings</h2>\n";
        if (d.outbound_mappings.empty() && d.inbound_mappings.empty()) {
            html << "<p class=\"none\">No mappings.</p>\n";
        } else {
            html << "<table>\n<thead><tr><th>Direction</th><th>Relation</th><th>Thesaurus</th><th>Concept</th></tr>"
                    "</thead>\n<tbody>\n";
            for (auto* links : {&d.outbound_mappings, &d.inbound_mappings}) {
                for (auto& l : *links) {
                    std::string thesauri;
                    std::string partners;
                    for (std::size_t i = 0; i < l.others.size(); ++i) {
                        const auto* owner = store.owner_of(l.others[i]);
                        std::string t = owner ? owner->title : std::string("external");
                        if (thesauri.find(t) == std::string::npos)
                            thesauri += (thesauri.empty() ? "" : ", ") + t;
                        partners += (i ? " + " : "") + link(store, l.others[i], l.other_labels[i], "partner");
                    }
                    if (l.node && l.direction == Direction::Outbound)
                        partners = "<span class=\"combination\">" + partners + "</span>";
                    html << "<tr><td>" << (l.direction == Direction::Outbound ? "outbound" : "inbound") << "</td><td>"
                         << detail::html_escape(curie(store, l.property)) << "</td><td>"
                         << detail::html_escape(thesauri) << "</td><td>" << partners << "</td></tr>\n";
                }
            }
            html << "</tbody>\n</table>\n";
        }
        html << "</section>\n<footer><a href=\"" << detail::html_escape(data_url) << "\">RDF</a></footer>\n"
             << "</body>\n</html>\n";
        return html.str();
    }

    mutable std::mutex mutex_;
    std::shared_ptr<const MultiStore> store_;
    RouteConfig config_;
};

/// Route settings taken from a manifest's service section and registrations.
inline RouteConfig route_config_from(const Manifest& m)
{
    RouteConfig cfg;
    cfg.listen_host = m.service.host;
    cfg.listen_port = m.service.port;
    cfg.external_base_url = m.service.external_base_url;
    cfg.result_limit = m.service.result_limit;
    for (auto& t : m.thesauri)
        cfg.segments[t.id] = t.path_segment;
    return cfg;
}

} // namespace skosbridge
