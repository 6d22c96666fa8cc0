#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ntriples.hpp"
#include "rdf.hpp"
#include "vocab.hpp"

namespace skosbridge {

namespace detail {

// Conservative ASCII subset of PN_LOCAL: no escapes, no trailing '.'.
inline bool is_simple_local_name(std::string_view local)
{
    if (local.empty())
        return true;
    auto ok_first = [](char c) { return is_ascii_alnum(c) || c == '_'; };
    auto ok_mid = [](char c) { return is_ascii_alnum(c) || c == '_' || c == '-' || c == '.'; };
    if (!ok_first(local.front()) || local.back() == '.')
        return false;
    for (char c : local.substr(1))
        if (!ok_mid(c))
            return false;
    return true;
}

class TurtleWriter {
public:
    explicit TurtleWriter(const PrefixMap& prefixes) : prefixes_(prefixes) {}

    std::string write(const Graph& g)
    {
        if (g.empty())
            return {};

        std::string body;
        const Term* current_subject = nullptr;
        const Iri* current_predicate = nullptr;
        for (const auto& t : g) {
            if (!current_subject || !(t.subject() == *current_subject)) {
                if (current_subject)
                    body += " .\n\n";
                append_node(body, t.subject());
                body += ' ';
                append_predicate(body, t.predicate());
                body += ' ';
            } else if (!(t.predicate() == *current_predicate)) {
                body += " ;\n    ";
                append_predicate(body, t.predicate());
                body += ' ';
            } else {
                body += ", ";
            }
            append_node(body, t.object());
            current_subject = &t.subject();
            current_predicate = &t.predicate();
        }
        body += " .\n";

        std::string out;
        for (std::size_t i = 0; i < prefixes_.entries().size(); ++i) {
            if (!used_[i])
                continue;
            auto& [prefix, ns] = prefixes_.entries()[i];
            out += "@prefix " + prefix + ": ";
            append_iri(out, ns);
            out += " .\n";
        }
        if (!out.empty())
            out += '\n';
        return out + body;
    }

private:
    void append_predicate(std::string& out, const Iri& p)
    {
        if (p == vocab::rdf_type)
            out += 'a';
        else
            append_compact(out, p);
    }

    void append_compact(std::string& out, const Iri& iri)
    {
        // longest matching namespace wins
        std::size_t best = prefixes_.entries().size();
        std::size_t best_len = 0;
        for (std::size_t i = 0; i < prefixes_.entries().size(); ++i) {
            const auto& ns = prefixes_.entries()[i].second.str();
            if (ns.size() > best_len && iri.starts_with(ns) &&
                is_simple_local_name(std::string_view(iri.str()).substr(ns.size()))) {
                best = i;
                best_len = ns.size();
            }
        }
        if (best == prefixes_.entries().size()) {
            append_iri(out, iri);
            return;
        }
        if (used_.size() < prefixes_.entries().size())
            used_.resize(prefixes_.entries().size());
        used_[best] = true;
        out += prefixes_.entries()[best].first;
        out += ':';
        out += iri.str().substr(best_len);
    }

    void append_node(std::string& out, const Term& term)
    {
        if (auto* iri = term.as_iri()) {
            append_compact(out, *iri);
        } else if (auto* lit = term.as_literal()) {
            append_quoted(out, lit->lexical());
            if (!lit->lang().empty()) {
                out += '@';
                out += lit->lang();
            } else if (lit->datatype()) {
                out += "^^";
                append_compact(out, *lit->datatype());
            }
        } else {
            append_term(out, term);
        }
    }

    const PrefixMap& prefixes_;
    std::vector<bool> used_ = std::vector<bool>(prefixes_.entries().size());
};

} // namespace detail

/// Subject-grouped Turtle. Only prefixes that were actually used are
/// declared; an empty graph yields an empty string.
inline std::string serialize_turtle(const Graph& g, const PrefixMap& prefixes)
{
    return detail::TurtleWriter(prefixes).write(g);
}

} // namespace skosbridge
