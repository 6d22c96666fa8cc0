#pragma once

// Conversion of legacy term-based cross-concordances into SKOS mapping
// triples.
//
// A crosswalk file declares one source scheme, one target scheme and one
// language per side in its header; every data line relates a source term to
// one target term, or to a pair of target terms whose combination is
// equivalent to the source. Terms are resolved against the labels of each
// scheme: a mapping is only emitted between concepts, so a term that is
// merely an alt/hidden label or that names several concepts is a policy
// decision and always leaves a diagnostic behind.

#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>
#include <variant>
#include <vector>

#include "diagnostic.hpp"
#include "ntriples.hpp"
#include "rdf.hpp"
#include "skos.hpp"
#include "vocab.hpp"

namespace skosbridge {

/// Legacy relation codes. `A < B` reads "A is narrower than B", so it becomes
/// A skos:broadMatch B.
enum class RelationCode { Equivalent, Broader, Narrower, Related };

inline std::optional<RelationCode> parse_relation_code(std::string_view s)
{
    if (s == "=")
        return RelationCode::Equivalent;
    if (s == "<")
        return RelationCode::Broader;
    if (s == ">")
        return RelationCode::Narrower;
    if (s == "^")
        return RelationCode::Related;
    return std::nullopt;
}

inline std::string_view to_symbol(RelationCode r)
{
    switch (r) {
    case RelationCode::Equivalent: return "=";
    case RelationCode::Broader: return "<";
    case RelationCode::Narrower: return ">";
    case RelationCode::Related: return "^";
    }
    return "?";
}

inline const Iri& map_relation(RelationCode r)
{
    switch (r) {
    case RelationCode::Equivalent: return vocab::skos_exactMatch;
    case RelationCode::Broader: return vocab::skos_broadMatch;
    case RelationCode::Narrower: return vocab::skos_narrowMatch;
    case RelationCode::Related: return vocab::skos_relatedMatch;
    }
    return vocab::skos_mappingRelation;
}

/// SKOS inverse of a mapping property, or nullopt when it has none.
inline std::optional<Iri> inverse_property(const Iri& p)
{
    if (p == vocab::skos_exactMatch || p == vocab::skos_closeMatch || p == vocab::skos_relatedMatch)
        return p;
    if (p == vocab::skos_broadMatch)
        return vocab::skos_narrowMatch;
    if (p == vocab::skos_narrowMatch)
        return vocab::skos_broadMatch;
    return std::nullopt;
}

struct CrosswalkHeader {
    std::string source_scheme;
    std::string target_scheme;
    std::string source_lang;
    std::string target_lang;
};

struct CrosswalkEntry {
    std::string source_term;
    std::string source_lang;
    RelationCode relation = RelationCode::Equivalent;
    std::vector<std::string> target_terms; // one term, or two for a combination
    std::string target_lang;
    std::size_t line = 0;
};

struct CrosswalkParse {
    std::optional<CrosswalkHeader> header;
    std::vector<CrosswalkEntry> entries;
    std::vector<Diagnostic> diagnostics;
};

namespace detail {

inline std::vector<std::string_view> split(std::string_view s, char sep)
{
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (;;) {
        auto pos = s.find(sep, start);
        out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos)
            return out;
        start = pos + 1;
    }
}

inline std::optional<CrosswalkHeader> parse_xwalk_header(std::string_view line, std::string& error)
{
    std::map<std::string, std::string> fields;
    std::istringstream in{std::string(line.substr(6))};
    std::string token;
    while (in >> token) {
        auto eq = token.find('=');
        if (eq == std::string::npos || eq == 0) {
            error = "header token '" + token + "' is not key=value";
            return std::nullopt;
        }
        fields[token.substr(0, eq)] = token.substr(eq + 1);
    }
    CrosswalkHeader h;
    for (auto [key, dest] : {std::pair{"source", &h.source_scheme}, std::pair{"target", &h.target_scheme},
                             std::pair{"source-lang", &h.source_lang}, std::pair{"target-lang", &h.target_lang}}) {
        auto it = fields.find(key);
        if (it == fields.end() || it->second.empty()) {
            error = std::string("header lacks ") + key + "=";
            return std::nullopt;
        }
        *dest = it->second;
        fields.erase(it);
    }
    if (!fields.empty()) {
        error = "unknown header key '" + fields.begin()->first + "'";
        return std::nullopt;
    }
    for (auto* lang : {&h.source_lang, &h.target_lang}) {
        *lang = ascii_lowercase(*lang);
        if (!is_valid_lang_tag(*lang)) {
            error = "invalid language tag '" + *lang + "' in header";
            return std::nullopt;
        }
    }
    return h;
}

} // namespace detail

/// Reads the tab-separated crosswalk format. Bad lines become diagnostics and
/// parsing continues; a header naming the same scheme on both sides voids the
/// whole file.
inline CrosswalkParse parse_crosswalk(std::istream& in, const std::string& file = "<crosswalk>")
{
    CrosswalkParse result;
    bool header_error = false;
    bool seen_data = false;
    std::string line;
    std::size_t line_no = 0;
    auto syntax = [&](std::string msg) {
        result.diagnostics.push_back(
            make_diagnostic(DiagCode::XwalkSyntax, std::nullopt, std::move(msg), SourceLocation{file, line_no}));
    };

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        std::string_view view(line);
        if (view.substr(0, 6) == "#xwalk" && (view.size() == 6 || view[6] == ' ' || view[6] == '\t')) {
            if (result.header || header_error) {
                syntax("duplicate #xwalk header");
                continue;
            }
            if (seen_data) {
                syntax("#xwalk header must precede data lines");
                header_error = true;
                continue;
            }
            std::string error;
            result.header = detail::parse_xwalk_header(view, error);
            if (!result.header) {
                header_error = true;
                syntax(error);
            } else if (result.header->source_scheme == result.header->target_scheme) {
                result.diagnostics.push_back(make_diagnostic(
                    DiagCode::XwalkSameScheme, std::nullopt,
                    "source and target are both '" + result.header->source_scheme +
                        "'; intra-vocabulary crosswalks are not converted",
                    SourceLocation{file, line_no}));
            }
            continue;
        }
        if (!view.empty() && view.front() == '#')
            continue;
        if (normalize_label(view).empty())
            continue;

        seen_data = true;
        if (!result.header) {
            syntax("data line before a valid #xwalk header");
            continue;
        }
        auto fields = detail::split(view, '\t');
        if (fields.size() != 3 && fields.size() != 4) {
            syntax("expected 3 or 4 tab-separated fields, found " + std::to_string(fields.size()));
            continue;
        }
        auto relation = parse_relation_code(normalize_label(fields[1]));
        if (!relation) {
            syntax("unknown relation code '" + std::string(fields[1]) + "'");
            continue;
        }
        CrosswalkEntry entry;
        entry.source_term = normalize_label(fields[0]);
        entry.source_lang = result.header->source_lang;
        entry.relation = *relation;
        entry.target_lang = result.header->target_lang;
        entry.line = line_no;
        for (std::size_t i = 2; i < fields.size(); ++i)
            entry.target_terms.push_back(normalize_label(fields[i]));
        bool empty_term = entry.source_term.empty();
        for (auto& t : entry.target_terms)
            empty_term = empty_term || t.empty();
        if (empty_term) {
            syntax("empty term");
            continue;
        }
        if (entry.target_terms.size() == 2 && *relation != RelationCode::Equivalent) {
            result.diagnostics.push_back(make_diagnostic(
                DiagCode::XwalkBadCombination, std::nullopt,
                "combination target requires relation '=', found '" + std::string(to_symbol(*relation)) + "'",
                SourceLocation{file, line_no}));
            continue;
        }
        result.entries.push_back(std::move(entry));
    }

    if (!result.header && !header_error && !seen_data) {
        line_no = line_no == 0 ? 1 : line_no;
        syntax("missing #xwalk header");
    }
    if (result.header && result.header->source_scheme == result.header->target_scheme)
        result.entries.clear();
    return result;
}

inline CrosswalkParse parse_crosswalk(std::string_view text, const std::string& file = "<crosswalk>")
{
    std::istringstream in{std::string(text)};
    return parse_crosswalk(in, file);
}

struct Preferred {
    Iri concept_iri;
};
struct NonPreferred {
    Iri concept_iri;
    LabelKind kind; // Alt or Hidden
};
struct Ambiguous {
    std::vector<Iri> candidates; // sorted, at least two
};
struct NotFound {};

using Resolution = std::variant<Preferred, NonPreferred, Ambiguous, NotFound>;

/// Exact (case-sensitive, whitespace-normalized) lookup. Preferred labels win
/// over alt/hidden labels; several concepts on the winning tier make the term
/// ambiguous.
inline Resolution resolve_term(const SchemeView& view, std::string_view term, std::string_view lang)
{
    const auto& hits = view.find(lang, normalize_label(term));
    std::set<Iri> preferred;
    std::map<Iri, LabelKind> other;
    for (auto& hit : hits) {
        if (hit.kind == LabelKind::Pref) {
            preferred.insert(hit.concept_iri);
        } else {
            auto [it, inserted] = other.emplace(hit.concept_iri, hit.kind);
            if (!inserted && hit.kind == LabelKind::Alt)
                it->second = LabelKind::Alt;
        }
    }
    if (preferred.size() == 1)
        return Preferred{*preferred.begin()};
    if (preferred.size() > 1)
        return Ambiguous{{preferred.begin(), preferred.end()}};
    if (other.size() == 1)
        return NonPreferred{other.begin()->first, other.begin()->second};
    if (other.size() > 1) {
        Ambiguous a;
        for (auto& [iri, _] : other)
            a.candidates.push_back(iri);
        return a;
    }
    return NotFound{};
}

enum class NonPreferredMode { Strict, Promote };
enum class AmbiguityMode { Fail, FirstBySortedIri };

struct ConversionPolicy {
    NonPreferredMode nonpreferred = NonPreferredMode::Strict;
    AmbiguityMode ambiguity = AmbiguityMode::Fail;
    bool emit_inverses = true;
};

struct MappingEdge {
    Iri source;
    Iri property;
    std::vector<Iri> targets; // two members iff property is the combination property
    SourceLocation provenance;

    bool is_combination() const { return targets.size() == 2; }

    friend bool operator==(const MappingEdge&, const MappingEdge&) = default;
};

struct Conversion {
    std::vector<MappingEdge> edges;
    std::vector<Diagnostic> diagnostics;
};

/// FNV-1a (64-bit) over each sorted member IRI followed by '\n', then the
/// source IRI; rendered as 16 lowercase hex digits.
inline std::string combination_hash(const Iri& source, std::vector<Iri> members)
{
    std::sort(members.begin(), members.end());
    std::uint64_t h = 0xcbf29ce484222325ULL;
    auto feed = [&h](std::string_view bytes) {
        for (char c : bytes) {
            h ^= static_cast<unsigned char>(c);
            h *= 0x100000001b3ULL;
        }
    };
    for (auto& m : members) {
        feed(m.str());
        feed("\n");
    }
    feed(source.str());
    static constexpr char kHex[] = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = kHex[h & 0xF];
        h >>= 4;
    }
    return out;
}

inline Iri combination_node(const vocab::Extension& ext, const Iri& source, const std::vector<Iri>& members)
{
    return Iri(ext.ns.str() + "combination/" + combination_hash(source, members));
}

struct CombinationTriples {
    std::vector<Triple> triples;
    std::vector<Diagnostic> diagnostics;
};

/// The four triples of a combination mapping: source -> node, node type, and
/// one membership triple per member.
inline CombinationTriples convert_combination(const Iri& source, const std::vector<Iri>& members,
                                              const vocab::Extension& ext, const SourceLocation& provenance)
{
    CombinationTriples out;
    if (members.size() != 2 || members[0] == members[1]) {
        out.diagnostics.push_back(make_diagnostic(DiagCode::XwalkBadCombination, source,
                                                  "combination needs two distinct member concepts", provenance));
        return out;
    }
    Iri node = combination_node(ext, source, members);
    out.triples.emplace_back(source, ext.matches_combination, node);
    out.triples.emplace_back(node, vocab::rdf_type, ext.concept_combination);
    for (auto& m : members)
        out.triples.emplace_back(node, ext.member, m);
    return out;
}

namespace detail {

// Applies the policy to one side's resolution; nullopt means the entry fails.
inline std::optional<Iri> settle(const Resolution& r, std::string_view side, std::string_view term,
                                 std::string_view lang, const ConversionPolicy& policy, const SourceLocation& loc,
                                 std::vector<Diagnostic>& diags)
{
    std::string what = std::string(side) + " term \"" + std::string(term) + "\"@" + std::string(lang);
    if (auto* p = std::get_if<Preferred>(&r))
        return p->concept_iri;
    if (auto* np = std::get_if<NonPreferred>(&r)) {
        std::string detail = what + " is a non-preferred (" + std::string(to_string(np->kind)) + "Label) term of <" +
                             np->concept_iri.str() + ">";
        if (policy.nonpreferred == NonPreferredMode::Strict) {
            diags.push_back(make_diagnostic(DiagCode::XwalkNonPreferred, np->concept_iri, detail, loc));
            return std::nullopt;
        }
        diags.push_back(make_diagnostic(DiagCode::XwalkPromoted, np->concept_iri, detail + "; promoted", loc));
        return np->concept_iri;
    }
    if (auto* amb = std::get_if<Ambiguous>(&r)) {
        std::string list;
        for (auto& c : amb->candidates)
            list += (list.empty() ? "<" : ", <") + c.str() + ">";
        if (policy.ambiguity == AmbiguityMode::Fail) {
            diags.push_back(make_diagnostic(DiagCode::XwalkAmbiguous, std::nullopt,
                                            what + " matches several concepts: " + list, loc));
            return std::nullopt;
        }
        diags.push_back(make_diagnostic(DiagCode::XwalkAmbiguousResolved, amb->candidates.front(),
                                        what + " matches several concepts: " + list + "; chose the first", loc));
        return amb->candidates.front();
    }
    diags.push_back(make_diagnostic(DiagCode::XwalkUnresolved, std::nullopt, what + " not found", loc));
    return std::nullopt;
}

} // namespace detail

/// Converts one crosswalk entry. Never throws for data problems; every
/// outcome is reported through the returned diagnostics.
inline Conversion convert_entry(const CrosswalkEntry& e, const SchemeView& source, const SchemeView& target,
                                const ConversionPolicy& policy, const vocab::Extension& ext,
                                const std::string& file = "<crosswalk>")
{
    Conversion out;
    SourceLocation loc{file, e.line};
    if (e.target_terms.empty() || e.target_terms.size() > 2 ||
        (e.target_terms.size() == 2 && e.relation != RelationCode::Equivalent)) {
        out.diagnostics.push_back(make_diagnostic(DiagCode::XwalkBadCombination, std::nullopt,
                                                  "entry needs one target, or two targets with relation '='", loc));
        return out;
    }

    auto src_res = resolve_term(source, e.source_term, e.source_lang);
    auto src = detail::settle(src_res, "source", e.source_term, e.source_lang, policy, loc, out.diagnostics);
    std::vector<Iri> targets;
    bool all_preferred = std::holds_alternative<Preferred>(src_res);
    bool failed = !src;
    for (auto& term : e.target_terms) {
        auto res = resolve_term(target, term, e.target_lang);
        all_preferred = all_preferred && std::holds_alternative<Preferred>(res);
        auto iri = detail::settle(res, "target", term, e.target_lang, policy, loc, out.diagnostics);
        if (iri)
            targets.push_back(*iri);
        else
            failed = true;
    }
    if (failed)
        return out;

    if (targets.size() == 2) {
        if (targets[0] == targets[1]) {
            out.diagnostics.push_back(make_diagnostic(DiagCode::XwalkBadCombination, *src,
                                                      "both combination members resolve to <" + targets[0].str() + ">",
                                                      loc));
            return out;
        }
        std::sort(targets.begin(), targets.end());
        out.edges.push_back(MappingEdge{*src, ext.matches_combination, targets, loc});
    } else {
        out.edges.push_back(MappingEdge{*src, map_relation(e.relation), targets, loc});
    }
    if (all_preferred)
        out.diagnostics.push_back(make_diagnostic(DiagCode::XwalkOk, *src,
                                                  "\"" + e.source_term + "\" " + std::string(to_symbol(e.relation)) +
                                                      " converted to <" + out.edges.back().property.str() + ">",
                                                  loc));
    return out;
}

/// Reverse edges for every single-target SKOS mapping that is not already
/// present in `edges`. Combination edges have no SKOS inverse.
inline Conversion generate_inverses(const std::vector<MappingEdge>& edges)
{
    using Key = std::tuple<Iri, Iri, Iri>;
    std::set<Key> present;
    for (auto& e : edges)
        if (e.targets.size() == 1)
            present.emplace(e.source, e.property, e.targets.front());

    Conversion out;
    for (auto& e : edges) {
        std::optional<Iri> inverse;
        if (e.targets.size() == 1)
            inverse = inverse_property(e.property);
        if (!inverse) {
            out.diagnostics.push_back(make_diagnostic(DiagCode::XwalkNoInverse, e.source,
                                                      "no SKOS inverse for <" + e.property.str() + ">", e.provenance));
            continue;
        }
        if (present.emplace(e.targets.front(), *inverse, e.source).second)
            out.edges.push_back(MappingEdge{e.targets.front(), *inverse, {e.source}, e.provenance});
    }
    return out;
}

inline Graph edges_to_graph(const std::vector<MappingEdge>& edges, const vocab::Extension& ext = {})
{
    Graph g;
    for (auto& e : edges) {
        if (e.is_combination()) {
            for (auto& t : convert_combination(e.source, e.targets, ext, e.provenance).triples)
                g.insert(t);
        } else {
            g.insert(Triple(e.source, e.property, e.targets.front()));
        }
    }
    return g;
}

/// Converts every entry in input order, then optionally appends inverses.
inline Conversion convert_crosswalk(const std::vector<CrosswalkEntry>& entries, const SchemeView& source,
                                    const SchemeView& target, const ConversionPolicy& policy,
                                    const vocab::Extension& ext, const std::string& file = "<crosswalk>")
{
    Conversion out;
    for (auto& e : entries) {
        auto c = convert_entry(e, source, target, policy, ext, file);
        out.edges.insert(out.edges.end(), c.edges.begin(), c.edges.end());
        out.diagnostics.insert(out.diagnostics.end(), c.diagnostics.begin(), c.diagnostics.end());
    }
    if (policy.emit_inverses) {
        auto inv = generate_inverses(out.edges);
        out.edges.insert(out.edges.end(), inv.edges.begin(), inv.edges.end());
        out.diagnostics.insert(out.diagnostics.end(), inv.diagnostics.begin(), inv.diagnostics.end());
    }
    return out;
}

} // namespace skosbridge
