#pragma once

// SKOS projections over a raw graph, SKOS-XL dumbing-down, and integrity
// checks.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "diagnostic.hpp"
#include "ntriples.hpp"
#include "rdf.hpp"
#include "vocab.hpp"

namespace skosbridge {

enum class LabelKind { Pref, Alt, Hidden };

inline std::string_view to_string(LabelKind k)
{
    switch (k) {
    case LabelKind::Pref: return "pref";
    case LabelKind::Alt: return "alt";
    case LabelKind::Hidden: return "hidden";
    }
    return "?";
}

struct ConceptScheme {
    Iri iri;
    std::optional<Literal> title;
    std::set<Iri> concepts;
};

struct Concept {
    Iri iri;
    std::optional<Iri> scheme; // lowest scheme IRI when there are several
    std::map<std::string, Literal> pref_labels; // language tag -> label; "" = untagged
    std::multimap<std::string, Literal> alt_labels;
    std::multimap<std::string, Literal> hidden_labels;
    std::set<Iri> broader;
    std::set<Iri> narrower;
    std::set<Iri> related;
};

/// Trim, then collapse internal whitespace runs to one space.
inline std::string normalize_label(std::string_view s)
{
    auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v'; };
    std::string out;
    bool pending_space = false;
    for (char c : s) {
        if (is_space(c)) {
            pending_space = !out.empty();
            continue;
        }
        if (pending_space)
            out += ' ';
        pending_space = false;
        out += c;
    }
    return out;
}

/// Which resources of a graph are concepts, and which schemes each belongs to.
class ConceptIndex {
public:
    explicit ConceptIndex(const Graph& g)
    {
        for (auto& s : g.subjects(vocab::rdf_type, vocab::skos_ConceptScheme))
            schemes_.insert(s);
        for (auto& s : g.subjects(vocab::rdf_type, vocab::skos_Concept))
            typed_.insert(s);
        auto link = [this](const Term& concept_iri, const Term& scheme) {
            if (auto* iri = scheme.as_iri())
                memberships_[concept_iri].insert(*iri);
            else
                memberships_[concept_iri];
        };
        for (auto& t : g.match(std::nullopt, vocab::skos_inScheme, std::nullopt))
            link(t.subject(), t.object());
        for (auto& t : g.match(std::nullopt, vocab::skos_topConceptOf, std::nullopt))
            link(t.subject(), t.object());
        for (auto& t : g.match(std::nullopt, vocab::skos_hasTopConcept, std::nullopt))
            if (!t.object().is_literal())
                link(t.object(), t.subject());
    }

    bool is_scheme(const Term& t) const { return schemes_.count(t) != 0; }

    bool is_concept(const Term& t) const
    {
        if (t.is_literal() || is_scheme(t))
            return false;
        return typed_.count(t) != 0 || memberships_.count(t) != 0;
    }

    /// Concepts typed skos:Concept that carry no scheme link at all.
    std::vector<Term> orphans() const
    {
        std::vector<Term> out;
        for (auto& t : typed_)
            if (!is_scheme(t) && memberships_.count(t) == 0)
                out.push_back(t);
        return out;
    }

    const std::set<Iri>& schemes_of(const Term& t) const
    {
        static const std::set<Iri> kNone;
        auto it = memberships_.find(t);
        return it == memberships_.end() ? kNone : it->second;
    }

    std::set<Term> concepts() const
    {
        std::set<Term> out;
        for (auto& t : typed_)
            if (is_concept(t))
                out.insert(t);
        for (auto& [t, _] : memberships_)
            if (is_concept(t))
                out.insert(t);
        return out;
    }

    const std::set<Term>& schemes() const { return schemes_; }

private:
    std::set<Term> schemes_;
    std::set<Term> typed_;
    std::map<Term, std::set<Iri>> memberships_;
};

struct SchemeExtraction {
    std::vector<ConceptScheme> schemes;
    std::vector<Diagnostic> diagnostics;
};

inline std::optional<Iri> term_iri(const Term& t)
{
    if (auto* iri = t.as_iri())
        return *iri;
    return std::nullopt;
}

namespace detail {
inline std::string describe_term(const Term& t) { return to_ntriples(t); }

inline std::optional<Literal> first_literal(const Graph& g, const Term& s, const Iri& p)
{
    for (auto& o : g.objects(s, p))
        if (auto* lit = o.as_literal())
            return *lit;
    return std::nullopt;
}
} // namespace detail

inline std::vector<Diagnostic> orphan_diagnostics(const ConceptIndex& index)
{
    std::vector<Diagnostic> out;
    for (auto& t : index.orphans())
        out.push_back(make_diagnostic(DiagCode::OrphanConcept, term_iri(t),
                                      "concept " + detail::describe_term(t) + " belongs to no concept scheme"));
    return out;
}

/// One ConceptScheme per resource typed skos:ConceptScheme. Concepts without
/// any scheme link are reported, not dropped silently.
inline SchemeExtraction extract_schemes(const Graph& g)
{
    ConceptIndex index(g);
    SchemeExtraction result;
    for (auto& s : index.schemes()) {
        auto* iri = s.as_iri();
        if (!iri)
            continue;
        ConceptScheme scheme{*iri, std::nullopt, {}};
        scheme.title = detail::first_literal(g, s, vocab::dct_title);
        if (!scheme.title)
            scheme.title = detail::first_literal(g, s, vocab::rdfs_label);
        if (!scheme.title)
            scheme.title = detail::first_literal(g, s, vocab::skos_prefLabel);
        result.schemes.push_back(std::move(scheme));
    }
    for (auto& c : index.concepts()) {
        auto* iri = c.as_iri();
        if (!iri)
            continue;
        for (auto& scheme_iri : index.schemes_of(c))
            for (auto& scheme : result.schemes)
                if (scheme.iri == scheme_iri)
                    scheme.concepts.insert(*iri);
    }
    result.diagnostics = orphan_diagnostics(index);
    return result;
}

struct XlResolution {
    Graph graph;
    std::vector<Diagnostic> diagnostics;
};

/// Adds plain skos:prefLabel/altLabel/hiddenLabel triples for every SKOS-XL
/// label edge whose label resource has a literal form. The XL triples stay.
inline XlResolution resolve_xl_labels(const Graph& g)
{
    static const std::pair<const Iri*, const Iri*> kPairs[] = {
        {&vocab::skosxl_prefLabel, &vocab::skos_prefLabel},
        {&vocab::skosxl_altLabel, &vocab::skos_altLabel},
        {&vocab::skosxl_hiddenLabel, &vocab::skos_hiddenLabel},
    };
    XlResolution result{g, {}};
    std::set<Term> reported;
    for (auto [xl, plain] : kPairs) {
        for (auto& edge : g.match(std::nullopt, *xl, std::nullopt)) {
            const Term& label = edge.object();
            bool found = false;
            if (!label.is_literal()) {
                for (auto& form : g.objects(label, vocab::skosxl_literalForm)) {
                    if (!form.is_literal())
                        continue;
                    result.graph.insert(Triple(edge.subject(), *plain, form));
                    found = true;
                }
            }
            if (!found && reported.insert(label).second)
                result.diagnostics.push_back(
                    make_diagnostic(DiagCode::XlNoLiteralForm, term_iri(label),
                                    "SKOS-XL label " + detail::describe_term(label) + " has no skosxl:literalForm"));
        }
    }
    return result;
}

/// Concept view of `iri`, or nullopt when the graph says nothing SKOS-ish
/// about it. Concept schemes are never concepts.
inline std::optional<Concept> extract_concept(const Graph& g, const Iri& iri)
{
    Term self(iri);
    if (g.match(self, vocab::rdf_type, Term(vocab::skos_ConceptScheme)).size() != 0)
        return std::nullopt;

    static const Iri* const kSkosPredicates[] = {
        &vocab::skos_prefLabel, &vocab::skos_altLabel, &vocab::skos_hiddenLabel, &vocab::skos_broader,
        &vocab::skos_narrower,  &vocab::skos_related,  &vocab::skos_inScheme,    &vocab::skos_topConceptOf,
    };
    bool present = !g.match(self, vocab::rdf_type, Term(vocab::skos_Concept)).empty() ||
                   !g.match(std::nullopt, vocab::skos_hasTopConcept, self).empty();
    for (auto* p : kSkosPredicates)
        present = present || !g.match(self, *p, std::nullopt).empty();
    if (!present)
        return std::nullopt;

    Concept c{iri, std::nullopt, {}, {}, {}, {}, {}, {}};
    std::set<Iri> schemes;
    for (auto& t : g.match(self, std::nullopt, std::nullopt)) {
        const auto& p = t.predicate();
        const Term& o = t.object();
        if (auto* lit = o.as_literal()) {
            if (p == vocab::skos_prefLabel)
                c.pref_labels.emplace(lit->lang(), *lit);
            else if (p == vocab::skos_altLabel)
                c.alt_labels.emplace(lit->lang(), *lit);
            else if (p == vocab::skos_hiddenLabel)
                c.hidden_labels.emplace(lit->lang(), *lit);
        } else if (auto* target = o.as_iri()) {
            if (p == vocab::skos_broader)
                c.broader.insert(*target);
            else if (p == vocab::skos_narrower)
                c.narrower.insert(*target);
            else if (p == vocab::skos_related)
                c.related.insert(*target);
            else if (p == vocab::skos_inScheme || p == vocab::skos_topConceptOf)
                schemes.insert(*target);
        }
    }
    for (auto& s : g.subjects(vocab::skos_hasTopConcept, self))
        if (auto* s_iri = s.as_iri())
            schemes.insert(*s_iri);
    if (!schemes.empty())
        c.scheme = *schemes.begin();
    return c;
}

/// Best label for a language preference list: exact tag, then primary
/// subtag, then untagged, then the lowest tag present.
inline std::optional<Literal> choose_label(const std::map<std::string, Literal>& labels,
                                           const std::vector<std::string>& lang_pref)
{
    if (labels.empty())
        return std::nullopt;
    for (auto& want : lang_pref) {
        if (auto it = labels.find(want); it != labels.end())
            return it->second;
        auto primary = want.substr(0, want.find('-'));
        for (auto& [tag, lit] : labels)
            if (tag.substr(0, tag.find('-')) == primary && !primary.empty())
                return lit;
    }
    if (auto it = labels.find(""); it != labels.end())
        return it->second;
    return labels.begin()->second;
}

inline std::map<std::string, Literal> pref_labels_of(const Graph& g, const Iri& iri)
{
    std::map<std::string, Literal> out;
    for (auto& o : g.objects(Term(iri), vocab::skos_prefLabel))
        if (auto* lit = o.as_literal())
            out.emplace(lit->lang(), *lit);
    return out;
}

/// Integrity checks the conversion rules depend on. Never mutates.
inline std::vector<Diagnostic> validate_skos(const Graph& g)
{
    std::vector<Diagnostic> out;
    ConceptIndex index(g);

    using LabelKey = std::pair<std::string, std::string>; // (lang, lexical)
    struct Labels {
        std::map<std::string, std::vector<std::string>> pref_by_lang;
        std::set<LabelKey> pref, alt, hidden;
    };
    std::map<Term, Labels> labels;
    auto collect = [&](const Iri& p, LabelKind kind) {
        for (auto& t : g.match(std::nullopt, p, std::nullopt)) {
            auto* lit = t.object().as_literal();
            if (!lit)
                continue;
            auto& l = labels[t.subject()];
            LabelKey key{lit->lang(), lit->lexical()};
            if (kind == LabelKind::Pref) {
                l.pref_by_lang[lit->lang()].push_back(lit->lexical());
                l.pref.insert(key);
            } else {
                (kind == LabelKind::Alt ? l.alt : l.hidden).insert(key);
            }
        }
    };
    collect(vocab::skos_prefLabel, LabelKind::Pref);
    collect(vocab::skos_altLabel, LabelKind::Alt);
    collect(vocab::skos_hiddenLabel, LabelKind::Hidden);

    for (auto& [subject, l] : labels) {
        for (auto& [lang, values] : l.pref_by_lang) {
            if (values.size() > 1)
                out.push_back(make_diagnostic(DiagCode::DuplicatePrefLabel, term_iri(subject),
                                              std::to_string(values.size()) + " prefLabels with language '" + lang +
                                                  "' on " + detail::describe_term(subject)));
        }
        auto clash = [&](const std::set<LabelKey>& a, const std::set<LabelKey>& b, std::string_view what) {
            for (auto& key : a)
                if (b.count(key))
                    out.push_back(make_diagnostic(DiagCode::LabelClash, term_iri(subject),
                                                  "label \"" + key.second + "\"@" + key.first + " used as both " +
                                                      std::string(what) + " on " + detail::describe_term(subject)));
        };
        clash(l.pref, l.alt, "prefLabel and altLabel");
        clash(l.pref, l.hidden, "prefLabel and hiddenLabel");
        clash(l.alt, l.hidden, "altLabel and hiddenLabel");
    }

    auto orphans = orphan_diagnostics(index);
    out.insert(out.end(), orphans.begin(), orphans.end());

    auto described = [&](const Term& t) {
        for (auto& triple : g.match(t, std::nullopt, std::nullopt))
            if (!vocab::is_skos_mapping_property(triple.predicate()))
                return true;
        return false;
    };

    for (auto& t : g) {
        if (!vocab::is_skos_mapping_property(t.predicate()))
            continue;
        bool non_concept = false;
        for (const Term* end : {&t.subject(), &t.object()}) {
            if (index.is_concept(*end))
                continue;
            if (end->is_literal() || described(*end)) {
                non_concept = true;
            } else {
                out.push_back(make_diagnostic(DiagCode::DanglingMappingTarget, term_iri(*end),
                                              detail::describe_term(*end) + " is not described by this graph"));
            }
        }
        if (non_concept) {
            out.push_back(make_diagnostic(DiagCode::MappingNonConcept, term_iri(t.subject()),
                                          "mapping " + detail::single_line(to_ntriples(t)) +
                                              "does not link two concepts"));
            continue;
        }
        if (index.is_concept(t.subject()) && index.is_concept(t.object())) {
            const auto& a = index.schemes_of(t.subject());
            const auto& b = index.schemes_of(t.object());
            for (auto& s : a) {
                if (b.count(s)) {
                    out.push_back(make_diagnostic(DiagCode::MappingSameScheme, term_iri(t.subject()),
                                                  "mapping " + detail::single_line(to_ntriples(t)) +
                                                      "stays inside scheme <" + s.str() + ">"));
                    break;
                }
            }
        }
    }
    return out;
}

/// Label lookup over the concepts of one graph (optionally one scheme),
/// keyed by (language, normalized text).
class SchemeView {
public:
    struct Hit {
        Iri concept_iri;
        LabelKind kind;
    };

    explicit SchemeView(const Graph& g, std::optional<Iri> scheme = std::nullopt)
    {
        ConceptIndex index(g);
        static const std::pair<const Iri*, LabelKind> kLabelProps[] = {
            {&vocab::skos_prefLabel, LabelKind::Pref},
            {&vocab::skos_altLabel, LabelKind::Alt},
            {&vocab::skos_hiddenLabel, LabelKind::Hidden},
        };
        for (auto& c : index.concepts()) {
            auto* iri = c.as_iri();
            if (!iri)
                continue;
            if (scheme && index.schemes_of(c).count(*scheme) == 0)
                continue;
            ++concept_count_;
            for (auto [p, kind] : kLabelProps)
                for (auto& o : g.objects(c, *p))
                    if (auto* lit = o.as_literal())
                        labels_[{lit->lang(), normalize_label(lit->lexical())}].push_back({*iri, kind});
        }
    }

    const std::vector<Hit>& find(std::string_view lang, std::string_view normalized) const
    {
        static const std::vector<Hit> kNone;
        auto it = labels_.find({std::string(lang), std::string(normalized)});
        return it == labels_.end() ? kNone : it->second;
    }

    std::size_t concept_count() const { return concept_count_; }

private:
    std::map<std::pair<std::string, std::string>, std::vector<Hit>> labels_;
    std::size_t concept_count_ = 0;
};

} // namespace skosbridge
