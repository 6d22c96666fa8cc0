#pragma once

// Registry of independently loaded thesaurus graphs plus mapping graphs.
//
// Each thesaurus owns an IRI namespace and stands in for a separately hosted
// endpoint; mapping graphs are kept apart from the thesauri so every mapping
// set stays attributable and re-exportable. A store is filled during a load
// phase, then sealed and shared read-only.

#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "diagnostic.hpp"
#include "rdf.hpp"
#include "skos.hpp"
#include "vocab.hpp"

namespace skosbridge {

class StoreError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ThesaurusRegistration {
    std::string id;
    Iri base_iri;
    std::shared_ptr<const Graph> graph;
    PrefixMap prefixes;
    std::string title;
    std::string default_lang; // may be empty
};

struct MappingGraph {
    std::string id;
    std::shared_ptr<const Graph> graph;
};

enum class Direction { Outbound, Inbound };

/// One cross-concordance touching a concept. For combination mappings
/// `others` holds the members (outbound) and `node` the combination node.
struct MappingLink {
    Direction direction;
    Iri property;
    std::vector<Iri> others;
    std::vector<std::optional<Literal>> other_labels; // parallel to `others`
    std::optional<Iri> node;

    friend bool operator==(const MappingLink&, const MappingLink&) = default;
};

struct LookupResult {
    const ThesaurusRegistration* registration;
    std::optional<Concept> concept_data; // empty for non-concepts under the base
};

struct QueryPattern {
    std::optional<Term> subject;
    std::optional<Iri> predicate;
    std::optional<Term> object;
};

struct QueryResult {
    std::vector<Triple> triples;
    bool truncated = false;
};

class MultiStore {
public:
    explicit MultiStore(vocab::Extension ext = {}) : ext_(std::move(ext)) {}

    /// Rejects duplicate ids and bases that prefix (or are prefixed by) an
    /// existing base.
    void register_thesaurus(ThesaurusRegistration reg)
    {
        require_unsealed();
        if (!reg.graph)
            throw StoreError("registration '" + reg.id + "' has no graph");
        if (reg.id.empty())
            throw StoreError("registration id must not be empty");
        for (auto& existing : registrations_) {
            if (existing.id == reg.id)
                throw StoreError("duplicate thesaurus id '" + reg.id + "'");
            if (existing.base_iri.starts_with(reg.base_iri.str()) || reg.base_iri.starts_with(existing.base_iri.str()))
                throw StoreError("base IRI <" + reg.base_iri.str() + "> of '" + reg.id + "' overlaps <" +
                                 existing.base_iri.str() + "> of '" + existing.id + "'");
        }
        registrations_.push_back(std::move(reg));
    }

    /// Stores a mapping graph under `id`. Endpoints outside every registered
    /// base are kept and reported as Info; non-mapping triples are kept and
    /// reported as Warnings.
    std::vector<Diagnostic> load_mappings(std::string id, Graph g)
    {
        require_unsealed();
        for (auto& m : mappings_)
            if (m.id == id)
                throw StoreError("duplicate mapping graph id '" + id + "'");

        std::vector<Diagnostic> diags;
        std::set<Iri> reported;
        auto check_endpoint = [&](const Term& t) {
            auto* iri = t.as_iri();
            if (!iri || owner_of(*iri) || !reported.insert(*iri).second)
                return;
            diags.push_back(make_diagnostic(DiagCode::DanglingMappingTarget, *iri,
                                            "<" + iri->str() + "> in mapping graph '" + id +
                                                "' is not under any registered base"));
        };
        for (auto& t : g) {
            const Iri& p = t.predicate();
            if (vocab::is_skos_mapping_property(p)) {
                check_endpoint(t.subject());
                check_endpoint(t.object());
            } else if (p == ext_.matches_combination) {
                check_endpoint(t.subject());
            } else if (p == ext_.member) {
                check_endpoint(t.object());
            } else if (!(p == vocab::rdf_type && t.object() == Term(ext_.concept_combination))) {
                diags.push_back(make_diagnostic(DiagCode::MappingGraphForeignTriple, term_iri(t.subject()),
                                                "mapping graph '" + id + "' contains non-mapping triple " +
                                                    detail::single_line(to_ntriples(t))));
            }
        }
        mappings_.push_back({std::move(id), std::make_shared<const Graph>(std::move(g))});
        return diags;
    }

    /// Registration whose base is the longest prefix of `iri`.
    const ThesaurusRegistration* owner_of(const Iri& iri) const
    {
        const ThesaurusRegistration* best = nullptr;
        for (auto& r : registrations_)
            if (iri.starts_with(r.base_iri.str()) && (!best || r.base_iri.str().size() > best->base_iri.str().size()))
                best = &r;
        return best;
    }

    const ThesaurusRegistration* find_registration(std::string_view id) const
    {
        for (auto& r : registrations_)
            if (r.id == id)
                return &r;
        return nullptr;
    }

    std::optional<LookupResult> lookup(const Iri& iri) const
    {
        const auto* reg = owner_of(iri);
        if (!reg)
            return std::nullopt;
        return LookupResult{reg, extract_concept(*reg->graph, iri)};
    }

    /// Best prefLabel for `iri`, from its owning thesaurus first, then from any
    /// other registration that happens to describe it.
    std::optional<Literal> label_for(const Iri& iri, const std::vector<std::string>& lang_pref) const
    {
        if (const auto* reg = owner_of(iri))
            if (auto label = choose_label(pref_labels_of(*reg->graph, iri), lang_pref))
                return label;
        for (auto& r : registrations_)
            if (auto label = choose_label(pref_labels_of(*r.graph, iri), lang_pref))
                return label;
        return std::nullopt;
    }

    /// Every mapping in every mapping graph with `iri` as source or target,
    /// including membership in a combination.
    std::vector<MappingLink> mappings_for(const Iri& iri, const std::vector<std::string>& lang_pref = {}) const
    {
        std::vector<MappingLink> out;
        Term self(iri);
        auto add = [&](MappingLink link) {
            for (auto& o : link.others)
                link.other_labels.push_back(label_for(o, lang_pref));
            if (std::find(out.begin(), out.end(), link) == out.end())
                out.push_back(std::move(link));
        };
        for (auto& m : mappings_) {
            const Graph& g = *m.graph;
            for (auto& t : g.match(self, std::nullopt, std::nullopt)) {
                auto* other = t.object().as_iri();
                if (!other)
                    continue;
                if (vocab::is_skos_mapping_property(t.predicate())) {
                    add({Direction::Outbound, t.predicate(), {*other}, {}, std::nullopt});
                } else if (t.predicate() == ext_.matches_combination) {
                    add({Direction::Outbound, t.predicate(), members_of(g, t.object()), {}, *other});
                }
            }
            for (auto& t : g.match(std::nullopt, std::nullopt, self)) {
                auto* other = t.subject().as_iri();
                if (!other)
                    continue;
                if (vocab::is_skos_mapping_property(t.predicate())) {
                    add({Direction::Inbound, t.predicate(), {*other}, {}, std::nullopt});
                } else if (t.predicate() == ext_.member) {
                    for (auto& source : g.subjects(ext_.matches_combination, t.subject()))
                        if (auto* s = source.as_iri())
                            add({Direction::Inbound, ext_.matches_combination, {*s}, {}, *other});
                }
            }
        }
        return out;
    }

    Graph export_merged() const
    {
        Graph out;
        for (auto& r : registrations_)
            out.insert_all(*r.graph);
        for (auto& m : mappings_)
            out.insert_all(*m.graph);
        return out;
    }

    /// Freezes the store and caches the merged graph for query serving.
    void seal()
    {
        if (sealed_)
            return;
        merged_ = export_merged();
        sealed_ = true;
    }

    bool sealed() const noexcept { return sealed_; }

    const Graph& merged() const
    {
        if (!sealed_)
            throw std::logic_error("merged() requires a sealed store");
        return merged_;
    }

    /// Pattern match over the merged store, or over one registration's graph
    /// when `scope` names it. nullopt when the scope is unknown.
    std::optional<QueryResult> query(const std::optional<std::string>& scope, const QueryPattern& pattern,
                                     std::size_t limit) const
    {
        const Graph* g = nullptr;
        Graph merged_now;
        if (scope) {
            const auto* reg = find_registration(*scope);
            if (!reg)
                return std::nullopt;
            g = reg->graph.get();
        } else if (sealed_) {
            g = &merged_;
        } else {
            merged_now = export_merged();
            g = &merged_now;
        }
        QueryResult result;
        result.triples = g->match(pattern.subject, pattern.predicate, pattern.object);
        if (result.triples.size() > limit) {
            result.triples.erase(result.triples.begin() + static_cast<std::ptrdiff_t>(limit), result.triples.end());
            result.truncated = true;
        }
        return result;
    }

    const std::vector<ThesaurusRegistration>& registrations() const noexcept { return registrations_; }
    const std::vector<MappingGraph>& mapping_graphs() const noexcept { return mappings_; }
    const vocab::Extension& extension() const noexcept { return ext_; }

private:
    void require_unsealed() const
    {
        if (sealed_)
            throw std::logic_error("store is sealed");
    }

    std::vector<Iri> members_of(const Graph& g, const Term& node) const
    {
        std::vector<Iri> out;
        for (auto& m : g.objects(node, ext_.member))
            if (auto* iri = m.as_iri())
                out.push_back(*iri);
        return out;
    }

    vocab::Extension ext_;
    std::vector<ThesaurusRegistration> registrations_;
    std::vector<MappingGraph> mappings_;
    Graph merged_;
    bool sealed_ = false;
};

} // namespace skosbridge
