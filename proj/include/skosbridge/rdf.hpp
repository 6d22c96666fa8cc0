#pragma once

// RDF term model and an indexed in-memory triple set.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

namespace skosbridge {

namespace detail {

inline bool is_ascii_alpha(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }
inline bool is_ascii_digit(char c) { return c >= '0' && c <= '9'; }
inline bool is_ascii_alnum(char c) { return is_ascii_alpha(c) || is_ascii_digit(c); }

inline char ascii_lower(char c) { return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c; }

inline std::string ascii_lowercase(std::string_view s)
{
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(), ascii_lower);
    return out;
}

inline void hash_combine(std::size_t& seed, std::size_t value)
{
    seed ^= value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

} // namespace detail

/// True when `s` is usable as an absolute IRI: non-empty, no whitespace or
/// `<`, `>`, `"`, and a scheme (`[A-Za-z][A-Za-z0-9+.-]*`) terminated by `:`
/// before any `/`.
inline bool is_valid_iri(std::string_view s)
{
    if (s.empty())
        return false;
    for (char c : s) {
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v' || c == '<' ||
            c == '>' || c == '"')
            return false;
    }
    auto colon = s.find(':');
    if (colon == std::string_view::npos || colon == 0)
        return false;
    auto slash = s.find('/');
    if (slash != std::string_view::npos && slash < colon)
        return false;
    if (!detail::is_ascii_alpha(s[0]))
        return false;
    for (std::size_t i = 1; i < colon; ++i) {
        char c = s[i];
        if (!detail::is_ascii_alnum(c) && c != '+' && c != '.' && c != '-')
            return false;
    }
    return true;
}

/// Language tags are stored lowercased and must match
/// `[a-z]{2,3}(-[a-z0-9]{1,8})*`.
inline bool is_valid_lang_tag(std::string_view tag)
{
    std::size_t i = 0;
    while (i < tag.size() && tag[i] >= 'a' && tag[i] <= 'z')
        ++i;
    if (i < 2 || i > 3)
        return false;
    while (i < tag.size()) {
        if (tag[i] != '-')
            return false;
        std::size_t start = ++i;
        while (i < tag.size() && ((tag[i] >= 'a' && tag[i] <= 'z') || detail::is_ascii_digit(tag[i])))
            ++i;
        std::size_t len = i - start;
        if (len < 1 || len > 8)
            return false;
    }
    return true;
}

class Iri {
public:
    explicit Iri(std::string value) : value_(std::move(value))
    {
        if (!is_valid_iri(value_))
            throw std::invalid_argument("not an absolute IRI: " + value_);
    }

    static std::optional<Iri> parse(std::string_view value)
    {
        if (!is_valid_iri(value))
            return std::nullopt;
        return Iri(std::string(value));
    }

    const std::string& str() const noexcept { return value_; }

    bool starts_with(std::string_view prefix) const noexcept
    {
        return std::string_view(value_).substr(0, prefix.size()) == prefix;
    }

    friend bool operator==(const Iri&, const Iri&) = default;
    friend auto operator<=>(const Iri& a, const Iri& b) { return a.value_.compare(b.value_) <=> 0; }

private:
    std::string value_;
};

class BlankNode {
public:
    explicit BlankNode(std::string label) : label_(std::move(label))
    {
        if (label_.empty() || !std::all_of(label_.begin(), label_.end(), detail::is_ascii_alnum))
            throw std::invalid_argument("invalid blank node label: " + label_);
    }

    const std::string& label() const noexcept { return label_; }

    friend bool operator==(const BlankNode&, const BlankNode&) = default;
    friend auto operator<=>(const BlankNode& a, const BlankNode& b)
    {
        return a.label_.compare(b.label_) <=> 0;
    }

private:
    std::string label_;
};

/// A literal carries a lexical form and at most one of a language tag or a
/// datatype. Literals compare by lexical form, then tag, then datatype.
class Literal {
public:
    explicit Literal(std::string lexical) : lexical_(std::move(lexical)) {}

    static Literal lang_string(std::string lexical, std::string_view lang)
    {
        Literal lit(std::move(lexical));
        lit.lang_ = detail::ascii_lowercase(lang);
        if (!is_valid_lang_tag(lit.lang_))
            throw std::invalid_argument("invalid language tag: " + std::string(lang));
        return lit;
    }

    static Literal typed(std::string lexical, Iri datatype)
    {
        Literal lit(std::move(lexical));
        lit.datatype_ = std::move(datatype);
        return lit;
    }

    const std::string& lexical() const noexcept { return lexical_; }
    /// Empty when the literal has no language tag.
    const std::string& lang() const noexcept { return lang_; }
    const std::optional<Iri>& datatype() const noexcept { return datatype_; }

    friend bool operator==(const Literal&, const Literal&) = default;
    friend std::strong_ordering operator<=>(const Literal& a, const Literal& b)
    {
        if (auto c = a.lexical_.compare(b.lexical_) <=> 0; c != 0)
            return c;
        if (auto c = a.lang_.compare(b.lang_) <=> 0; c != 0)
            return c;
        if (a.datatype_.has_value() != b.datatype_.has_value())
            return a.datatype_.has_value() ? std::strong_ordering::greater : std::strong_ordering::less;
        if (!a.datatype_)
            return std::strong_ordering::equal;
        return *a.datatype_ <=> *b.datatype_;
    }

private:
    std::string lexical_;
    std::string lang_;
    std::optional<Iri> datatype_;
};

/// IRIs sort before blank nodes, blank nodes before literals; within a kind
/// the raw UTF-8 bytes decide.
class Term {
public:
    Term(Iri iri) : value_(std::move(iri)) {}
    Term(BlankNode node) : value_(std::move(node)) {}
    Term(Literal literal) : value_(std::move(literal)) {}

    bool is_iri() const noexcept { return std::holds_alternative<Iri>(value_); }
    bool is_blank() const noexcept { return std::holds_alternative<BlankNode>(value_); }
    bool is_literal() const noexcept { return std::holds_alternative<Literal>(value_); }

    const Iri& iri() const { return std::get<Iri>(value_); }
    const BlankNode& blank() const { return std::get<BlankNode>(value_); }
    const Literal& literal() const { return std::get<Literal>(value_); }

    const Iri* as_iri() const noexcept { return std::get_if<Iri>(&value_); }
    const Literal* as_literal() const noexcept { return std::get_if<Literal>(&value_); }

    const std::variant<Iri, BlankNode, Literal>& variant() const noexcept { return value_; }

    friend bool operator==(const Term&, const Term&) = default;
    friend std::strong_ordering operator<=>(const Term& a, const Term& b)
    {
        if (a.value_.index() != b.value_.index())
            return a.value_.index() <=> b.value_.index();
        return std::visit(
            [&b](const auto& lhs) -> std::strong_ordering {
                using T = std::decay_t<decltype(lhs)>;
                return lhs <=> std::get<T>(b.value_);
            },
            a.value_);
    }

private:
    std::variant<Iri, BlankNode, Literal> value_;
};

struct TermHash {
    std::size_t operator()(const Term& t) const noexcept
    {
        std::hash<std::string> h;
        std::size_t seed = t.variant().index();
        if (auto* iri = t.as_iri()) {
            detail::hash_combine(seed, h(iri->str()));
        } else if (auto* lit = t.as_literal()) {
            detail::hash_combine(seed, h(lit->lexical()));
            detail::hash_combine(seed, h(lit->lang()));
            if (lit->datatype())
                detail::hash_combine(seed, h(lit->datatype()->str()));
        } else {
            detail::hash_combine(seed, h(t.blank().label()));
        }
        return seed;
    }
};

class Triple {
public:
    Triple(Term subject, Iri predicate, Term object)
        : subject_(std::move(subject)), predicate_(std::move(predicate)), object_(std::move(object))
    {
        if (subject_.is_literal())
            throw std::invalid_argument("literal in subject position");
    }

    const Term& subject() const noexcept { return subject_; }
    const Iri& predicate() const noexcept { return predicate_; }
    const Term& object() const noexcept { return object_; }

    friend bool operator==(const Triple&, const Triple&) = default;
    friend std::strong_ordering operator<=>(const Triple& a, const Triple& b)
    {
        if (auto c = a.subject_ <=> b.subject_; c != 0)
            return c;
        if (auto c = a.predicate_ <=> b.predicate_; c != 0)
            return c;
        return a.object_ <=> b.object_;
    }

private:
    Term subject_;
    Iri predicate_;
    Term object_;
};

/// Set of triples kept in canonical order, with one index per position.
///
/// Index entries point into the owning std::set, whose nodes never move;
/// copies rebuild the indexes against their own nodes.
class Graph {
public:
    using const_iterator = std::set<Triple>::const_iterator;

    Graph() = default;
    Graph(const Graph& other) : triples_(other.triples_) { reindex(); }
    Graph(Graph&&) noexcept = default;
    Graph& operator=(const Graph& other)
    {
        if (this != &other) {
            triples_ = other.triples_;
            reindex();
        }
        return *this;
    }
    Graph& operator=(Graph&&) noexcept = default;

    /// Returns true iff the triple was not already present.
    bool insert(Triple t)
    {
        auto [it, inserted] = triples_.insert(std::move(t));
        if (inserted)
            index(*it);
        return inserted;
    }

    void insert_all(const Graph& other)
    {
        for (const auto& t : other)
            insert(t);
    }

    bool contains(const Triple& t) const { return triples_.count(t) != 0; }
    std::size_t size() const noexcept { return triples_.size(); }
    bool empty() const noexcept { return triples_.empty(); }

    const_iterator begin() const noexcept { return triples_.begin(); }
    const_iterator end() const noexcept { return triples_.end(); }

    /// Triples matching every bound position, in canonical order.
    std::vector<Triple> match(const std::optional<Term>& subject, const std::optional<Iri>& predicate,
                              const std::optional<Term>& object) const
    {
        std::vector<Triple> out;
        if (!subject && !predicate && !object) {
            out.assign(triples_.begin(), triples_.end());
            return out;
        }

        static const std::vector<const Triple*> kNone;
        const std::vector<const Triple*>* candidates = nullptr;
        auto narrow = [&](const Index& idx, const Term& key) {
            auto it = idx.find(key);
            const auto* list = it == idx.end() ? &kNone : &it->second;
            if (!candidates || list->size() < candidates->size())
                candidates = list;
        };
        if (subject)
            narrow(by_subject_, *subject);
        if (predicate)
            narrow(by_predicate_, Term(*predicate));
        if (object)
            narrow(by_object_, *object);

        std::vector<const Triple*> hits;
        for (const Triple* t : *candidates) {
            if ((!subject || t->subject() == *subject) && (!predicate || t->predicate() == *predicate) &&
                (!object || t->object() == *object))
                hits.push_back(t);
        }
        std::sort(hits.begin(), hits.end(), [](const Triple* a, const Triple* b) { return *a < *b; });
        out.reserve(hits.size());
        for (const Triple* t : hits)
            out.push_back(*t);
        return out;
    }

    /// Objects of (subject, predicate, ?) in canonical order.
    std::vector<Term> objects(const Term& subject, const Iri& predicate) const
    {
        std::vector<Term> out;
        for (auto& t : match(subject, predicate, std::nullopt))
            out.push_back(t.object());
        return out;
    }

    std::vector<Term> subjects(const Iri& predicate, const Term& object) const
    {
        std::vector<Term> out;
        for (auto& t : match(std::nullopt, predicate, object))
            out.push_back(t.subject());
        return out;
    }

    bool has_subject(const Term& subject) const { return by_subject_.count(subject) != 0; }

    friend bool operator==(const Graph& a, const Graph& b) { return a.triples_ == b.triples_; }

private:
    using Index = std::unordered_map<Term, std::vector<const Triple*>, TermHash>;

    void index(const Triple& t)
    {
        by_subject_[t.subject()].push_back(&t);
        by_predicate_[Term(t.predicate())].push_back(&t);
        by_object_[t.object()].push_back(&t);
    }

    void reindex()
    {
        by_subject_.clear();
        by_predicate_.clear();
        by_object_.clear();
        for (const auto& t : triples_)
            index(t);
    }

    std::set<Triple> triples_;
    Index by_subject_;
    Index by_predicate_;
    Index by_object_;
};

/// Ordered prefix declarations. Prefixes are unique; namespaces may repeat.
class PrefixMap {
public:
    PrefixMap() = default;
    PrefixMap(std::initializer_list<std::pair<std::string, std::string>> entries)
    {
        for (auto& [prefix, ns] : entries)
            add(prefix, Iri(ns));
    }

    void add(std::string prefix, Iri ns)
    {
        if (find(prefix))
            throw std::invalid_argument("duplicate prefix: " + prefix);
        entries_.emplace_back(std::move(prefix), std::move(ns));
    }

    /// Adds the declaration unless the prefix is already taken.
    bool add_if_absent(std::string prefix, Iri ns)
    {
        if (find(prefix))
            return false;
        entries_.emplace_back(std::move(prefix), std::move(ns));
        return true;
    }

    const Iri* find(std::string_view prefix) const
    {
        for (auto& [p, ns] : entries_)
            if (p == prefix)
                return &ns;
        return nullptr;
    }

    /// `prefix:local` to a full IRI, or nullopt when the prefix is unknown.
    std::optional<Iri> expand(std::string_view curie) const
    {
        auto colon = curie.find(':');
        if (colon == std::string_view::npos)
            return std::nullopt;
        const Iri* ns = find(curie.substr(0, colon));
        if (!ns)
            return std::nullopt;
        return Iri::parse(ns->str() + std::string(curie.substr(colon + 1)));
    }

    const std::vector<std::pair<std::string, Iri>>& entries() const noexcept { return entries_; }
    bool empty() const noexcept { return entries_.empty(); }

private:
    std::vector<std::pair<std::string, Iri>> entries_;
};

} // namespace skosbridge
