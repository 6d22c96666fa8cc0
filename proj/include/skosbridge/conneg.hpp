#pragma once

// Accept / Accept-Language parsing with q-values.

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rdf.hpp"

namespace skosbridge {

struct MediaRange {
    std::string type;    // lowercase, may be "*"
    std::string subtype; // lowercase, may be "*"
    double q = 1.0;

    int specificity() const { return type == "*" ? 0 : (subtype == "*" ? 1 : 2); }

    bool matches(std::string_view media_type) const
    {
        auto slash = media_type.find('/');
        auto t = media_type.substr(0, slash);
        auto s = media_type.substr(slash + 1);
        return (type == "*" || type == t) && (subtype == "*" || subtype == s);
    }
};

namespace detail {
inline std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
        s.remove_suffix(1);
    return s;
}

// q parameter value; nullopt when malformed
inline std::optional<double> parse_qvalue(std::string_view params)
{
    double q = 1.0;
    while (!params.empty()) {
        auto semi = params.find(';');
        auto param = trim(params.substr(0, semi));
        params = semi == std::string_view::npos ? std::string_view() : params.substr(semi + 1);
        auto eq = param.find('=');
        if (eq == std::string_view::npos)
            continue;
        if (ascii_lowercase(trim(param.substr(0, eq))) != "q")
            continue;
        std::string value(trim(param.substr(eq + 1)));
        char* end = nullptr;
        q = std::strtod(value.c_str(), &end);
        if (value.empty() || end != value.c_str() + value.size() || q < 0.0 || q > 1.0)
            return std::nullopt;
    }
    return q;
}
} // namespace detail

/// Malformed ranges are skipped.
inline std::vector<MediaRange> parse_accept(std::string_view header)
{
    std::vector<MediaRange> out;
    while (!header.empty()) {
        auto comma = header.find(',');
        auto item = detail::trim(header.substr(0, comma));
        header = comma == std::string_view::npos ? std::string_view() : header.substr(comma + 1);
        if (item.empty())
            continue;
        auto semi = item.find(';');
        auto range = detail::trim(item.substr(0, semi));
        auto slash = range.find('/');
        if (slash == std::string_view::npos || slash == 0 || slash + 1 == range.size())
            continue;
        auto q = detail::parse_qvalue(semi == std::string_view::npos ? std::string_view() : item.substr(semi + 1));
        if (!q)
            continue;
        MediaRange r{detail::ascii_lowercase(range.substr(0, slash)), detail::ascii_lowercase(range.substr(slash + 1)),
                     *q};
        if (r.type == "*" && r.subtype != "*")
            continue;
        out.push_back(std::move(r));
    }
    return out;
}

/// Quality the client assigns to `media_type`: the q of the most specific
/// matching range, 0 when nothing matches.
inline double quality_of(const std::vector<MediaRange>& ranges, std::string_view media_type)
{
    int best_specificity = -1;
    double q = 0.0;
    for (auto& r : ranges) {
        if (r.matches(media_type) && r.specificity() > best_specificity) {
            best_specificity = r.specificity();
            q = r.q;
        }
    }
    return q;
}

/// Picks the offer with the highest q; ties go to the earlier offer. A
/// missing or empty header accepts the first offer. nullopt means 406.
inline std::optional<std::string> negotiate(std::optional<std::string_view> header,
                                            const std::vector<std::string>& offers)
{
    if (offers.empty())
        return std::nullopt;
    if (!header || detail::trim(*header).empty())
        return offers.front();
    auto ranges = parse_accept(*header);
    if (ranges.empty())
        return offers.front();
    const std::string* best = nullptr;
    double best_q = 0.0;
    for (auto& offer : offers) {
        double q = quality_of(ranges, offer);
        if (q > best_q) {
            best_q = q;
            best = &offer;
        }
    }
    if (!best)
        return std::nullopt;
    return *best;
}

/// Language tags in descending q order (stable), without `*` or q=0 entries.
inline std::vector<std::string> parse_accept_language(std::string_view header)
{
    struct Entry {
        std::string tag;
        double q;
    };
    std::vector<Entry> entries;
    while (!header.empty()) {
        auto comma = header.find(',');
        auto item = detail::trim(header.substr(0, comma));
        header = comma == std::string_view::npos ? std::string_view() : header.substr(comma + 1);
        auto semi = item.find(';');
        auto tag = detail::ascii_lowercase(detail::trim(item.substr(0, semi)));
        auto q = detail::parse_qvalue(semi == std::string_view::npos ? std::string_view() : item.substr(semi + 1));
        if (tag.empty() || tag == "*" || !q || *q <= 0.0)
            continue;
        entries.push_back({std::move(tag), *q});
    }
    std::stable_sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) { return a.q > b.q; });
    std::vector<std::string> out;
    for (auto& e : entries)
        out.push_back(std::move(e.tag));
    return out;
}

} // namespace skosbridge
