#pragma once

// Machine-readable findings produced by validation and conversion.

#include <algorithm>
#include <array>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "rdf.hpp"

namespace skosbridge {

enum class Severity { Error, Warning, Info };

inline std::string_view to_string(Severity s)
{
    switch (s) {
    case Severity::Error: return "error";
    case Severity::Warning: return "warning";
    case Severity::Info: return "info";
    }
    return "?";
}

enum class DiagCode {
    NtSyntax,
    XlNoLiteralForm,
    OrphanConcept,
    DuplicatePrefLabel,
    LabelClash,
    MappingSameScheme,
    MappingNonConcept,
    DanglingMappingTarget,
    MappingGraphForeignTriple,
    XwalkSyntax,
    XwalkSameScheme,
    XwalkOk,
    XwalkNonPreferred,
    XwalkPromoted,
    XwalkAmbiguous,
    XwalkAmbiguousResolved,
    XwalkUnresolved,
    XwalkBadCombination,
    XwalkNoInverse,
};

struct CodeInfo {
    DiagCode code;
    std::string_view name;
    Severity severity;
    std::string_view trigger;
};

/// The closed set of diagnostic codes. Names are stable; docs/diagnostics.md
/// mirrors this table.
inline constexpr std::array<CodeInfo, 19> kDiagnosticRegistry{{
    {DiagCode::NtSyntax, "NT_SYNTAX", Severity::Error, "N-Triples line that does not parse"},
    {DiagCode::XlNoLiteralForm, "XL_NO_LITERAL_FORM", Severity::Warning,
     "SKOS-XL label resource without skosxl:literalForm"},
    {DiagCode::OrphanConcept, "ORPHAN_CONCEPT", Severity::Warning,
     "skos:Concept with no inScheme/topConceptOf/hasTopConcept link"},
    {DiagCode::DuplicatePrefLabel, "DUPLICATE_PREFLABEL", Severity::Error,
     "two prefLabels with the same language on one concept"},
    {DiagCode::LabelClash, "LABEL_CLASH", Severity::Error,
     "same (language, text) pair used in two of pref/alt/hidden on one concept"},
    {DiagCode::MappingSameScheme, "MAPPING_SAME_SCHEME", Severity::Warning,
     "SKOS mapping property between two concepts of one scheme"},
    {DiagCode::MappingNonConcept, "MAPPING_NON_CONCEPT", Severity::Error,
     "SKOS mapping property whose subject or object is a described non-concept"},
    {DiagCode::DanglingMappingTarget, "DANGLING_MAPPING_TARGET", Severity::Info,
     "mapping endpoint not described by any loaded graph"},
    {DiagCode::MappingGraphForeignTriple, "MAPPING_GRAPH_FOREIGN_TRIPLE", Severity::Warning,
     "mapping graph triple that is neither a mapping nor extension vocabulary"},
    {DiagCode::XwalkSyntax, "XWALK_SYNTAX", Severity::Error, "malformed crosswalk header or data line"},
    {DiagCode::XwalkSameScheme, "XWALK_SAME_SCHEME", Severity::Error,
     "crosswalk header names the same scheme as source and target"},
    {DiagCode::XwalkOk, "XWALK_OK", Severity::Info, "entry converted with both sides preferred"},
    {DiagCode::XwalkNonPreferred, "XWALK_NONPREFERRED", Severity::Error,
     "term resolves only to an alt/hidden label (strict policy)"},
    {DiagCode::XwalkPromoted, "XWALK_PROMOTED", Severity::Warning,
     "non-preferred term promoted to its owning concept (promote policy)"},
    {DiagCode::XwalkAmbiguous, "XWALK_AMBIGUOUS", Severity::Error,
     "term matches several concepts (fail policy)"},
    {DiagCode::XwalkAmbiguousResolved, "XWALK_AMBIGUOUS_RESOLVED", Severity::Warning,
     "ambiguous term resolved to the lowest IRI (first-by-sorted-IRI policy)"},
    {DiagCode::XwalkUnresolved, "XWALK_UNRESOLVED", Severity::Error, "term not found in the scheme"},
    {DiagCode::XwalkBadCombination, "XWALK_BAD_COMBINATION", Severity::Error,
     "two-target entry that is not an equivalence or whose members coincide"},
    {DiagCode::XwalkNoInverse, "XWALK_NO_INVERSE", Severity::Info,
     "combination mapping has no SKOS inverse and was skipped"},
}};

inline const CodeInfo& code_info(DiagCode code)
{
    return *std::find_if(kDiagnosticRegistry.begin(), kDiagnosticRegistry.end(),
                         [code](const CodeInfo& info) { return info.code == code; });
}

inline std::string_view to_string(DiagCode code) { return code_info(code).name; }

struct SourceLocation {
    std::string file;
    std::size_t line = 0;

    friend bool operator==(const SourceLocation&, const SourceLocation&) = default;
};

struct Diagnostic {
    Severity severity;
    DiagCode code;
    std::optional<Iri> subject;
    std::string message;
    std::optional<SourceLocation> location;

    friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

inline Diagnostic make_diagnostic(DiagCode code, std::optional<Iri> subject, std::string message,
                                  std::optional<SourceLocation> location = std::nullopt)
{
    return Diagnostic{code_info(code).severity, code, std::move(subject), std::move(message), std::move(location)};
}

inline bool has_errors(const std::vector<Diagnostic>& diags)
{
    return std::any_of(diags.begin(), diags.end(), [](const Diagnostic& d) { return d.severity == Severity::Error; });
}

inline std::vector<std::string_view> codes_of(const std::vector<Diagnostic>& diags)
{
    std::vector<std::string_view> out;
    for (auto& d : diags)
        out.push_back(to_string(d.code));
    return out;
}

namespace detail {
inline std::string single_line(std::string_view s)
{
    std::string out(s);
    std::replace_if(out.begin(), out.end(), [](char c) { return c == '\t' || c == '\n' || c == '\r'; }, ' ');
    return out;
}
} // namespace detail

/// `severity<TAB>code<TAB>subject<TAB>message`, one record per line. The
/// source location, when known, prefixes the message as `file:line: ` (or
/// `file: ` for whole-file findings, which carry line 0).
inline void write_tsv(std::ostream& out, const std::vector<Diagnostic>& diags)
{
    for (const auto& d : diags) {
        out << to_string(d.severity) << '\t' << to_string(d.code) << '\t'
            << (d.subject ? detail::single_line(d.subject->str()) : std::string()) << '\t';
        if (d.location) {
            out << detail::single_line(d.location->file);
            if (d.location->line)
                out << ':' << d.location->line;
            out << ": ";
        }
        out << detail::single_line(d.message) << '\n';
    }
}

inline nlohmann::json to_json(const std::vector<Diagnostic>& diags)
{
    auto arr = nlohmann::json::array();
    for (const auto& d : diags) {
        nlohmann::json rec{{"severity", to_string(d.severity)},
                           {"code", to_string(d.code)},
                           {"subject", d.subject ? nlohmann::json(d.subject->str()) : nlohmann::json(nullptr)},
                           {"message", d.message}};
        if (d.location) {
            rec["file"] = d.location->file;
            rec["line"] = d.location->line;
        }
        arr.push_back(std::move(rec));
    }
    return arr;
}

} // namespace skosbridge
