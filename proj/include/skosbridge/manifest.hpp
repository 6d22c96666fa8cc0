#pragma once

// JSON store manifest: which thesauri and mapping files make up a store, and
// how the service exposes them. Relative paths resolve against the manifest's
// directory. See docs/manifest.md for the key reference.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "diagnostic.hpp"
#include "multistore.hpp"
#include "ntriples.hpp"
#include "skos.hpp"

namespace skosbridge {

class ManifestError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ThesaurusEntry {
    std::string id;
    std::string title;
    std::string base_iri;
    std::filesystem::path file;
    std::string default_lang;
    std::string path_segment; // defaults to id
    PrefixMap prefixes;
};

struct MappingEntry {
    std::string id;
    std::filesystem::path file;
};

struct ServiceConfig {
    std::string host = "127.0.0.1";
    int port = 8080;
    std::string external_base_url; // empty: Location headers are host-relative
    std::size_t result_limit = 10000;
};

struct Manifest {
    std::filesystem::path path;
    std::optional<std::string> extension_namespace;
    std::vector<ThesaurusEntry> thesauri;
    std::vector<MappingEntry> mappings;
    ServiceConfig service;
};

/// Splits `host:port` (or a bare port). Throws ManifestError.
inline std::pair<std::string, int> parse_listen_address(const std::string& value)
{
    std::string host = "127.0.0.1";
    std::string port = value;
    if (auto colon = value.rfind(':'); colon != std::string::npos) {
        host = value.substr(0, colon);
        port = value.substr(colon + 1);
    }
    try {
        std::size_t used = 0;
        int p = std::stoi(port, &used);
        if (used != port.size() || p < 0 || p > 65535)
            throw std::out_of_range("port");
        return {host.empty() ? "127.0.0.1" : host, p};
    } catch (const std::logic_error&) {
        throw ManifestError("invalid listen address '" + value + "'");
    }
}

inline Manifest parse_manifest(const std::string& text, const std::filesystem::path& manifest_path)
{
    using json = nlohmann::ordered_json;
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ManifestError(manifest_path.string() + ": " + e.what());
    }
    if (!doc.is_object())
        throw ManifestError(manifest_path.string() + ": top level must be an object");

    auto base_dir = manifest_path.parent_path();
    auto resolve = [&](const std::string& p) {
        std::filesystem::path path(p);
        return path.is_absolute() ? path : base_dir / path;
    };
    auto require_string = [&](const json& obj, const char* key, const std::string& where) {
        if (!obj.contains(key) || !obj[key].is_string() || obj[key].get<std::string>().empty())
            throw ManifestError(where + ": missing string key '" + key + "'");
        return obj[key].get<std::string>();
    };

    Manifest m;
    m.path = manifest_path;
    try {
        if (doc.contains("extension_namespace")) {
            auto ns = doc["extension_namespace"].get<std::string>();
            if (!is_valid_iri(ns))
                throw ManifestError("extension_namespace is not an absolute IRI");
            m.extension_namespace = ns;
        }
        for (auto& t : doc.value("thesauri", json::array())) {
            std::string where = "thesauri[" + std::to_string(m.thesauri.size()) + "]";
            ThesaurusEntry e;
            e.id = require_string(t, "id", where);
            e.base_iri = require_string(t, "base_iri", where);
            if (!is_valid_iri(e.base_iri))
                throw ManifestError(where + ": base_iri is not an absolute IRI");
            e.file = resolve(require_string(t, "file", where));
            e.title = t.value("title", e.id);
            e.default_lang = detail::ascii_lowercase(t.value("default_lang", std::string()));
            e.path_segment = t.value("path_segment", e.id);
            if (e.path_segment.empty() || e.path_segment.find('/') != std::string::npos)
                throw ManifestError(where + ": path_segment must be a single non-empty path segment");
            if (t.contains("prefixes")) {
                if (!t["prefixes"].is_object())
                    throw ManifestError(where + ": prefixes must be an object");
                for (auto& [prefix, ns] : t["prefixes"].items()) {
                    auto iri = Iri::parse(ns.get<std::string>());
                    if (!iri)
                        throw ManifestError(where + ": prefix '" + prefix + "' is not an absolute IRI");
                    e.prefixes.add(prefix, *iri);
                }
            }
            m.thesauri.push_back(std::move(e));
        }
        for (auto& mp : doc.value("mappings", json::array())) {
            std::string where = "mappings[" + std::to_string(m.mappings.size()) + "]";
            m.mappings.push_back({require_string(mp, "id", where), resolve(require_string(mp, "file", where))});
        }
        if (doc.contains("service")) {
            const auto& s = doc["service"];
            if (s.contains("listen")) {
                auto [host, port] = parse_listen_address(s["listen"].get<std::string>());
                m.service.host = host;
                m.service.port = port;
            }
            m.service.external_base_url = s.value("external_base_url", std::string());
            while (!m.service.external_base_url.empty() && m.service.external_base_url.back() == '/')
                m.service.external_base_url.pop_back();
            auto limit = s.value("result_limit", std::int64_t{10000});
            if (limit <= 0)
                throw ManifestError("service.result_limit must be positive");
            m.service.result_limit = static_cast<std::size_t>(limit);
        }
    } catch (const json::exception& e) {
        throw ManifestError(manifest_path.string() + ": " + e.what());
    } catch (const std::invalid_argument& e) {
        throw ManifestError(manifest_path.string() + ": " + e.what());
    }
    return m;
}

inline std::string read_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ManifestError("cannot read " + path.string());
    return std::string(std::istreambuf_iterator<char>(in), {});
}

inline Manifest load_manifest(const std::filesystem::path& path) { return parse_manifest(read_file(path), path); }

inline std::vector<Diagnostic> parse_errors_to_diagnostics(const std::vector<ParseError>& errors,
                                                           const std::string& file)
{
    std::vector<Diagnostic> out;
    for (auto& e : errors)
        out.push_back(make_diagnostic(DiagCode::NtSyntax, std::nullopt, e.reason, SourceLocation{file, e.line}));
    return out;
}

struct StoreBuild {
    std::shared_ptr<const MultiStore> store;
    std::vector<Diagnostic> diagnostics;
};

/// Loads every file named by the manifest into a sealed store. SKOS-XL labels
/// are dumbed down at load time. I/O and registration conflicts throw
/// ManifestError; data problems come back as diagnostics.
inline StoreBuild build_store(const Manifest& m)
{
    auto ext = m.extension_namespace ? vocab::Extension(Iri(*m.extension_namespace)) : vocab::Extension();
    auto store = std::make_shared<MultiStore>(ext);
    StoreBuild out;
    try {
        for (auto& t : m.thesauri) {
            auto parsed = parse_ntriples(read_file(t.file));
            auto diags = parse_errors_to_diagnostics(parsed.errors, t.file.string());
            auto xl = resolve_xl_labels(parsed.graph);
            diags.insert(diags.end(), xl.diagnostics.begin(), xl.diagnostics.end());
            out.diagnostics.insert(out.diagnostics.end(), diags.begin(), diags.end());
            store->register_thesaurus({t.id, Iri(t.base_iri), std::make_shared<const Graph>(std::move(xl.graph)),
                                       t.prefixes, t.title, t.default_lang});
        }
        for (auto& mp : m.mappings) {
            auto parsed = parse_ntriples(read_file(mp.file));
            auto diags = parse_errors_to_diagnostics(parsed.errors, mp.file.string());
            out.diagnostics.insert(out.diagnostics.end(), diags.begin(), diags.end());
            auto load = store->load_mappings(mp.id, std::move(parsed.graph));
            out.diagnostics.insert(out.diagnostics.end(), load.begin(), load.end());
        }
    } catch (const StoreError& e) {
        throw ManifestError(e.what());
    }
    store->seal();
    out.store = std::move(store);
    return out;
}

} // namespace skosbridge
