#pragma once

// The pipeline behind each command-line subcommand. Exit codes:
//   0  success, no Error diagnostics
//   1  completed, but Error diagnostics were reported
//   2  could not run (I/O, manifest, invocation)

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "crosswalk.hpp"
#include "diagnostic.hpp"
#include "http_server.hpp"
#include "ldservice.hpp"
#include "manifest.hpp"
#include "multistore.hpp"
#include "ntriples.hpp"
#include "skos.hpp"
#include "vocab.hpp"

namespace skosbridge::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDiagnostics = 1;
inline constexpr int kExitCannotRun = 2;

/// Environment variable that overrides the manifest's listen address.
inline constexpr const char* kListenEnv = "SKOSBRIDGE_LISTEN";

enum class ReportFormat { Tsv, Json };

inline void write_report(std::ostream& out, const std::vector<Diagnostic>& diags, ReportFormat format)
{
    if (format == ReportFormat::Json)
        out << to_json(diags).dump(2) << '\n';
    else
        write_tsv(out, diags);
}

inline int exit_code_for(const std::vector<Diagnostic>& diags)
{
    return has_errors(diags) ? kExitDiagnostics : kExitOk;
}

struct LoadedThesaurus {
    Graph graph;
    std::vector<Diagnostic> diagnostics;
};

/// Parse + SKOS-XL dumbing-down. Throws std::runtime_error when unreadable.
inline LoadedThesaurus load_thesaurus(const std::filesystem::path& path)
{
    auto parsed = parse_ntriples(read_file(path));
    LoadedThesaurus out;
    out.diagnostics = parse_errors_to_diagnostics(parsed.errors, path.string());
    auto xl = resolve_xl_labels(parsed.graph);
    for (auto& d : xl.diagnostics) {
        d.location = SourceLocation{path.string(), 0};
        out.diagnostics.push_back(std::move(d));
    }
    out.graph = std::move(xl.graph);
    return out;
}

inline bool write_file(const std::filesystem::path& path, const std::string& content)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        return false;
    out << content;
    return static_cast<bool>(out.flush());
}

struct ValidateOptions {
    std::vector<std::filesystem::path> files;
    ReportFormat format = ReportFormat::Tsv;
};

inline int cmd_validate(const ValidateOptions& opts, std::ostream& report, std::ostream& err)
{
    std::vector<Diagnostic> all;
    for (auto& file : opts.files) {
        try {
            auto loaded = load_thesaurus(file);
            all.insert(all.end(), loaded.diagnostics.begin(), loaded.diagnostics.end());
            for (auto& d : validate_skos(loaded.graph)) {
                d.location = SourceLocation{file.string(), 0};
                all.push_back(std::move(d));
            }
        } catch (const std::runtime_error& e) {
            err << "error: " << e.what() << '\n';
            return kExitCannotRun;
        }
    }
    write_report(report, all, opts.format);
    return exit_code_for(all);
}

struct ConvertOptions {
    std::filesystem::path source;
    std::filesystem::path target;
    std::filesystem::path crosswalk;
    std::filesystem::path output;
    ConversionPolicy policy;
    std::string extension_namespace{vocab::kDefaultExtension};
    ReportFormat format = ReportFormat::Tsv;
    std::optional<std::filesystem::path> report_file;
};

/// Writes the mapping N-Triples even when some entries fail, so the
/// successful subset is never lost.
inline int cmd_convert(const ConvertOptions& opts, std::ostream& report, std::ostream& err)
{
    auto ext_ns = Iri::parse(opts.extension_namespace);
    if (!ext_ns) {
        err << "error: extension namespace '" << opts.extension_namespace << "' is not an absolute IRI\n";
        return kExitCannotRun;
    }
    vocab::Extension ext(*ext_ns);

    std::vector<Diagnostic> diags;
    Graph mapping_graph;
    try {
        auto source = load_thesaurus(opts.source);
        auto target = load_thesaurus(opts.target);
        std::istringstream xwalk_in(read_file(opts.crosswalk));
        auto xwalk = parse_crosswalk(xwalk_in, opts.crosswalk.string());

        diags.insert(diags.end(), source.diagnostics.begin(), source.diagnostics.end());
        diags.insert(diags.end(), target.diagnostics.begin(), target.diagnostics.end());
        diags.insert(diags.end(), xwalk.diagnostics.begin(), xwalk.diagnostics.end());

        SchemeView source_view(source.graph);
        SchemeView target_view(target.graph);
        auto conversion =
            convert_crosswalk(xwalk.entries, source_view, target_view, opts.policy, ext, opts.crosswalk.string());
        diags.insert(diags.end(), conversion.diagnostics.begin(), conversion.diagnostics.end());
        mapping_graph = edges_to_graph(conversion.edges, ext);
    } catch (const std::runtime_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitCannotRun;
    }

    if (!write_file(opts.output, serialize_ntriples(mapping_graph))) {
        err << "error: cannot write " << opts.output.string() << '\n';
        return kExitCannotRun;
    }
    if (opts.report_file) {
        std::ofstream out(*opts.report_file, std::ios::trunc);
        if (!out) {
            err << "error: cannot write " << opts.report_file->string() << '\n';
            return kExitCannotRun;
        }
        write_report(out, diags, opts.format);
    } else {
        write_report(report, diags, opts.format);
    }
    return exit_code_for(diags);
}

struct MergeOptions {
    std::filesystem::path manifest;
    std::filesystem::path output;
};

inline int cmd_merge(const MergeOptions& opts, std::ostream& err)
{
    StoreBuild build;
    try {
        build = build_store(load_manifest(opts.manifest));
    } catch (const std::runtime_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitCannotRun;
    }
    write_tsv(err, build.diagnostics);
    if (!write_file(opts.output, serialize_ntriples(build.store->merged()))) {
        err << "error: cannot write " << opts.output.string() << '\n';
        return kExitCannotRun;
    }
    return exit_code_for(build.diagnostics);
}

/// CLI term syntax: N-Triples terms, CURIEs over the manifest and built-in
/// prefixes, or bare absolute IRIs. Same precedence as the HTTP endpoint.
inline std::optional<Term> expand_cli_term(const std::string& token, const PrefixMap& prefixes, std::string& error)
{
    if (!token.empty() && (token.front() == '<' || token.front() == '"' || token.front() == '_'))
        return parse_term(token, &error);
    if (auto iri = prefixes.expand(token))
        return Term(*iri);
    if (auto iri = Iri::parse(token))
        return Term(*iri);
    error = "cannot interpret '" + token + "' as a term";
    return std::nullopt;
}

inline PrefixMap cli_prefixes(const MultiStore& store)
{
    PrefixMap map;
    for (auto& reg : store.registrations())
        for (auto& [p, ns] : reg.prefixes.entries())
            map.add_if_absent(p, ns);
    auto builtin = vocab::builtin_prefixes();
    for (auto& [p, ns] : builtin.entries())
        map.add_if_absent(p, ns);
    map.add_if_absent("ext", store.extension().ns);
    return map;
}

struct QueryOptions {
    std::filesystem::path manifest;
    std::optional<std::string> subject;
    std::optional<std::string> predicate;
    std::optional<std::string> object;
    std::optional<std::string> scope;
};

inline int cmd_query(const QueryOptions& opts, std::ostream& out, std::ostream& err)
{
    StoreBuild build;
    Manifest manifest;
    try {
        manifest = load_manifest(opts.manifest);
        build = build_store(manifest);
    } catch (const std::runtime_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitCannotRun;
    }
    auto prefixes = cli_prefixes(*build.store);
    QueryPattern pattern;
    std::string error;
    for (auto [token, dest] : {std::pair{&opts.subject, &pattern.subject}, std::pair{&opts.object, &pattern.object}}) {
        if (!*token)
            continue;
        *dest = expand_cli_term(**token, prefixes, error);
        if (!*dest) {
            err << "error: " << error << '\n';
            return kExitCannotRun;
        }
    }
    if (opts.predicate) {
        auto p = expand_cli_term(*opts.predicate, prefixes, error);
        if (!p || !p->is_iri()) {
            err << "error: " << (p ? "predicate must be an IRI" : error) << '\n';
            return kExitCannotRun;
        }
        pattern.predicate = p->iri();
    }
    auto result = build.store->query(opts.scope, pattern, manifest.service.result_limit);
    if (!result) {
        err << "error: unknown thesaurus id '" << *opts.scope << "'\n";
        return kExitCannotRun;
    }
    write_tsv(err, build.diagnostics);
    out << serialize_ntriples_range(result->triples);
    if (result->truncated)
        err << "warning: result truncated at " << manifest.service.result_limit << " triples\n";
    return exit_code_for(build.diagnostics);
}

struct ServeOptions {
    std::filesystem::path manifest;
    std::optional<std::string> listen;
    std::optional<std::string> external_base_url;
    std::optional<std::size_t> result_limit;
};

/// Serves until `*stop` becomes true. `on_ready` receives the bound port.
inline int cmd_serve(const ServeOptions& opts, std::ostream& log, std::ostream& err, const std::atomic<bool>& stop,
                     const std::function<void(int)>& on_ready = {})
{
    Manifest manifest;
    StoreBuild build;
    RouteConfig config;
    try {
        manifest = load_manifest(opts.manifest);
        if (opts.listen) {
            std::tie(manifest.service.host, manifest.service.port) = parse_listen_address(*opts.listen);
        } else if (const char* env = std::getenv(kListenEnv); env && *env) {
            std::tie(manifest.service.host, manifest.service.port) = parse_listen_address(env);
        }
        if (opts.external_base_url)
            manifest.service.external_base_url = *opts.external_base_url;
        if (opts.result_limit)
            manifest.service.result_limit = *opts.result_limit;
        build = build_store(manifest);
        config = route_config_from(manifest);
        config.validate();
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitCannotRun;
    }
    write_tsv(err, build.diagnostics);

    LinkedDataService service(build.store, config);
    HttpFrontend frontend(service, &log);
    int port = frontend.bind(config.listen_host, config.listen_port);
    if (port < 0) {
        err << "error: cannot bind " << config.listen_host << ':' << config.listen_port << '\n';
        return kExitCannotRun;
    }
    for (auto& reg : build.store->registrations())
        log << "registered " << reg.id << " <" << reg.base_iri.str() << ">: "
            << ConceptIndex(*reg.graph).concepts().size() << " concepts, " << reg.graph->size() << " triples\n";
    for (auto& m : build.store->mapping_graphs())
        log << "mappings " << m.id << ": " << m.graph->size() << " triples\n";
    log << "listening on http://" << config.listen_host << ':' << port << std::endl;

    std::atomic<bool> finished{false};
    std::thread watcher([&] {
        while (!stop.load() && !finished.load())
            std::this_thread::sleep_for(std::chrono::milliseconds(50));
        frontend.stop();
    });
    std::thread ready;
    if (on_ready) {
        ready = std::thread([&frontend, &on_ready, port] {
            frontend.wait_until_ready();
            on_ready(port);
        });
    }
    bool ok = frontend.run();
    finished = true;
    watcher.join();
    if (ready.joinable())
        ready.join();
    if (!ok && !stop.load()) {
        err << "error: listener failed\n";
        return kExitCannotRun;
    }
    log << "shut down" << std::endl;
    return kExitOk;
}

} // namespace skosbridge::cli
