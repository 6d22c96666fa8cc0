#include <atomic>
#include <csignal>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include <skosbridge/commands.hpp>

namespace {

std::atomic<bool> g_stop{false};

extern "C" void on_signal(int) { g_stop = true; }

} // namespace

int main(int argc, char** argv)
{
    using namespace skosbridge;
    using namespace skosbridge::cli;

    CLI::App app{"Convert thesaurus cross-concordances to SKOS mappings and publish them as linked data"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Expand help for all subcommands");

    bool json_report = false;

    // validate
    ValidateOptions validate;
    auto* validate_cmd = app.add_subcommand("validate", "Check SKOS thesauri (N-Triples) for integrity problems");
    validate_cmd->add_option("files", validate.files, "Thesaurus N-Triples files")->required();
    validate_cmd->add_flag("--report-json", json_report, "Write the report as a JSON array");

    // convert
    ConvertOptions convert;
    std::string nonpreferred = "strict";
    std::string ambiguity = "fail";
    bool no_inverses = false;
    std::string report_file;
    auto* convert_cmd = app.add_subcommand("convert", "Convert a crosswalk file into SKOS mapping triples");
    convert_cmd->add_option("--source", convert.source, "Source thesaurus (N-Triples)")->required();
    convert_cmd->add_option("--target", convert.target, "Target thesaurus (N-Triples)")->required();
    convert_cmd->add_option("--crosswalk", convert.crosswalk, "Crosswalk file (tab-separated)")->required();
    convert_cmd->add_option("--output", convert.output, "Mapping N-Triples output file")->required();
    convert_cmd
        ->add_option("--nonpreferred", nonpreferred, "Terms found only as alt/hidden labels: strict or promote")
        ->check(CLI::IsMember({"strict", "promote"}))
        ->capture_default_str();
    convert_cmd->add_option("--ambiguity", ambiguity, "Terms naming several concepts: fail or first")
        ->check(CLI::IsMember({"fail", "first"}))
        ->capture_default_str();
    convert_cmd->add_flag("--no-inverses", no_inverses, "Do not add inverse mappings");
    convert_cmd->add_option("--ext-namespace", convert.extension_namespace,
                            "Namespace of the combination-mapping extension vocabulary")
        ->capture_default_str();
    convert_cmd->add_option("--report", report_file, "Write the diagnostic report here instead of stdout");
    convert_cmd->add_flag("--report-json", json_report, "Write the report as a JSON array");

    // merge
    MergeOptions merge;
    auto* merge_cmd = app.add_subcommand("merge", "Merge all thesauri and mappings of a manifest into one file");
    merge_cmd->add_option("manifest", merge.manifest, "Store manifest (JSON)")->required();
    merge_cmd->add_option("--output", merge.output, "Merged N-Triples output file")->required();

    // serve
    ServeOptions serve;
    std::string listen;
    std::string external_base_url;
    std::size_t result_limit = 0;
    auto* serve_cmd = app.add_subcommand("serve", "Serve the manifest's store as linked data over HTTP");
    serve_cmd->add_option("manifest", serve.manifest, "Store manifest (JSON)")->required();
    serve_cmd->add_option("--listen", listen, "host:port to listen on (overrides $SKOSBRIDGE_LISTEN and manifest)");
    serve_cmd->add_option("--external-base-url", external_base_url, "Prefix for Location headers and links");
    serve_cmd->add_option("--result-limit", result_limit, "Maximum triples per query response")
        ->check(CLI::PositiveNumber);

    // query
    QueryOptions query;
    std::string subject, predicate, object, scope;
    auto* query_cmd = app.add_subcommand("query", "Match a triple pattern against the manifest's store");
    query_cmd->add_option("manifest", query.manifest, "Store manifest (JSON)")->required();
    query_cmd->add_option("-s,--subject", subject, "Subject: <iri>, prefix:local, or _:label");
    query_cmd->add_option("-p,--predicate", predicate, "Predicate: <iri> or prefix:local");
    query_cmd->add_option("-o,--object", object, "Object: <iri>, prefix:local, _:label, or an N-Triples literal");
    query_cmd->add_option("--scope", scope, "Restrict to one thesaurus id");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitCannotRun;
    }

    auto format = json_report ? ReportFormat::Json : ReportFormat::Tsv;

    if (*validate_cmd) {
        validate.format = format;
        return cmd_validate(validate, std::cout, std::cerr);
    }
    if (*convert_cmd) {
        convert.policy.nonpreferred = nonpreferred == "promote" ? NonPreferredMode::Promote : NonPreferredMode::Strict;
        convert.policy.ambiguity = ambiguity == "first" ? AmbiguityMode::FirstBySortedIri : AmbiguityMode::Fail;
        convert.policy.emit_inverses = !no_inverses;
        convert.format = format;
        if (!report_file.empty())
            convert.report_file = report_file;
        return cmd_convert(convert, std::cout, std::cerr);
    }
    if (*merge_cmd)
        return cmd_merge(merge, std::cerr);
    if (*serve_cmd) {
        if (!listen.empty())
            serve.listen = listen;
        if (!external_base_url.empty())
            serve.external_base_url = external_base_url;
        if (result_limit > 0)
            serve.result_limit = result_limit;
        std::signal(SIGINT, on_signal);
        std::signal(SIGTERM, on_signal);
        return cmd_serve(serve, std::clog, std::cerr, g_stop);
    }
    if (*query_cmd) {
        if (!subject.empty())
            query.subject = subject;
        if (!predicate.empty())
            query.predicate = predicate;
        if (!object.empty())
            query.object = object;
        if (!scope.empty())
            query.scope = scope;
        return cmd_query(query, std::cout, std::cerr);
    }
    return kExitCannotRun;
}
