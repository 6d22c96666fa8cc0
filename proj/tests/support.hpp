#pragma once

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include <skosbridge/ntriples.hpp>
#include <skosbridge/rdf.hpp>

namespace testsupport {

using namespace skosbridge;

inline std::filesystem::path fixture(const std::string& name)
{
    return std::filesystem::path(SKOSBRIDGE_FIXTURES) / name;
}

inline std::string slurp(const std::filesystem::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline Graph load(const std::string& name)
{
    auto r = parse_ntriples(slurp(fixture(name)));
    if (!r.errors.empty())
        throw std::runtime_error("fixture " + name + " does not parse");
    return std::move(r.graph);
}

/// Scratch directory removed on destruction.
class TempDir {
public:
    TempDir()
    {
        static std::mt19937_64 rng{std::random_device{}()};
        path_ = std::filesystem::temp_directory_path() / ("skosbridge-test-" + std::to_string(rng()));
        std::filesystem::create_directories(path_);
    }
    ~TempDir()
    {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    const std::filesystem::path& path() const { return path_; }
    std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

    std::filesystem::path write(const std::string& name, const std::string& content) const
    {
        auto p = path_ / name;
        std::ofstream(p, std::ios::binary) << content;
        return p;
    }

private:
    std::filesystem::path path_;
};

struct RunResult {
    int exit_code = -1;
    std::string out;
};

inline std::string shell_quote(const std::string& s)
{
    std::string out = "'";
    for (char c : s) {
        if (c == '\'')
            out += "'\\''";
        else
            out += c;
    }
    return out + "'";
}

/// Runs the CLI binary; stdout is captured, stderr goes to `stderr_file` if given.
inline RunResult run_cli(const std::vector<std::string>& args, const std::string& stderr_file = "/dev/null")
{
    std::string cmd = shell_quote(SKOSBRIDGE_CLI);
    for (auto& a : args)
        cmd += " " + shell_quote(a);
    cmd += " 2>" + shell_quote(stderr_file);
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe)
        return r;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        r.out.append(buf.data(), n);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

/// Random RDF terms exercising every escape class of the canonical
/// serializer, multi-byte UTF-8 included.
class RandomRdf {
public:
    explicit RandomRdf(std::uint64_t seed) : rng_(seed) {}

    std::size_t uniform(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }
    bool chance(double p) { return std::bernoulli_distribution(p)(rng_); }

    Iri iri(std::size_t pool = 0)
    {
        if (pool > 0)
            return Iri("http://example.org/n/" + std::to_string(uniform(pool)));
        static const std::vector<std::string> kPieces = {
            "a", "Z", "0", "-", "_", "~", "/", "#", "%41", "?", "=", "&", "{", "}", "|", "^", "`", "\\",
            "\x01", "\x1f", "\x7f", "\xc3\xa9", "\xe4\xb8\xad", "\xf0\x9f\x98\x80"};
        std::string s = kSchemes[uniform(kSchemes.size())];
        std::size_t len = uniform(12);
        for (std::size_t i = 0; i < len; ++i)
            s += kPieces[uniform(kPieces.size())];
        return Iri(s);
    }

    std::string lexical()
    {
        static const std::vector<std::string> kPieces = {
            "a", "B", "7", " ", "\"", "\\", "\n", "\r", "\t", "\b", "\f", "'", "\x01", "\x0b", "\x1f",
            "\x7f", "<", ">", "@", "^^", "\xc3\xbc", "\xe2\x80\x94", "\xf0\x9f\x98\x80", std::string(1, '\0')};
        std::string s;
        std::size_t len = uniform(10);
        for (std::size_t i = 0; i < len; ++i)
            s += kPieces[uniform(kPieces.size())];
        return s;
    }

    Literal literal()
    {
        static const std::vector<std::string> kLangs = {"de", "en", "en-gb", "zh-hant-tw", "fra"};
        switch (uniform(3)) {
        case 0: return Literal(lexical());
        case 1: return Literal::lang_string(lexical(), kLangs[uniform(kLangs.size())]);
        default:
            return Literal::typed(lexical(), chance(0.5) ? Iri("http://www.w3.org/2001/XMLSchema#integer") : iri());
        }
    }

    BlankNode blank()
    {
        static const std::string kAlnum = "abcXYZ0129";
        std::string s;
        std::size_t len = 1 + uniform(6);
        for (std::size_t i = 0; i < len; ++i)
            s += kAlnum[uniform(kAlnum.size())];
        return BlankNode(s);
    }

    Term subject() { return chance(0.8) ? Term(iri()) : Term(blank()); }

    Term object()
    {
        switch (uniform(3)) {
        case 0: return iri();
        case 1: return blank();
        default: return literal();
        }
    }

    Triple triple() { return Triple(subject(), iri(), object()); }

    Graph graph(std::size_t max_size)
    {
        Graph g;
        std::size_t n = uniform(max_size + 1);
        for (std::size_t i = 0; i < n; ++i)
            g.insert(triple());
        return g;
    }

    std::mt19937_64& engine() { return rng_; }

private:
    static inline const std::vector<std::string> kSchemes = {"http://example.org/", "urn:x-", "tag:a.b,2024:",
                                                             "HTTPS://ex.com/"};
    std::mt19937_64 rng_;
};

} // namespace testsupport
