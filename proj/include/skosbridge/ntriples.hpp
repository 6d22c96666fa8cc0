#pragma once

// Line-recoverable N-Triples reader and canonical writer.

#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "rdf.hpp"

namespace skosbridge {

struct ParseError {
    std::size_t line; // 1-based
    std::string reason;
};

struct NTriplesResult {
    Graph graph;
    std::vector<ParseError> errors;
};

namespace detail {

struct SyntaxError {
    std::string reason;
};

inline void append_utf8(std::string& out, std::uint32_t cp)
{
    if (cp < 0x80) {
        out += static_cast<char>(cp);
    } else if (cp < 0x800) {
        out += static_cast<char>(0xC0 | (cp >> 6));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    } else if (cp < 0x10000) {
        out += static_cast<char>(0xE0 | (cp >> 12));
        out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    } else {
        out += static_cast<char>(0xF0 | (cp >> 18));
        out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
        out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    }
}

inline bool is_valid_utf8(std::string_view s)
{
    std::size_t i = 0;
    while (i < s.size()) {
        auto c = static_cast<unsigned char>(s[i]);
        std::size_t len;
        std::uint32_t cp;
        if (c < 0x80) {
            ++i;
            continue;
        } else if ((c & 0xE0) == 0xC0) {
            len = 2;
            cp = c & 0x1F;
        } else if ((c & 0xF0) == 0xE0) {
            len = 3;
            cp = c & 0x0F;
        } else if ((c & 0xF8) == 0xF0) {
            len = 4;
            cp = c & 0x07;
        } else {
            return false;
        }
        if (i + len > s.size())
            return false;
        for (std::size_t k = 1; k < len; ++k) {
            auto cc = static_cast<unsigned char>(s[i + k]);
            if ((cc & 0xC0) != 0x80)
                return false;
            cp = (cp << 6) | (cc & 0x3F);
        }
        // overlong forms, surrogates, out of range
        if ((len == 2 && cp < 0x80) || (len == 3 && cp < 0x800) || (len == 4 && cp < 0x10000) ||
            (cp >= 0xD800 && cp <= 0xDFFF) || cp > 0x10FFFF)
            return false;
        i += len;
    }
    return true;
}

class LineParser {
public:
    explicit LineParser(std::string_view line) : s_(line) {}

    /// nullopt for blank and comment-only lines.
    std::optional<Triple> parse_statement()
    {
        skip_ws();
        if (at_end() || peek() == '#')
            return std::nullopt;
        Term subject = parse_subject();
        skip_ws();
        if (at_end() || peek() != '<')
            fail("expected IRI in predicate position");
        Iri predicate = parse_iri();
        skip_ws();
        Term object = parse_object();
        skip_ws();
        if (at_end() || peek() != '.')
            fail("missing terminating ' .'");
        ++pos_;
        skip_ws();
        if (!at_end() && peek() != '#')
            fail("unexpected content after ' .'");
        return Triple(std::move(subject), std::move(predicate), std::move(object));
    }

    /// A single term with nothing but whitespace around it.
    Term parse_single_term()
    {
        skip_ws();
        if (at_end())
            fail("empty term");
        Term t = parse_object();
        skip_ws();
        if (!at_end())
            fail("unexpected content after term");
        return t;
    }

private:
    [[noreturn]] void fail(std::string reason) const
    {
        throw SyntaxError{std::move(reason) + " at column " + std::to_string(pos_ + 1)};
    }

    bool at_end() const { return pos_ >= s_.size(); }
    char peek() const { return s_[pos_]; }

    void skip_ws()
    {
        while (!at_end() && (peek() == ' ' || peek() == '\t'))
            ++pos_;
    }

    Term parse_subject()
    {
        if (peek() == '<')
            return parse_iri();
        if (peek() == '_')
            return parse_blank();
        fail("expected IRI or blank node in subject position");
    }

    Term parse_object()
    {
        switch (peek()) {
        case '<':
            return parse_iri();
        case '_':
            return parse_blank();
        case '"':
            return parse_literal();
        default:
            fail("expected IRI, blank node or literal in object position");
        }
    }

    std::uint32_t parse_hex(std::size_t digits)
    {
        if (pos_ + digits > s_.size())
            fail("truncated \\u escape");
        std::uint32_t cp = 0;
        for (std::size_t k = 0; k < digits; ++k) {
            char c = s_[pos_++];
            cp <<= 4;
            if (c >= '0' && c <= '9')
                cp |= static_cast<std::uint32_t>(c - '0');
            else if (c >= 'a' && c <= 'f')
                cp |= static_cast<std::uint32_t>(c - 'a' + 10);
            else if (c >= 'A' && c <= 'F')
                cp |= static_cast<std::uint32_t>(c - 'A' + 10);
            else
                fail("invalid hex digit in escape");
        }
        if ((cp >= 0xD800 && cp <= 0xDFFF) || cp > 0x10FFFF)
            fail("escape is not a Unicode scalar value");
        return cp;
    }

    // Called with pos_ on the character after the backslash.
    void parse_uchar(std::string& out)
    {
        char kind = s_[pos_++];
        append_utf8(out, parse_hex(kind == 'u' ? 4 : 8));
    }

    Iri parse_iri()
    {
        ++pos_; // '<'
        std::string value;
        for (;;) {
            if (at_end())
                fail("unterminated IRI");
            char c = s_[pos_];
            if (c == '>') {
                ++pos_;
                break;
            }
            if (c == '\\') {
                ++pos_;
                if (at_end() || (peek() != 'u' && peek() != 'U'))
                    fail("only \\u and \\U escapes are allowed in IRIs");
                parse_uchar(value);
                continue;
            }
            auto uc = static_cast<unsigned char>(c);
            if (uc <= 0x20 || c == '<' || c == '"' || c == '{' || c == '}' || c == '|' || c == '^' ||
                c == '`')
                fail("character not allowed in IRI");
            value += c;
            ++pos_;
        }
        auto iri = Iri::parse(value);
        if (!iri)
            fail("not an absolute IRI: " + value);
        return std::move(*iri);
    }

    BlankNode parse_blank()
    {
        if (pos_ + 1 >= s_.size() || s_[pos_ + 1] != ':')
            fail("expected '_:'");
        pos_ += 2;
        std::size_t start = pos_;
        while (!at_end() && is_ascii_alnum(peek()))
            ++pos_;
        if (pos_ == start)
            fail("empty blank node label");
        return BlankNode(std::string(s_.substr(start, pos_ - start)));
    }

    Literal parse_literal()
    {
        ++pos_; // '"'
        std::string lexical;
        for (;;) {
            if (at_end())
                fail("unterminated string literal");
            char c = s_[pos_++];
            if (c == '"')
                break;
            if (c != '\\') {
                lexical += c;
                continue;
            }
            if (at_end())
                fail("dangling backslash");
            char e = s_[pos_];
            switch (e) {
            case 't': lexical += '\t'; break;
            case 'b': lexical += '\b'; break;
            case 'n': lexical += '\n'; break;
            case 'r': lexical += '\r'; break;
            case 'f': lexical += '\f'; break;
            case '"': lexical += '"'; break;
            case '\'': lexical += '\''; break;
            case '\\': lexical += '\\'; break;
            case 'u':
            case 'U': parse_uchar(lexical); continue;
            default: fail(std::string("unknown escape \\") + e);
            }
            ++pos_;
        }
        if (!at_end() && peek() == '@') {
            ++pos_;
            std::size_t start = pos_;
            while (!at_end() && (is_ascii_alnum(peek()) || peek() == '-'))
                ++pos_;
            auto tag = ascii_lowercase(s_.substr(start, pos_ - start));
            if (!is_valid_lang_tag(tag))
                fail("invalid language tag '" + tag + "'");
            return Literal::lang_string(std::move(lexical), tag);
        }
        if (pos_ + 1 < s_.size() && s_[pos_] == '^' && s_[pos_ + 1] == '^') {
            pos_ += 2;
            if (at_end() || peek() != '<')
                fail("expected datatype IRI after '^^'");
            return Literal::typed(std::move(lexical), parse_iri());
        }
        return Literal(std::move(lexical));
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

inline void append_hex_escape(std::string& out, unsigned char c)
{
    static constexpr char kHex[] = "0123456789ABCDEF";
    out += "\\u00";
    out += kHex[c >> 4];
    out += kHex[c & 0xF];
}

} // namespace detail

/// Parses every line independently; a bad line becomes a ParseError and
/// parsing continues with the next one.
inline NTriplesResult parse_ntriples(std::istream& in)
{
    NTriplesResult result;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (!detail::is_valid_utf8(line)) {
            result.errors.push_back({line_no, "invalid UTF-8"});
            continue;
        }
        try {
            detail::LineParser parser(line);
            if (auto t = parser.parse_statement())
                result.graph.insert(std::move(*t));
        } catch (const detail::SyntaxError& e) {
            result.errors.push_back({line_no, e.reason});
        } catch (const std::invalid_argument& e) {
            result.errors.push_back({line_no, e.what()});
        }
    }
    return result;
}

inline NTriplesResult parse_ntriples(std::string_view text)
{
    std::istringstream in{std::string(text)};
    return parse_ntriples(in);
}

/// Parses one N-Triples term token (`<iri>`, `_:b`, or a literal).
inline std::optional<Term> parse_term(std::string_view token, std::string* error = nullptr)
{
    if (!detail::is_valid_utf8(token)) {
        if (error)
            *error = "invalid UTF-8";
        return std::nullopt;
    }
    try {
        detail::LineParser parser(token);
        return parser.parse_single_term();
    } catch (const detail::SyntaxError& e) {
        if (error)
            *error = e.reason;
    } catch (const std::invalid_argument& e) {
        if (error)
            *error = e.what();
    }
    return std::nullopt;
}

inline void append_iri(std::string& out, const Iri& iri)
{
    out += '<';
    for (char c : iri.str()) {
        auto uc = static_cast<unsigned char>(c);
        if (uc <= 0x20 || uc == 0x7F || c == '{' || c == '}' || c == '|' || c == '^' || c == '`' || c == '\\')
            detail::append_hex_escape(out, uc);
        else
            out += c;
    }
    out += '>';
}

/// Quoted string with the canonical escapes; shared with the Turtle writer.
inline void append_quoted(std::string& out, std::string_view lexical)
{
    out += '"';
    for (char c : lexical) {
        switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\r': out += "\\r"; break;
        case '\t': out += "\\t"; break;
        case '\b': out += "\\b"; break;
        case '\f': out += "\\f"; break;
        default:
            if (static_cast<unsigned char>(c) < 0x20 || c == 0x7F)
                detail::append_hex_escape(out, static_cast<unsigned char>(c));
            else
                out += c;
        }
    }
    out += '"';
}

inline void append_term(std::string& out, const Term& term)
{
    if (auto* iri = term.as_iri()) {
        append_iri(out, *iri);
    } else if (auto* lit = term.as_literal()) {
        append_quoted(out, lit->lexical());
        if (!lit->lang().empty()) {
            out += '@';
            out += lit->lang();
        } else if (lit->datatype()) {
            out += "^^";
            append_iri(out, *lit->datatype());
        }
    } else {
        out += "_:";
        out += term.blank().label();
    }
}

inline std::string to_ntriples(const Term& term)
{
    std::string out;
    append_term(out, term);
    return out;
}

inline std::string to_ntriples(const Triple& t)
{
    std::string out;
    append_term(out, t.subject());
    out += ' ';
    append_iri(out, t.predicate());
    out += ' ';
    append_term(out, t.object());
    out += " .\n";
    return out;
}

/// One line per triple in canonical order.
inline std::string serialize_ntriples(const Graph& g)
{
    std::string out;
    for (const auto& t : g) {
        append_term(out, t.subject());
        out += ' ';
        append_iri(out, t.predicate());
        out += ' ';
        append_term(out, t.object());
        out += " .\n";
    }
    return out;
}

template <typename Range>
std::string serialize_ntriples_range(const Range& triples)
{
    std::string out;
    for (const Triple& t : triples)
        out += to_ntriples(t);
    return out;
}

} // namespace skosbridge
