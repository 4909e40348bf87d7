#pragma once

// The .alg file format and the rational state grammar.
//
// .alg grammar (line oriented, '#' starts a comment, blank lines ignored):
//   elements: <name> ... <name>
//   one: <name>
//   zero: <name>          (optional)
//   arrow:
//   <n rows of n element names; row i column j is e_i -> e_j>

#include <cctype>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "ioma/algebra.hpp"
#include "ioma/filters.hpp"
#include "ioma/rational.hpp"

namespace ioma {

struct ParseError : std::runtime_error {
    int line;
    int column;
    ParseError(int ln, int col, const std::string& msg)
        : std::runtime_error("line " + std::to_string(ln) + ", column " +
                             std::to_string(col) + ": " + msg),
          line(ln), column(col) {}
};

namespace detail {

struct Token {
    std::string text;
    int column;  // 1-based
};

inline std::vector<Token> tokenize_line(const std::string& line) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < line.size()) {
        if (line[i] == '#') break;
        if (std::isspace(static_cast<unsigned char>(line[i]))) { ++i; continue; }
        const size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) &&
               line[i] != '#')
            ++i;
        out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
    }
    return out;
}

}  // namespace detail

inline FiniteAlgebra parse_alg(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;

    struct Logical {
        std::vector<detail::Token> tokens;
        int lineno;
    };
    std::vector<Logical> lines;
    while (std::getline(in, line)) {
        ++lineno;
        auto toks = detail::tokenize_line(line);
        if (!toks.empty()) lines.push_back({std::move(toks), lineno});
    }

    size_t cursor = 0;
    auto expect_header = [&](const std::string& key,
                             bool optional) -> std::optional<Logical> {
        if (cursor >= lines.size()) {
            if (optional) return std::nullopt;
            throw ParseError(lineno + 1, 1, "missing '" + key + ":' header");
        }
        const Logical& l = lines[cursor];
        if (l.tokens[0].text != key + ":") {
            if (optional) return std::nullopt;
            throw ParseError(l.lineno, l.tokens[0].column,
                             "expected '" + key + ":' header, found '" +
                                 l.tokens[0].text + "'");
        }
        ++cursor;
        return l;
    };

    const Logical elems = *expect_header("elements", false);
    if (elems.tokens.size() < 2)
        throw ParseError(elems.lineno, elems.tokens[0].column,
                         "'elements:' needs at least one name");
    std::vector<std::string> names;
    for (size_t i = 1; i < elems.tokens.size(); ++i) names.push_back(elems.tokens[i].text);
    const int n = static_cast<int>(names.size());
    auto resolve = [&](const detail::Token& t, int ln) -> int {
        for (int i = 0; i < n; ++i)
            if (names[static_cast<size_t>(i)] == t.text) return i;
        throw ParseError(ln, t.column, "unknown element name '" + t.text + "'");
    };

    const Logical one_l = *expect_header("one", false);
    if (one_l.tokens.size() != 2)
        throw ParseError(one_l.lineno, one_l.tokens[0].column,
                         "'one:' needs exactly one name");
    const int one = resolve(one_l.tokens[1], one_l.lineno);

    std::optional<int> zero;
    if (auto zl = expect_header("zero", true)) {
        if (zl->tokens.size() != 2)
            throw ParseError(zl->lineno, zl->tokens[0].column,
                             "'zero:' needs exactly one name");
        zero = resolve(zl->tokens[1], zl->lineno);
    }

    const Logical arrow_l = *expect_header("arrow", false);
    if (arrow_l.tokens.size() != 1)
        throw ParseError(arrow_l.lineno, arrow_l.tokens[0].column,
                         "'arrow:' takes no arguments");

    std::vector<std::vector<int>> rows;
    for (int i = 0; i < n; ++i) {
        if (cursor >= lines.size())
            throw ParseError(lineno + 1, 1,
                             "arrow table ends after " + std::to_string(i) +
                                 " of " + std::to_string(n) + " rows");
        const Logical& rl = lines[cursor++];
        if (static_cast<int>(rl.tokens.size()) != n)
            throw ParseError(rl.lineno, rl.tokens[0].column,
                             "arrow row has " + std::to_string(rl.tokens.size()) +
                                 " entries, expected " + std::to_string(n));
        std::vector<int> row;
        for (const auto& t : rl.tokens) row.push_back(resolve(t, rl.lineno));
        rows.push_back(std::move(row));
    }
    if (cursor < lines.size()) {
        const Logical& extra = lines[cursor];
        throw ParseError(extra.lineno, extra.tokens[0].column,
                         "unexpected content after arrow table");
    }
    try {
        return FiniteAlgebra::validate(std::move(names), rows, one, zero);
    } catch (const AlgebraError& e) {
        throw ParseError(elems.lineno, 1, e.what());
    }
}

inline std::string serialize_alg(const FiniteAlgebra& a) {
    std::ostringstream out;
    out << "elements:";
    for (int i = 0; i < a.size(); ++i) out << " " << a.name(i);
    out << "\none: " << a.name(a.one()) << "\n";
    if (a.has_zero()) out << "zero: " << a.name(a.zero()) << "\n";
    out << "arrow:\n";
    for (int x = 0; x < a.size(); ++x) {
        for (int y = 0; y < a.size(); ++y) {
            if (y) out << " ";
            out << a.name(a.arrow(x, y));
        }
        out << "\n";
    }
    return out.str();
}

/// Comma-separated "name=p/q" or "name=k" assignments covering every element.
inline RationalState parse_state(const std::string& text, const FiniteAlgebra& a) {
    std::vector<std::optional<Rational>> values(static_cast<size_t>(a.size()));
    size_t pos = 0;
    int column = 1;
    auto fail = [&](const std::string& msg) -> void { throw ParseError(1, column, msg); };
    while (pos < text.size()) {
        while (pos < text.size() &&
               (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ','))
            ++pos;
        if (pos >= text.size()) break;
        column = static_cast<int>(pos) + 1;
        const size_t eq = text.find('=', pos);
        if (eq == std::string::npos) fail("expected 'name=value' assignment");
        std::string name = text.substr(pos, eq - pos);
        while (!name.empty() && std::isspace(static_cast<unsigned char>(name.back())))
            name.pop_back();
        const int idx = a.index_of(name);
        if (idx < 0) fail("unknown element name '" + name + "'");
        if (values[static_cast<size_t>(idx)]) fail("duplicate value for '" + name + "'");
        size_t end = text.find(',', eq);
        if (end == std::string::npos) end = text.size();
        std::string val = text.substr(eq + 1, end - eq - 1);
        std::erase_if(val, [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
        column = static_cast<int>(eq) + 2;
        if (val.empty()) fail("missing value for '" + name + "'");
        long long num = 0, den = 1;
        size_t slash = val.find('/');
        try {
            size_t used = 0;
            num = std::stoll(val.substr(0, slash), &used);
            if (used != (slash == std::string::npos ? val.size() : slash))
                fail("malformed rational '" + val + "'");
            if (slash != std::string::npos) {
                den = std::stoll(val.substr(slash + 1), &used);
                if (used != val.size() - slash - 1)
                    fail("malformed rational '" + val + "'");
            }
        } catch (const ParseError&) {
            throw;
        } catch (...) {
            fail("malformed rational '" + val + "'");
        }
        if (den == 0) fail("zero denominator in '" + val + "'");
        const Rational r(num, den);
        if (r < Rational(0) || Rational(1) < r)
            fail("value " + r.str() + " outside [0,1]");
        values[static_cast<size_t>(idx)] = r;
        pos = end;
    }
    RationalState s;
    for (int i = 0; i < a.size(); ++i) {
        if (!values[static_cast<size_t>(i)])
            throw ParseError(1, 1, "missing value for element '" + a.name(i) + "'");
        s.value.push_back(*values[static_cast<size_t>(i)]);
    }
    return s;
}

}  // namespace ioma
