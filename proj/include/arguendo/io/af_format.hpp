#pragma once

#include <string>
#include <utility>
#include <vector>

#include "arguendo/af/framework.hpp"
#include "arguendo/errors.hpp"
#include "arguendo/io/line_reader.hpp"

namespace arguendo::io {

namespace detail {

inline bool is_identifier(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
              c == '_'))
            return false;
    return true;
}

/// Parses `name(arg1,...,argN).` and returns name plus arguments.
inline std::pair<std::string, std::vector<std::string>> parse_directive(const SourceLine& line) {
    const std::string& s = line.text;
    auto fail = [&](const std::string& msg) {
        return SemanticError("line " + std::to_string(line.number) + ": " + msg);
    };
    const auto open = s.find('(');
    const auto close = s.rfind(')');
    if (open == std::string::npos || close == std::string::npos || close < open ||
        s.substr(close) != ").")
        throw fail("expected a directive of the form name(...).");
    std::string name = s.substr(0, open);
    std::vector<std::string> args;
    std::string current;
    for (std::size_t i = open + 1; i < close; ++i) {
        const char c = s[i];
        if (c == ',') {
            args.push_back(current);
            current.clear();
        } else if (c != ' ' && c != '\t') {
            current += c;
        }
    }
    args.push_back(current);
    for (const auto& a : args)
        if (a.empty()) throw fail("empty argument in directive");
    return {std::move(name), std::move(args)};
}

}  // namespace detail

/// Loads `arg(<id>).` / `att(<from>,<to>).` lines. Unknown directives,
/// duplicates and dangling attack endpoints are errors.
inline af::Framework parse_af(const std::string& text) {
    af::Framework f;
    std::vector<std::pair<SourceLine, std::pair<std::string, std::string>>> attacks;
    for (const SourceLine& line : content_lines(text)) {
        auto [name, args] = detail::parse_directive(line);
        auto fail = [&](const std::string& msg) {
            return SemanticError("line " + std::to_string(line.number) + ": " + msg);
        };
        if (name == "arg") {
            if (args.size() != 1 || !detail::is_identifier(args[0]))
                throw fail("arg takes one identifier");
            try {
                f.add_argument(args[0]);
            } catch (const SemanticError& e) {
                throw fail(e.what());
            }
        } else if (name == "att") {
            if (args.size() != 2 || !detail::is_identifier(args[0]) ||
                !detail::is_identifier(args[1]))
                throw fail("att takes two identifiers");
            attacks.push_back({line, {args[0], args[1]}});
        } else {
            throw fail("unknown directive '" + name + "'");
        }
    }
    for (const auto& [line, edge] : attacks) {
        try {
            f.add_attack(edge.first, edge.second);
        } catch (const SemanticError& e) {
            throw SemanticError("line " + std::to_string(line.number) + ": " + e.what());
        }
    }
    return f;
}

inline af::Framework load_af(const std::string& path) { return parse_af(read_file(path)); }

inline std::string render_af(const af::Framework& f) {
    std::string out;
    for (const auto& n : f.nodes()) out += "arg(" + n + ").\n";
    for (const auto& [from, to] : f.attacks()) out += "att(" + from + "," + to + ").\n";
    return out;
}

}  // namespace arguendo::io
