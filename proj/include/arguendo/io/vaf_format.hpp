#pragma once

#include <map>
#include <string>
#include <vector>

#include "arguendo/errors.hpp"
#include "arguendo/io/af_format.hpp"
#include "arguendo/io/line_reader.hpp"
#include "arguendo/vaf/value_framework.hpp"

namespace arguendo::io {

struct LoadedVaf {
    vaf::ValueFramework framework;
    /// Practice map, present when `practice(...)` lines were given.
    std::map<std::string, std::string> practices;
};

/// AF directives plus `val(<arg>,<value>).`,
/// `audience(<name>, <v1> > <v2> > ...).` and optional
/// `practice(<arg>,<practice>).` lines.
inline LoadedVaf parse_vaf(const std::string& text) {
    af::Framework base;
    std::vector<std::pair<SourceLine, std::pair<std::string, std::string>>> attacks;
    std::map<std::string, std::string> value_map;
    std::vector<vaf::Audience> audiences;
    std::map<std::string, std::string> practices;

    for (const SourceLine& line : content_lines(text)) {
        auto [name, args] = detail::parse_directive(line);
        auto fail = [&](const std::string& msg) {
            return SemanticError("line " + std::to_string(line.number) + ": " + msg);
        };
        if (name == "arg") {
            if (args.size() != 1 || !detail::is_identifier(args[0]))
                throw fail("arg takes one identifier");
            base.add_argument(args[0]);
        } else if (name == "att") {
            if (args.size() != 2) throw fail("att takes two identifiers");
            attacks.push_back({line, {args[0], args[1]}});
        } else if (name == "val") {
            if (args.size() != 2 || !detail::is_identifier(args[1]))
                throw fail("val takes an argument id and a value");
            if (value_map.count(args[0])) throw fail("duplicate val for '" + args[0] + "'");
            value_map[args[0]] = args[1];
        } else if (name == "audience") {
            if (args.size() != 2) throw fail("audience takes a name and an order");
            std::vector<std::string> order;
            std::string current;
            for (char c : args[1]) {
                if (c == '>') {
                    order.push_back(current);
                    current.clear();
                } else {
                    current += c;
                }
            }
            order.push_back(current);
            for (const auto& v : order)
                if (!detail::is_identifier(v)) throw fail("malformed audience order");
            audiences.emplace_back(args[0], order);
        } else if (name == "practice") {
            if (args.size() != 2 || !detail::is_identifier(args[1]))
                throw fail("practice takes an argument id and a practice");
            if (practices.count(args[0]))
                throw fail("duplicate practice for '" + args[0] + "'");
            practices[args[0]] = args[1];
        } else {
            throw fail("unknown directive '" + name + "'");
        }
    }
    for (const auto& [line, edge] : attacks) {
        try {
            base.add_attack(edge.first, edge.second);
        } catch (const SemanticError& e) {
            throw SemanticError("line " + std::to_string(line.number) + ": " + e.what());
        }
    }
    for (const auto& [arg, practice] : practices) base.index_of(arg);
    return LoadedVaf{vaf::ValueFramework(std::move(base), std::move(value_map),
                                         std::move(audiences)),
                     std::move(practices)};
}

inline LoadedVaf load_vaf(const std::string& path) { return parse_vaf(read_file(path)); }

inline std::string render_vaf(const LoadedVaf& v) {
    std::string out = render_af(v.framework.base());
    for (const auto& node : v.framework.base().nodes())
        out += "val(" + node + "," + v.framework.value_of(node) + ").\n";
    for (const auto& name : v.framework.audience_names()) {
        const auto& order = v.framework.audience(name).order();
        out += "audience(" + name + ", ";
        for (std::size_t i = 0; i < order.size(); ++i) {
            if (i) out += " > ";
            out += order[i];
        }
        out += ").\n";
    }
    for (const auto& [arg, practice] : v.practices)
        out += "practice(" + arg + "," + practice + ").\n";
    return out;
}

}  // namespace arguendo::io
