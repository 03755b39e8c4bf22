#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "arguendo/af/framework.hpp"

namespace arguendo::af {

/// Graphviz digraph with nodes and edges in canonical order.
inline std::string framework_to_dot(const Framework& f) {
    std::vector<std::string> nodes = f.nodes();
    std::sort(nodes.begin(), nodes.end());
    auto edges = f.attacks();
    std::sort(edges.begin(), edges.end());

    std::string out = "digraph framework {\n";
    for (const auto& n : nodes) out += "  \"" + n + "\";\n";
    for (const auto& [from, to] : edges)
        out += "  \"" + from + "\" -> \"" + to + "\";\n";
    out += "}\n";
    return out;
}

}  // namespace arguendo::af
