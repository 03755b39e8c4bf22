#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "arguendo/af/semantics.hpp"
#include "arguendo/errors.hpp"
#include "arguendo/vaf/semantics.hpp"
#include "arguendo/vaf/value_framework.hpp"

namespace arguendo::vaf {

/// Strict dominance relation over competing practices.
struct PracticeOrdering {
    std::set<std::string> practices;
    std::set<std::pair<std::string, std::string>> dominates;
};

/// Practice p dominates q when a justified argument of p defeats (for
/// the audience) an argument of q, and no justified argument of q
/// defeats one of p.
inline PracticeOrdering practice_ordering(const ValueFramework& vf, const Audience& aud,
                                          const std::map<std::string, std::string>& practice_map,
                                          const VafOptions& opts = {}) {
    PracticeOrdering out;
    for (const auto& node : vf.base().nodes()) {
        auto it = practice_map.find(node);
        if (it == practice_map.end())
            throw SemanticError("no practice mapped for argument '" + node + "'");
        out.practices.insert(it->second);
    }

    std::map<std::string, bool> justified;
    for (const auto& node : vf.base().nodes())
        justified[node] =
            status_for_audience(vf, aud, node, opts) == af::Status::justified;

    auto p_defeats_q = [&](const std::string& p, const std::string& q) {
        for (const auto& x : vf.base().nodes()) {
            if (practice_map.at(x) != p || !justified[x]) continue;
            for (const auto& y : vf.base().nodes())
                if (practice_map.at(y) == q && defeats_for(aud, x, y, vf)) return true;
        }
        return false;
    };

    for (const auto& p : out.practices)
        for (const auto& q : out.practices) {
            if (p == q) continue;
            if (p_defeats_q(p, q) && !p_defeats_q(q, p)) out.dominates.insert({p, q});
        }
    return out;
}

/// DOT rendering of the transitive reduction of the dominance relation.
inline std::string hasse_to_dot(const PracticeOrdering& po) {
    std::vector<std::string> nodes(po.practices.begin(), po.practices.end());
    const std::size_t n = nodes.size();
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < n; ++i) index[nodes[i]] = i;

    std::vector<std::vector<bool>> edge(n, std::vector<bool>(n, false));
    for (const auto& [p, q] : po.dominates) edge[index.at(p)][index.at(q)] = true;

    // reachability closure; a cycle violates the ordering invariant
    std::vector<std::vector<bool>> reach = edge;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (reach[i][k] && reach[k][j]) reach[i][j] = true;
    for (std::size_t i = 0; i < n; ++i)
        if (reach[i][i])
            throw SemanticError("dominance relation contains a cycle through '" + nodes[i] + "'");

    std::string out = "digraph practices {\n";
    for (const auto& p : nodes) out += "  \"" + p + "\";\n";
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (!edge[i][j]) continue;
            bool redundant = false;
            for (std::size_t k = 0; k < n && !redundant; ++k)
                if (k != i && k != j && edge[i][k] && reach[k][j]) redundant = true;
            if (!redundant) out += "  \"" + nodes[i] + "\" -> \"" + nodes[j] + "\";\n";
        }
    out += "}\n";
    return out;
}

}  // namespace arguendo::vaf
