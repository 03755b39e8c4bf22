#pragma once

// Literal powerset oracle for the acceptability semantics. Written
// directly from the defining predicates, independent of the labelling
// search used by the library.

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "arguendo/af/framework.hpp"
#include "arguendo/af/semantics.hpp"

namespace testsupport {

using NodeSet = std::set<std::string>;

inline std::vector<NodeSet> all_subsets(const arguendo::af::Framework& f) {
    const auto& nodes = f.nodes();
    std::vector<NodeSet> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << nodes.size()); ++mask) {
        NodeSet s;
        for (std::size_t i = 0; i < nodes.size(); ++i)
            if (mask >> i & 1) s.insert(nodes[i]);
        out.push_back(std::move(s));
    }
    return out;
}

inline bool oracle_conflict_free(const NodeSet& s, const arguendo::af::Framework& f) {
    for (const auto& a : s)
        for (const auto& b : s)
            if (f.has_attack(a, b)) return false;
    return true;
}

inline bool oracle_defends(const NodeSet& s, const std::string& x,
                           const arguendo::af::Framework& f) {
    for (const auto& attacker : f.nodes()) {
        if (!f.has_attack(attacker, x)) continue;
        bool countered = false;
        for (const auto& m : s)
            if (f.has_attack(m, attacker)) countered = true;
        if (!countered) return false;
    }
    return true;
}

inline bool oracle_admissible(const NodeSet& s, const arguendo::af::Framework& f) {
    if (!oracle_conflict_free(s, f)) return false;
    for (const auto& x : s)
        if (!oracle_defends(s, x, f)) return false;
    return true;
}

inline bool oracle_complete(const NodeSet& s, const arguendo::af::Framework& f) {
    if (!oracle_admissible(s, f)) return false;
    for (const auto& x : f.nodes())
        if (oracle_defends(s, x, f) && !s.count(x)) return false;
    return true;
}

inline bool oracle_stable(const NodeSet& s, const arguendo::af::Framework& f) {
    if (!oracle_conflict_free(s, f)) return false;
    for (const auto& x : f.nodes()) {
        if (s.count(x)) continue;
        bool attacked = false;
        for (const auto& m : s)
            if (f.has_attack(m, x)) attacked = true;
        if (!attacked) return false;
    }
    return true;
}

/// All extensions of the given semantics as sorted member lists, in
/// canonical order.
inline std::vector<std::vector<std::string>> oracle_extensions(
    const arguendo::af::Framework& f, arguendo::af::Semantics sem) {
    using arguendo::af::Semantics;
    std::vector<NodeSet> chosen;
    const auto subsets = all_subsets(f);
    switch (sem) {
        case Semantics::admissible:
            for (const auto& s : subsets)
                if (oracle_admissible(s, f)) chosen.push_back(s);
            break;
        case Semantics::complete:
            for (const auto& s : subsets)
                if (oracle_complete(s, f)) chosen.push_back(s);
            break;
        case Semantics::stable:
            for (const auto& s : subsets)
                if (oracle_stable(s, f)) chosen.push_back(s);
            break;
        case Semantics::preferred: {
            std::vector<NodeSet> admissible;
            for (const auto& s : subsets)
                if (oracle_admissible(s, f)) admissible.push_back(s);
            for (const auto& s : admissible) {
                bool maximal = true;
                for (const auto& t : admissible)
                    if (s != t && std::includes(t.begin(), t.end(), s.begin(), s.end()))
                        maximal = false;
                if (maximal) chosen.push_back(s);
            }
            break;
        }
        case Semantics::grounded: {
            std::vector<NodeSet> complete;
            for (const auto& s : subsets)
                if (oracle_complete(s, f)) complete.push_back(s);
            for (const auto& s : complete) {
                bool least = true;  // subset of every complete extension
                for (const auto& t : complete)
                    if (!std::includes(t.begin(), t.end(), s.begin(), s.end())) least = false;
                if (least) chosen.push_back(s);
            }
            break;
        }
    }
    std::vector<std::vector<std::string>> out;
    for (const auto& s : chosen) out.emplace_back(s.begin(), s.end());
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace testsupport
