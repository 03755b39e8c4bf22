#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "arguendo/af/semantics.hpp"
#include "arguendo/vaf/value_framework.hpp"

namespace arguendo::vaf {

struct VafOptions {
    /// Literal reading of audience conflict-freeness: besides defeats,
    /// any pair whose values are Valpref-related puts a set in conflict.
    /// Kept for study; it bars almost every mixed-value set.
    bool strict_def10 = false;
    std::size_t node_bound = 18;
};

/// Conflict-freeness for an audience, over surviving defeats.
inline bool conflict_free_for(const Audience& aud, const std::set<std::string>& s,
                              const ValueFramework& vf, const VafOptions& opts = {}) {
    for (const auto& x : s)
        for (const auto& y : s) {
            if (defeats_for(aud, x, y, vf)) return false;
            if (opts.strict_def10 && x != y && aud.prefers(vf.value_of(x), vf.value_of(y)))
                return false;
        }
    return true;
}

/// x is acceptable when every defeat against it is answered by a defeat
/// from the set.
inline bool acceptable_to(const Audience& aud, const std::string& x,
                          const std::set<std::string>& s, const ValueFramework& vf) {
    vf.base().index_of(x);
    for (const auto& z : vf.base().nodes()) {
        if (!defeats_for(aud, z, x, vf)) continue;
        bool countered = false;
        for (const auto& m : s)
            if (defeats_for(aud, m, z, vf)) {
                countered = true;
                break;
            }
        if (!countered) return false;
    }
    return true;
}

inline bool admissible_for(const Audience& aud, const std::set<std::string>& s,
                           const ValueFramework& vf, const VafOptions& opts = {}) {
    if (!conflict_free_for(aud, s, vf, opts)) return false;
    for (const auto& x : s)
        if (!acceptable_to(aud, x, s, vf)) return false;
    return true;
}

/// Maximal admissible-for sets, computed by direct subset search over
/// the audience-relative notions. Agrees with the preferred extensions
/// of reduce_for_audience.
inline std::vector<af::Extension> preferred_for_audience(const ValueFramework& vf,
                                                         const Audience& aud,
                                                         const VafOptions& opts = {}) {
    const auto& nodes = vf.base().nodes();
    if (nodes.size() > opts.node_bound)
        throw ResourceError("value framework with " + std::to_string(nodes.size()) +
                            " nodes exceeds the enumeration bound of " +
                            std::to_string(opts.node_bound));

    std::vector<std::set<std::string>> admissible;
    std::set<std::string> chosen;
    // depth-first over nodes; conflict-freeness pruned incrementally
    auto recurse = [&](auto&& self, std::size_t i) -> void {
        if (i == nodes.size()) {
            bool ok = true;
            for (const auto& x : chosen)
                if (!acceptable_to(aud, x, chosen, vf)) {
                    ok = false;
                    break;
                }
            if (ok) admissible.push_back(chosen);
            return;
        }
        self(self, i + 1);
        bool clash = defeats_for(aud, nodes[i], nodes[i], vf);
        for (const auto& m : chosen) {
            if (clash) break;
            clash = defeats_for(aud, m, nodes[i], vf) || defeats_for(aud, nodes[i], m, vf) ||
                    (opts.strict_def10 &&
                     (aud.prefers(vf.value_of(m), vf.value_of(nodes[i])) ||
                      aud.prefers(vf.value_of(nodes[i]), vf.value_of(m))));
        }
        if (!clash) {
            chosen.insert(nodes[i]);
            self(self, i + 1);
            chosen.erase(nodes[i]);
        }
    };
    recurse(recurse, 0);

    std::vector<af::Extension> out;
    for (const auto& s : admissible) {
        bool maximal = true;
        for (const auto& other : admissible)
            if (&other != &s && s != other &&
                std::includes(other.begin(), other.end(), s.begin(), s.end())) {
                maximal = false;
                break;
            }
        if (maximal)
            out.push_back(af::Extension{{s.begin(), s.end()}, af::Semantics::preferred});
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Status for an audience, aggregated over the preferred labellings of
/// the reduced framework.
inline af::Status status_for_audience(const ValueFramework& vf, const Audience& aud,
                                      const std::string& x, const VafOptions& opts = {}) {
    af::SemanticsOptions sem_opts;
    sem_opts.node_bound = opts.node_bound;
    return af::argument_status(reduce_for_audience(vf, aud), x, af::Semantics::preferred,
                               sem_opts);
}

}  // namespace arguendo::vaf
