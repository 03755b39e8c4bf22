#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "arguendo/af/framework.hpp"
#include "arguendo/errors.hpp"

namespace arguendo::af {

enum class Semantics { admissible, complete, grounded, stable, preferred };

inline const char* to_string(Semantics s) {
    switch (s) {
        case Semantics::admissible: return "admissible";
        case Semantics::complete: return "complete";
        case Semantics::grounded: return "grounded";
        case Semantics::stable: return "stable";
        case Semantics::preferred: return "preferred";
    }
    return "?";
}

inline Semantics semantics_from_string(const std::string& name) {
    if (name == "admissible") return Semantics::admissible;
    if (name == "complete") return Semantics::complete;
    if (name == "grounded") return Semantics::grounded;
    if (name == "stable") return Semantics::stable;
    if (name == "preferred") return Semantics::preferred;
    throw SemanticError("unknown semantics '" + name + "'");
}

/// Accepted set under one semantics; members are kept sorted.
struct Extension {
    std::vector<std::string> members;
    Semantics semantics = Semantics::admissible;

    bool contains(const std::string& id) const {
        return std::binary_search(members.begin(), members.end(), id);
    }
    friend bool operator==(const Extension& a, const Extension& b) {
        return a.members == b.members;
    }
    friend bool operator<(const Extension& a, const Extension& b) {
        return a.members < b.members;
    }
};

enum class Label { in, out, undec };

/// Total in/out/undec assignment. Legal assignments satisfy: a node is
/// in iff all its attackers are out, and out iff some attacker is in.
struct Labelling {
    std::map<std::string, Label> assignment;

    std::vector<std::string> in_set() const {
        std::vector<std::string> out;
        for (const auto& [id, l] : assignment)
            if (l == Label::in) out.push_back(id);
        return out;
    }
};

enum class Status { justified, overruled, defensible };

inline const char* to_string(Status s) {
    switch (s) {
        case Status::justified: return "justified";
        case Status::overruled: return "overruled";
        case Status::defensible: return "defensible";
    }
    return "?";
}

struct SemanticsOptions {
    /// Exhaustive enumeration refuses frameworks larger than this.
    std::size_t node_bound = 18;
};

namespace detail {

constexpr std::int8_t kUnset = -1, kIn = 0, kOut = 1, kUndec = 2;

class CompleteLabellingSearch {
public:
    explicit CompleteLabellingSearch(const Framework& f) : f_(f), n_(static_cast<int>(f.size())) {}

    /// All complete labellings as label vectors indexed like the framework.
    std::vector<std::vector<std::int8_t>> run() {
        std::vector<std::int8_t> labels(n_, kUnset);
        recurse(labels);
        return results_;
    }

private:
    void recurse(std::vector<std::int8_t> labels) {
        int next = -1;
        for (int i = 0; i < n_; ++i)
            if (labels[i] == kUnset) {
                next = i;
                break;
            }
        if (next < 0) {
            if (legal(labels)) results_.push_back(labels);
            return;
        }
        for (std::int8_t value : {kIn, kOut, kUndec}) {
            std::vector<std::int8_t> copy = labels;
            if (assign(copy, next, value)) recurse(std::move(copy));
        }
    }

    // Assigns and propagates the consequences of "in" labels; returns
    // false when a legality condition is already unsatisfiable.
    bool assign(std::vector<std::int8_t>& labels, int node, std::int8_t value) {
        std::vector<int> queue{node};
        labels[node] = value;
        if (value != kIn && !locally_plausible(labels, node)) return false;
        while (!queue.empty()) {
            int x = queue.back();
            queue.pop_back();
            if (labels[x] != kIn) continue;
            for (int a : f_.attackers_of(x)) {
                if (labels[a] == kIn || labels[a] == kUndec) return false;
                if (labels[a] == kUnset) labels[a] = kOut;
            }
            for (int t : f_.targets_of(x)) {
                if (labels[t] == kIn || labels[t] == kUndec) return false;
                if (labels[t] == kUnset) labels[t] = kOut;
            }
        }
        return true;
    }

    bool locally_plausible(const std::vector<std::int8_t>& labels, int x) const {
        const auto& attackers = f_.attackers_of(x);
        if (labels[x] == kOut) {
            bool may_gain_in = false;
            for (int a : attackers)
                if (labels[a] == kIn || labels[a] == kUnset) {
                    may_gain_in = true;
                    break;
                }
            return may_gain_in;
        }
        // undec: no attacker in, and not provably all-out
        bool may_escape_all_out = false;
        for (int a : attackers) {
            if (labels[a] == kIn) return false;
            if (labels[a] != kOut) may_escape_all_out = true;
        }
        return may_escape_all_out;
    }

    bool legal(const std::vector<std::int8_t>& labels) const {
        for (int x = 0; x < n_; ++x) {
            const auto& attackers = f_.attackers_of(x);
            switch (labels[x]) {
                case kIn:
                    for (int a : attackers)
                        if (labels[a] != kOut) return false;
                    break;
                case kOut: {
                    bool has_in = false;
                    for (int a : attackers)
                        if (labels[a] == kIn) has_in = true;
                    if (!has_in) return false;
                    break;
                }
                default: {
                    bool all_out = true;
                    for (int a : attackers) {
                        if (labels[a] == kIn) return false;
                        if (labels[a] != kOut) all_out = false;
                    }
                    if (all_out) return false;  // would have to be in
                    break;
                }
            }
        }
        return true;
    }

    const Framework& f_;
    int n_;
    std::vector<std::vector<std::int8_t>> results_;
};

inline void check_bound(const Framework& f, const SemanticsOptions& opts) {
    if (f.size() > opts.node_bound)
        throw ResourceError("framework with " + std::to_string(f.size()) +
                            " nodes exceeds the enumeration bound of " +
                            std::to_string(opts.node_bound));
}

inline std::vector<std::string> sorted_ids(const Framework& f, const std::vector<int>& indices) {
    std::vector<std::string> out;
    out.reserve(indices.size());
    for (int i : indices) out.push_back(f.id_of(i));
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<std::string> in_ids(const Framework& f, const std::vector<std::int8_t>& labels) {
    std::vector<int> in;
    for (int i = 0; i < static_cast<int>(labels.size()); ++i)
        if (labels[i] == kIn) in.push_back(i);
    return sorted_ids(f, in);
}

// Depth-first enumeration of admissible sets: conflict-free by
// construction, acceptability checked at the leaves.
inline void enumerate_admissible(const Framework& f, int node, std::vector<int>& chosen,
                                 std::vector<std::vector<int>>& out) {
    const int n = static_cast<int>(f.size());
    if (node == n) {
        for (int x : chosen) {
            for (int attacker : f.attackers_of(x)) {
                bool countered = false;
                for (int m : chosen)
                    if (f.has_attack_index(m, attacker)) {
                        countered = true;
                        break;
                    }
                if (!countered) return;
            }
        }
        out.push_back(chosen);
        return;
    }
    enumerate_admissible(f, node + 1, chosen, out);
    bool clash = f.has_attack_index(node, node);
    for (int m : chosen)
        if (f.has_attack_index(m, node) || f.has_attack_index(node, m)) {
            clash = true;
            break;
        }
    if (!clash) {
        chosen.push_back(node);
        enumerate_admissible(f, node + 1, chosen, out);
        chosen.pop_back();
    }
}

inline std::vector<std::vector<std::int8_t>> complete_labels(const Framework& f,
                                                             const SemanticsOptions& opts) {
    check_bound(f, opts);
    return CompleteLabellingSearch(f).run();
}

inline std::vector<std::vector<std::int8_t>> select_labels(const Framework& f, Semantics sem,
                                                           const SemanticsOptions& opts) {
    auto all = complete_labels(f, opts);
    if (sem == Semantics::complete) return all;
    if (sem == Semantics::stable) {
        std::vector<std::vector<std::int8_t>> kept;
        for (auto& l : all)
            if (std::count(l.begin(), l.end(), kUndec) == 0) kept.push_back(std::move(l));
        return kept;
    }
    if (sem == Semantics::preferred) {
        std::vector<std::vector<std::int8_t>> kept;
        for (const auto& l : all) {
            bool maximal = true;
            for (const auto& other : all) {
                if (&other == &l) continue;
                bool subset = true, proper = false;
                for (std::size_t i = 0; i < l.size(); ++i) {
                    if (l[i] == kIn && other[i] != kIn) subset = false;
                    if (other[i] == kIn && l[i] != kIn) proper = true;
                }
                if (subset && proper) {
                    maximal = false;
                    break;
                }
            }
            if (maximal) kept.push_back(l);
        }
        return kept;
    }
    if (sem == Semantics::grounded) {
        // minimal in-set
        const std::vector<std::int8_t>* best = nullptr;
        for (const auto& l : all) {
            if (!best) {
                best = &l;
                continue;
            }
            bool subset = true;
            for (std::size_t i = 0; i < l.size(); ++i)
                if (l[i] == kIn && (*best)[i] != kIn) subset = false;
            if (subset) best = &l;
        }
        if (!best) return {};
        return {*best};
    }
    throw SemanticError("semantics '" + std::string(to_string(sem)) +
                        "' does not select labellings");
}

}  // namespace detail

/// Least fixed point of the defended-set operator, starting from the
/// empty set. Needs no enumeration bound.
inline Extension grounded_extension(const Framework& f) {
    const int n = static_cast<int>(f.size());
    std::vector<bool> in(n, false);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int x = 0; x < n; ++x) {
            if (in[x]) continue;
            bool defended = true;
            for (int attacker : f.attackers_of(x)) {
                bool countered = false;
                for (int m = 0; m < n; ++m)
                    if (in[m] && f.has_attack_index(m, attacker)) {
                        countered = true;
                        break;
                    }
                if (!countered) {
                    defended = false;
                    break;
                }
            }
            if (defended) {
                in[x] = true;
                changed = true;
            }
        }
    }
    std::vector<int> members;
    for (int x = 0; x < n; ++x)
        if (in[x]) members.push_back(x);
    return Extension{detail::sorted_ids(f, members), Semantics::grounded};
}

/// All extensions of the requested semantics in canonical order.
inline std::vector<Extension> enumerate_extensions(const Framework& f, Semantics sem,
                                                   const SemanticsOptions& opts = {}) {
    std::vector<Extension> out;
    if (sem == Semantics::grounded) {
        out.push_back(grounded_extension(f));
        return out;
    }
    if (sem == Semantics::admissible) {
        detail::check_bound(f, opts);
        std::vector<int> chosen;
        std::vector<std::vector<int>> sets;
        detail::enumerate_admissible(f, 0, chosen, sets);
        for (const auto& s : sets)
            out.push_back(Extension{detail::sorted_ids(f, s), sem});
    } else {
        for (const auto& labels : detail::select_labels(f, sem, opts))
            out.push_back(Extension{detail::in_ids(f, labels), sem});
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Every total labelling satisfying the legality conditions. Their
/// in-sets coincide with the complete extensions.
inline std::vector<Labelling> legal_labellings(const Framework& f,
                                               const SemanticsOptions& opts = {}) {
    auto all = detail::complete_labels(f, opts);
    std::sort(all.begin(), all.end(), [&](const auto& a, const auto& b) {
        return detail::in_ids(f, a) < detail::in_ids(f, b);
    });
    std::vector<Labelling> out;
    for (const auto& labels : all) {
        Labelling l;
        for (int i = 0; i < static_cast<int>(f.size()); ++i) {
            Label v = labels[i] == detail::kIn    ? Label::in
                      : labels[i] == detail::kOut ? Label::out
                                                  : Label::undec;
            l.assignment[f.id_of(i)] = v;
        }
        out.push_back(std::move(l));
    }
    return out;
}

/// Status aggregated over every labelling selected by the semantics:
/// justified iff in everywhere, overruled iff out everywhere, otherwise
/// defensible.
inline Status argument_status(const Framework& f, const std::string& x, Semantics sem,
                              const SemanticsOptions& opts = {}) {
    const int idx = f.index_of(x);
    auto labels = detail::select_labels(f, sem, opts);
    if (labels.empty())
        throw SemanticError("no " + std::string(to_string(sem)) + " labelling exists");
    bool all_in = true, all_out = true;
    for (const auto& l : labels) {
        all_in = all_in && l[idx] == detail::kIn;
        all_out = all_out && l[idx] == detail::kOut;
    }
    if (all_in) return Status::justified;
    if (all_out) return Status::overruled;
    return Status::defensible;
}

}  // namespace arguendo::af
