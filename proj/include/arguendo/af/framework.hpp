#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "arguendo/errors.hpp"

namespace arguendo::af {

/// Directed attack graph over named arguments. Node insertion order is
/// preserved; canonical (lexicographic) order is applied only when
/// results are rendered.
class Framework {
public:
    void add_argument(const std::string& id) {
        if (index_.count(id))
            throw SemanticError("duplicate argument id '" + id + "'");
        index_[id] = static_cast<int>(nodes_.size());
        nodes_.push_back(id);
        attackers_.emplace_back();
        targets_.emplace_back();
    }

    void add_attack(const std::string& from, const std::string& to) {
        const int f = index_of(from);
        const int t = index_of(to);
        if (attack_set_.count({f, t}))
            throw SemanticError("duplicate attack (" + from + "," + to + ")");
        attack_set_.insert({f, t});
        attacks_.emplace_back(f, t);
        attackers_[t].push_back(f);
        targets_[f].push_back(t);
    }

    bool has_node(const std::string& id) const { return index_.count(id) != 0; }

    bool has_attack(const std::string& from, const std::string& to) const {
        return attack_set_.count({index_of(from), index_of(to)}) != 0;
    }

    const std::vector<std::string>& nodes() const { return nodes_; }
    std::size_t size() const { return nodes_.size(); }

    /// Attacks in insertion order as id pairs.
    std::vector<std::pair<std::string, std::string>> attacks() const {
        std::vector<std::pair<std::string, std::string>> out;
        out.reserve(attacks_.size());
        for (auto [f, t] : attacks_) out.emplace_back(nodes_[f], nodes_[t]);
        return out;
    }

    int index_of(const std::string& id) const {
        auto it = index_.find(id);
        if (it == index_.end())
            throw SemanticError("unknown argument '" + id + "'");
        return it->second;
    }

    const std::string& id_of(int index) const { return nodes_[index]; }

    const std::vector<int>& attackers_of(int index) const { return attackers_[index]; }
    const std::vector<int>& targets_of(int index) const { return targets_[index]; }
    bool has_attack_index(int from, int to) const { return attack_set_.count({from, to}) != 0; }

private:
    std::vector<std::string> nodes_;
    std::map<std::string, int> index_;
    std::vector<std::pair<int, int>> attacks_;
    std::set<std::pair<int, int>> attack_set_;
    std::vector<std::vector<int>> attackers_;
    std::vector<std::vector<int>> targets_;
};

namespace detail {

inline std::vector<int> to_indices(const std::set<std::string>& s, const Framework& f) {
    std::vector<int> out;
    out.reserve(s.size());
    for (const auto& id : s) out.push_back(f.index_of(id));
    return out;
}

}  // namespace detail

/// True iff no attack has both endpoints in s.
inline bool is_conflict_free(const std::set<std::string>& s, const Framework& f) {
    const auto members = detail::to_indices(s, f);
    for (int a : members)
        for (int b : members)
            if (f.has_attack_index(a, b)) return false;
    return true;
}

/// True iff every attacker of x is attacked by some member of s.
inline bool defends(const std::set<std::string>& s, const std::string& x, const Framework& f) {
    const auto members = detail::to_indices(s, f);
    for (int attacker : f.attackers_of(f.index_of(x))) {
        bool countered = false;
        for (int m : members)
            if (f.has_attack_index(m, attacker)) {
                countered = true;
                break;
            }
        if (!countered) return false;
    }
    return true;
}

}  // namespace arguendo::af
