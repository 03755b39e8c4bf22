#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "arguendo/af/framework.hpp"
#include "arguendo/errors.hpp"

namespace arguendo::vaf {

/// Total strict preference order over values, most preferred first.
class Audience {
public:
    Audience() = default;
    Audience(std::string name, std::vector<std::string> order)
        : name_(std::move(name)), order_(std::move(order)) {
        for (std::size_t i = 0; i < order_.size(); ++i)
            rank_[order_[i]] = static_cast<int>(i);
        if (rank_.size() != order_.size())
            throw SemanticError("audience '" + name_ + "' repeats a value");
    }

    const std::string& name() const { return name_; }
    const std::vector<std::string>& order() const { return order_; }
    bool knows(const std::string& value) const { return rank_.count(value) != 0; }

    /// True iff v1 is strictly preferred to v2.
    bool prefers(const std::string& v1, const std::string& v2) const {
        auto a = rank_.find(v1), b = rank_.find(v2);
        if (a == rank_.end() || b == rank_.end())
            throw SemanticError("audience '" + name_ + "' does not rank value '" +
                                (a == rank_.end() ? v1 : v2) + "'");
        return a->second < b->second;
    }

private:
    std::string name_;
    std::vector<std::string> order_;
    std::map<std::string, int> rank_;
};

/// Attack framework enriched with values, a total value map and a set
/// of named audiences.
class ValueFramework {
public:
    ValueFramework(af::Framework base, std::map<std::string, std::string> value_map,
                   std::vector<Audience> audiences)
        : base_(std::move(base)), value_map_(std::move(value_map)) {
        for (const auto& node : base_.nodes()) {
            auto it = value_map_.find(node);
            if (it == value_map_.end())
                throw SemanticError("no value mapped for argument '" + node + "'");
            values_.insert(it->second);
        }
        if (values_.empty())
            throw SemanticError("a value framework needs a non-empty set of values");
        for (auto& a : audiences) {
            for (const auto& v : values_)
                if (!a.knows(v))
                    throw SemanticError("audience '" + a.name() + "' does not order value '" +
                                        v + "'");
            for (const auto& v : a.order())
                if (!values_.count(v))
                    throw SemanticError("audience '" + a.name() + "' ranks unknown value '" +
                                        v + "'");
            audiences_[a.name()] = std::move(a);
        }
    }

    const af::Framework& base() const { return base_; }
    const std::set<std::string>& values() const { return values_; }

    const std::string& value_of(const std::string& node) const {
        base_.index_of(node);  // raises on unknown node
        return value_map_.at(node);
    }

    const Audience& audience(const std::string& name) const {
        auto it = audiences_.find(name);
        if (it == audiences_.end())
            throw SemanticError("unknown audience '" + name + "'");
        return it->second;
    }

    std::vector<std::string> audience_names() const {
        std::vector<std::string> out;
        for (const auto& [name, _] : audiences_) out.push_back(name);
        return out;
    }

private:
    af::Framework base_;
    std::map<std::string, std::string> value_map_;
    std::set<std::string> values_;
    std::map<std::string, Audience> audiences_;
};

/// Valpref for an audience over two values.
inline bool valpref(const Audience& aud, const std::string& v1, const std::string& v2) {
    return aud.prefers(v1, v2);
}

/// An attack succeeds as a defeat unless the target's value is strictly
/// preferred to the attacker's by the audience.
inline bool defeats_for(const Audience& aud, const std::string& x, const std::string& y,
                        const ValueFramework& vf) {
    if (!vf.base().has_attack(x, y)) return false;
    return !aud.prefers(vf.value_of(y), vf.value_of(x));
}

/// Plain framework with the same nodes and exactly the defeats that
/// survive for the audience.
inline af::Framework reduce_for_audience(const ValueFramework& vf, const Audience& aud) {
    af::Framework out;
    for (const auto& node : vf.base().nodes()) out.add_argument(node);
    for (const auto& [from, to] : vf.base().attacks())
        if (defeats_for(aud, from, to, vf)) out.add_attack(from, to);
    return out;
}

}  // namespace arguendo::vaf
