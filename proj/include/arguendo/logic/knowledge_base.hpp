#pragma once

#include <algorithm>
#include <vector>

#include "arguendo/logic/formula.hpp"

namespace arguendo::logic {

/// Ordered, duplicate-free collection of formulas. Insertion order is
/// preserved so that everything enumerated from a knowledge base is
/// deterministic.
class KnowledgeBase {
public:
    KnowledgeBase() = default;
    explicit KnowledgeBase(const std::vector<Formula>& formulas) {
        for (const Formula& f : formulas) insert(f);
    }

    /// Returns false (and changes nothing) when a syntactically equal
    /// member is already present.
    bool insert(const Formula& f) {
        if (contains(f)) return false;
        formulas_.push_back(f);
        return true;
    }

    bool contains(const Formula& f) const {
        return std::find(formulas_.begin(), formulas_.end(), f) != formulas_.end();
    }

    const std::vector<Formula>& formulas() const { return formulas_; }
    std::size_t size() const { return formulas_.size(); }
    bool empty() const { return formulas_.empty(); }

    auto begin() const { return formulas_.begin(); }
    auto end() const { return formulas_.end(); }

private:
    std::vector<Formula> formulas_;
};

}  // namespace arguendo::logic
