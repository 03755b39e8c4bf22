#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "arguendo/errors.hpp"
#include "arguendo/logic/formula.hpp"

namespace arguendo::logic {

/// Total truth assignment over a declared atom universe.
using Interpretation = std::map<std::string, bool>;

struct EntailmentOptions {
    /// Exhaustive evaluation refuses inputs with more atoms than this.
    std::size_t max_atoms = 20;
};

/// Classical truth-table evaluation. Raises if the interpretation is
/// partial over the formula's atoms.
inline bool evaluate(const Formula& f, const Interpretation& i) {
    switch (f.kind()) {
        case Formula::Kind::atom: {
            auto it = i.find(f.atom_name());
            if (it == i.end())
                throw SemanticError("interpretation misses atom '" + f.atom_name() + "'");
            return it->second;
        }
        case Formula::Kind::negation: return !evaluate(f.left(), i);
        case Formula::Kind::conjunction: return evaluate(f.left(), i) && evaluate(f.right(), i);
        case Formula::Kind::disjunction: return evaluate(f.left(), i) || evaluate(f.right(), i);
        case Formula::Kind::implication: return !evaluate(f.left(), i) || evaluate(f.right(), i);
    }
    return false;
}

namespace detail {

inline std::vector<std::string> atom_universe(const std::vector<Formula>& gamma,
                                              const Formula* extra,
                                              const EntailmentOptions& opts) {
    std::set<std::string> atoms;
    for (const Formula& g : gamma)
        for (const auto& a : g.atoms()) atoms.insert(a);
    if (extra)
        for (const auto& a : extra->atoms()) atoms.insert(a);
    if (atoms.size() > opts.max_atoms)
        throw ResourceError("entailment check over " + std::to_string(atoms.size()) +
                            " atoms exceeds the bound of " + std::to_string(opts.max_atoms));
    return {atoms.begin(), atoms.end()};
}

// Invokes fn on every interpretation; stops early when fn returns false.
template <typename Fn>
void for_each_interpretation(const std::vector<std::string>& atoms, Fn&& fn) {
    const std::uint64_t rows = std::uint64_t{1} << atoms.size();
    Interpretation i;
    for (std::uint64_t row = 0; row < rows; ++row) {
        for (std::size_t k = 0; k < atoms.size(); ++k)
            i[atoms[k]] = (row >> k) & 1;
        if (!fn(i)) return;
    }
}

}  // namespace detail

/// Classical entailment decided by exhaustive truth tables.
inline bool entails(const std::vector<Formula>& gamma, const Formula& phi,
                    const EntailmentOptions& opts = {}) {
    const auto atoms = detail::atom_universe(gamma, &phi, opts);
    bool holds = true;
    detail::for_each_interpretation(atoms, [&](const Interpretation& i) {
        for (const Formula& g : gamma)
            if (!evaluate(g, i)) return true;  // premise falsified, row irrelevant
        if (!evaluate(phi, i)) {
            holds = false;
            return false;
        }
        return true;
    });
    return holds;
}

/// True iff some interpretation satisfies every member of gamma.
inline bool is_consistent(const std::vector<Formula>& gamma,
                          const EntailmentOptions& opts = {}) {
    const auto atoms = detail::atom_universe(gamma, nullptr, opts);
    bool sat = false;
    detail::for_each_interpretation(atoms, [&](const Interpretation& i) {
        for (const Formula& g : gamma)
            if (!evaluate(g, i)) return true;
        sat = true;
        return false;
    });
    return sat;
}

/// True iff phi holds under every interpretation of its atoms.
inline bool is_valid(const Formula& phi, const EntailmentOptions& opts = {}) {
    return entails({}, phi, opts);
}

}  // namespace arguendo::logic
