#pragma once

#include <random>
#include <string>
#include <vector>

#include "arguendo/af/framework.hpp"
#include "arguendo/logic/formula.hpp"
#include "arguendo/vaf/value_framework.hpp"

namespace testsupport {

inline arguendo::logic::Formula random_formula(std::mt19937& rng,
                                               const std::vector<std::string>& atoms,
                                               int depth) {
    using F = arguendo::logic::Formula;
    std::uniform_int_distribution<int> kind(0, depth <= 0 ? 0 : 4);
    switch (kind(rng)) {
        case 1: return F::negation(random_formula(rng, atoms, depth - 1));
        case 2:
            return F::conjunction(random_formula(rng, atoms, depth - 1),
                                  random_formula(rng, atoms, depth - 1));
        case 3:
            return F::disjunction(random_formula(rng, atoms, depth - 1),
                                  random_formula(rng, atoms, depth - 1));
        case 4:
            return F::implication(random_formula(rng, atoms, depth - 1),
                                  random_formula(rng, atoms, depth - 1));
        default: {
            std::uniform_int_distribution<std::size_t> pick(0, atoms.size() - 1);
            return F::atom(atoms[pick(rng)]);
        }
    }
}

inline arguendo::af::Framework random_framework(std::mt19937& rng, int max_nodes,
                                                double max_density) {
    std::uniform_int_distribution<int> size(1, max_nodes);
    std::uniform_real_distribution<double> density(0.0, max_density);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    arguendo::af::Framework f;
    const int n = size(rng);
    for (int i = 0; i < n; ++i) f.add_argument("n" + std::to_string(i));
    const double p = density(rng);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (coin(rng) < p) f.add_attack("n" + std::to_string(i), "n" + std::to_string(j));
    return f;
}

/// Random value framework with every total order over its values as an
/// audience (audience names aud0, aud1, ...).
inline arguendo::vaf::ValueFramework random_vaf(std::mt19937& rng, int max_nodes,
                                                int max_values, double max_density) {
    arguendo::af::Framework base = random_framework(rng, max_nodes, max_density);
    std::uniform_int_distribution<int> value_count(1, max_values);
    const int v = value_count(rng);
    std::vector<std::string> values;
    for (int i = 0; i < v; ++i) values.push_back("v" + std::to_string(i));
    std::map<std::string, std::string> value_map;
    std::uniform_int_distribution<int> pick(0, v - 1);
    for (const auto& node : base.nodes()) value_map[node] = values[pick(rng)];

    std::vector<arguendo::vaf::Audience> audiences;
    std::vector<std::string> order = values;
    std::sort(order.begin(), order.end());
    int index = 0;
    do {
        audiences.emplace_back("aud" + std::to_string(index++), order);
    } while (std::next_permutation(order.begin(), order.end()));
    return arguendo::vaf::ValueFramework(std::move(base), std::move(value_map),
                                         std::move(audiences));
}

}  // namespace testsupport
