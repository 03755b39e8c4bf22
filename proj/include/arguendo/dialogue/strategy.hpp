#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "arguendo/dialogue/game.hpp"

namespace arguendo::dialogue {

/// AND-OR strategy tree. At a proponent node the chosen move is stored;
/// every legal opponent reply must be covered by a branch.
struct StrategyNode {
    std::optional<Move> proponent_move;
    std::vector<std::pair<Move, StrategyNode>> opponent_branches;
};

struct StrategyResult {
    Agent winner = Agent::opponent;
    std::optional<StrategyNode> strategy;  // present when the proponent wins
};

namespace detail {

inline bool search(const DialogueState& state, StrategyNode& node) {
    if (state.content_count() > state.rules().depth_cap)
        throw ResourceError("strategy search exceeded the depth cap");
    const auto moves = legal_moves(state);
    if (moves.empty()) return state.to_move() == Agent::opponent;
    if (state.to_move() == Agent::proponent) {
        for (const Move& m : moves) {
            StrategyNode child;
            if (search(state.extended(m), child)) {
                node.proponent_move = m;
                node.opponent_branches = std::move(child.opponent_branches);
                return true;
            }
        }
        return false;
    }
    for (const Move& m : moves) {
        StrategyNode child;
        if (!search(state.extended(m), child)) return false;
        node.opponent_branches.emplace_back(m, std::move(child));
    }
    return true;
}

}  // namespace detail

/// Exhaustive game-tree search. The proponent wins exactly when a
/// strategy covers every opponent branch; the canonical first such
/// strategy is returned.
inline StrategyResult proponent_wins(const Sequent& thesis, const RuleSet& rules) {
    DialogueState root = initial_state(thesis, rules);
    if (root.thesis_is_bare_atom()) return StrategyResult{Agent::opponent, std::nullopt};
    StrategyNode node;
    if (detail::search(root, node))
        return StrategyResult{Agent::proponent, std::move(node)};
    return StrategyResult{Agent::opponent, std::nullopt};
}

inline StrategyResult proponent_wins(const logic::Formula& thesis, const RuleSet& rules) {
    return proponent_wins(Sequent{{}, thesis}, rules);
}

}  // namespace arguendo::dialogue
