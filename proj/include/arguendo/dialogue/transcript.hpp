#pragma once

#include <optional>
#include <string>
#include <vector>

#include "arguendo/dialogue/game.hpp"

namespace arguendo::dialogue {

struct TranscriptRow {
    Agent agent = Agent::proponent;
    std::string expression;
    int reference = -1;  // position the move reacts to; -1 for the thesis
    int counter = 0;
};

/// Two-column record of a play, mirroring the tabular presentation:
/// opponent moves on the left, proponent moves on the right.
struct Transcript {
    int rank_o = 0;
    int rank_p = 0;
    std::vector<TranscriptRow> rows;
    std::optional<Agent> verdict;
};

/// Replays a script from the initial state, failing on the first
/// illegal move with the violated rule and position.
inline Transcript play_script(const Sequent& thesis, const RuleSet& rules,
                              const std::vector<Move>& script) {
    DialogueState state = initial_state(thesis, rules);
    Transcript t;
    t.rank_o = rules.rank_o;
    t.rank_p = rules.rank_p;
    t.rows.push_back(TranscriptRow{Agent::proponent, state.move_at(0).expression(), -1, 0});
    for (const Move& m : script) {
        state = apply_move(state, m);
        const int pos = state.content_count();
        t.rows.push_back(TranscriptRow{m.agent, m.expression(), m.target, pos});
    }
    t.verdict = winner(state);
    return t;
}

inline Transcript play_script(const logic::Formula& thesis, const RuleSet& rules,
                              const std::vector<Move>& script) {
    return play_script(Sequent{{}, thesis}, rules, script);
}

/// Fixed-width rendering; the final line names the winner when the play
/// is over.
inline std::string render_transcript(const Transcript& t) {
    const std::string left_header = "Opponent [rank " + std::to_string(t.rank_o) + "]";
    const std::string right_header = "Proponent [rank " + std::to_string(t.rank_p) + "]";

    auto left_cell = [](const TranscriptRow& r) {
        std::string out = "(" + std::to_string(r.counter) + ")  " + r.expression;
        if (r.reference >= 0) out += "  " + std::to_string(r.reference);
        return out;
    };
    auto right_cell = [](const TranscriptRow& r) {
        return r.expression + "  (" + std::to_string(r.counter) + ")";
    };

    // pair rows: a proponent move answers the opponent move before it
    std::vector<std::pair<std::string, std::string>> lines;
    std::size_t i = 0;
    if (i < t.rows.size() && t.rows[i].agent == Agent::proponent) {
        lines.emplace_back("", right_cell(t.rows[i]));
        ++i;
    }
    while (i < t.rows.size()) {
        std::string left = left_cell(t.rows[i]);
        std::string right;
        ++i;
        if (i < t.rows.size() && t.rows[i].agent == Agent::proponent) {
            right = right_cell(t.rows[i]);
            ++i;
        } else if (t.verdict == Agent::opponent) {
            right = "⊗";  // the proponent has no reply
        }
        lines.emplace_back(std::move(left), std::move(right));
    }

    std::size_t width = left_header.size();
    for (const auto& [l, _] : lines) width = std::max(width, l.size());

    auto pad = [width](const std::string& cell) {
        return cell + std::string(width - cell.size(), ' ');
    };
    std::string out = pad(left_header) + " | " + right_header + "\n";
    for (const auto& [l, r] : lines) {
        out += pad(l) + " |";
        if (!r.empty()) out += " " + r;
        out += "\n";
    }
    if (t.verdict) out += std::string("The ") + to_string(*t.verdict) + " wins\n";
    return out;
}

}  // namespace arguendo::dialogue
