#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "arguendo/dialogue/rules.hpp"
#include "arguendo/errors.hpp"
#include "arguendo/logic/formula.hpp"

namespace arguendo::dialogue {

enum class Agent { proponent, opponent };

inline Agent other(Agent a) {
    return a == Agent::proponent ? Agent::opponent : Agent::proponent;
}

inline const char* to_string(Agent a) {
    return a == Agent::proponent ? "Proponent" : "Opponent";
}

enum class MoveKind { assertion, request, rank };
enum class MoveFunction { thesis, rank, attack, defence };
enum class RequestToken { none, left, right, disjunction };

inline const char* to_string(RequestToken t) {
    switch (t) {
        case RequestToken::left: return "?L";
        case RequestToken::right: return "?R";
        case RequestToken::disjunction: return "?";
        default: return "";
    }
}

/// Thesis of a dialogue: a bare formula (no premises) or the claim that
/// the conclusion follows from the premises.
struct Sequent {
    std::vector<logic::Formula> premises;
    logic::Formula conclusion;
};

/// One move. Positions count displayed moves: 0 is the thesis, content
/// moves are numbered from 1; rank declarations sit between them in the
/// raw history but have no position of their own.
struct Move {
    Agent agent = Agent::proponent;
    MoveKind kind = MoveKind::assertion;
    MoveFunction function = MoveFunction::attack;
    int target = -1;
    int premise_index = -1;  // addresses one premise of a concession
    std::optional<logic::Formula> formula;
    std::vector<logic::Formula> premises;  // premise concession payload
    RequestToken request = RequestToken::none;
    int rank_value = 0;

    /// Payload identity used by the repetition ban and rank budgets.
    std::string payload_key() const {
        if (kind == MoveKind::request) return to_string(request);
        if (!premises.empty()) {
            std::string key = "!";
            for (const auto& p : premises) key += logic::render_formula(p) + ",";
            return key;
        }
        return formula ? logic::render_formula(*formula) : "";
    }

    std::string expression() const {
        if (kind == MoveKind::request) return to_string(request);
        if (kind == MoveKind::rank) return std::string("n:=") + std::to_string(rank_value);
        if (!premises.empty()) {
            std::string out;
            for (std::size_t i = 0; i < premises.size(); ++i) {
                if (i) out += ", ";
                out += logic::render_formula(premises[i]);
            }
            return out;
        }
        return formula ? logic::render_formula(*formula) : "";
    }

    friend bool operator==(const Move& a, const Move& b) {
        return a.agent == b.agent && a.kind == b.kind && a.function == b.function &&
               a.target == b.target && a.premise_index == b.premise_index &&
               a.request == b.request && a.premises == b.premises &&
               a.formula.has_value() == b.formula.has_value() &&
               (!a.formula || *a.formula == *b.formula);
    }
};

/// Immutable game position: thesis, rules and the full move history.
class DialogueState {
public:
    DialogueState(Sequent thesis, RuleSet rules)
        : thesis_(std::move(thesis)), rules_(rules) {
        Move opening;
        opening.agent = Agent::proponent;
        opening.kind = MoveKind::assertion;
        opening.function = MoveFunction::thesis;
        opening.formula = thesis_.conclusion;
        opening.premises = thesis_.premises;
        history_.push_back(std::move(opening));
        Move o_rank;
        o_rank.agent = Agent::opponent;
        o_rank.kind = MoveKind::rank;
        o_rank.function = MoveFunction::rank;
        o_rank.rank_value = rules_.rank_o;
        history_.push_back(std::move(o_rank));
        Move p_rank = history_.back();
        p_rank.agent = Agent::proponent;
        p_rank.rank_value = rules_.rank_p;
        history_.push_back(std::move(p_rank));
    }

    const Sequent& thesis() const { return thesis_; }
    const RuleSet& rules() const { return rules_; }
    const std::vector<Move>& history() const { return history_; }

    Agent to_move() const {
        return content_count() % 2 == 0 ? Agent::opponent : Agent::proponent;
    }

    int content_count() const { return static_cast<int>(history_.size()) - 3; }

    /// Position the next move will occupy.
    int next_position() const { return content_count() + 1; }

    const Move& move_at(int position) const {
        const int raw = position == 0 ? 0 : position + 2;
        if (position < 0 || raw >= static_cast<int>(history_.size()))
            throw SemanticError("no move at position " + std::to_string(position));
        return history_[static_cast<std::size_t>(raw)];
    }

    bool thesis_is_bare_atom() const {
        return thesis_.premises.empty() && thesis_.conclusion.is_atom();
    }

    DialogueState extended(Move m) const {
        DialogueState next = *this;
        next.history_.push_back(std::move(m));
        return next;
    }

private:
    Sequent thesis_;
    RuleSet rules_;
    std::vector<Move> history_;
};

namespace detail {

struct Statement {
    Agent owner;
    std::optional<logic::Formula> formula;  // absent for a sequent thesis
    bool is_sequent = false;
};

/// Statement standing at (position, premise index), if any.
inline std::optional<Statement> statement_at(const DialogueState& s, int position,
                                             int premise_index) {
    if (position < 0 || position > s.content_count()) return std::nullopt;
    const Move& m = s.move_at(position);
    if (position == 0) {
        if (!s.thesis().premises.empty()) {
            if (premise_index >= 0) return std::nullopt;
            return Statement{Agent::proponent, std::nullopt, true};
        }
        if (premise_index >= 0) return std::nullopt;
        return Statement{Agent::proponent, s.thesis().conclusion, false};
    }
    if (m.kind == MoveKind::request) return std::nullopt;
    if (!m.premises.empty()) {
        if (premise_index < 0 || premise_index >= static_cast<int>(m.premises.size()))
            return std::nullopt;
        return Statement{m.agent, m.premises[static_cast<std::size_t>(premise_index)], false};
    }
    if (premise_index >= 0) return std::nullopt;
    if (!m.formula) return std::nullopt;
    return Statement{m.agent, *m.formula, false};
}

inline bool agent_asserted(const DialogueState& s, Agent a, const logic::Formula& f) {
    for (int p = 0; p <= s.content_count(); ++p) {
        const Move& m = s.move_at(p);
        if (m.agent != a || m.kind == MoveKind::request) continue;
        if (p == 0 && !s.thesis().premises.empty()) continue;  // sequent claim, not an assertion of f
        if (m.formula && *m.formula == f) return true;
        for (const auto& prem : m.premises)
            if (prem == f) return true;
    }
    return false;
}

/// True iff agent a has attacked a statement whose formula equals f.
inline bool agent_attacked_statement(const DialogueState& s, Agent a, const logic::Formula& f) {
    for (int p = 1; p <= s.content_count(); ++p) {
        const Move& m = s.move_at(p);
        if (m.agent != a || m.function != MoveFunction::attack) continue;
        auto target = statement_at(s, m.target, m.premise_index);
        if (target && target->formula && *target->formula == f) return true;
    }
    return false;
}

inline bool is_negated_atom(const logic::Formula& f) {
    return f.kind() == logic::Formula::Kind::negation && f.left().is_atom();
}

/// Position of the most recent opponent attack the agent has not yet
/// defended, if any (the intuitionistic defence window).
inline std::optional<int> last_open_attack(const DialogueState& s, Agent agent) {
    for (int p = s.content_count(); p >= 1; --p) {
        const Move& m = s.move_at(p);
        if (m.agent != other(agent) || m.function != MoveFunction::attack) continue;
        bool defended = false;
        for (int q = p + 1; q <= s.content_count(); ++q) {
            const Move& d = s.move_at(q);
            if (d.agent == agent && d.function == MoveFunction::defence && d.target == p) {
                defended = true;
                break;
            }
        }
        if (!defended) return p;
    }
    return std::nullopt;
}

/// Names the structural rule the move violates, or returns an empty
/// string when the move is legal. Local shape (targets, payload forms)
/// must already be sound.
inline std::string structural_violation(const DialogueState& s, const Move& m) {
    const RuleSet& rules = s.rules();

    // Ranks bound repetitions of one and the same move; independently,
    // re-playing a payload against a target it was already played at is
    // never a fresh contribution and is banned outright.
    int identical = 0;
    bool replayed = false;
    for (int p = 1; p <= s.content_count(); ++p) {
        const Move& past = s.move_at(p);
        if (past.agent != m.agent) continue;
        if (past.target == m.target && past.premise_index == m.premise_index &&
            past.payload_key() == m.payload_key()) {
            replayed = true;
            if (past.function == m.function) ++identical;
        }
    }
    const int rank = m.agent == Agent::opponent ? rules.rank_o : rules.rank_p;
    if (identical >= rank) return "rank budget";
    if (replayed) return "repetition rule";

    // formal atom rule: the proponent may assert an atom only when the
    // opponent granted it, or when a request demands that very atom
    if (m.agent == Agent::proponent && m.kind == MoveKind::assertion && m.formula &&
        m.formula->is_atom() && !agent_asserted(s, Agent::opponent, *m.formula)) {
        const bool unpacking = m.function == MoveFunction::defence &&
                               s.move_at(m.target).kind == MoveKind::request;
        if (!unpacking) return "atom rule";
    }

    if (m.function == MoveFunction::attack) {
        auto target = statement_at(s, m.target, m.premise_index);
        if (target && target->formula && is_negated_atom(*target->formula)) {
            if (rules.negative_literal && m.agent == Agent::proponent &&
                !agent_attacked_statement(s, Agent::opponent, *target->formula))
                return "negative literal rule";
            if (rules.d11_atom_restriction && m.agent == Agent::opponent &&
                !agent_attacked_statement(s, Agent::proponent, *target->formula))
                return "atom restriction rule";
        }
    }
    if (rules.d11_atom_restriction && m.agent == Agent::opponent &&
        m.kind == MoveKind::assertion && m.formula && m.formula->is_atom() &&
        agent_asserted(s, Agent::proponent, *m.formula))
        return "atom restriction rule";

    if (m.function == MoveFunction::defence && rules.style == DialogueStyle::intuitionistic) {
        auto open = last_open_attack(s, m.agent);
        if (!open || *open != m.target) return "style rule";
    }
    return "";
}

inline Move make_assertion(Agent agent, MoveFunction fn, int target, int premise_index,
                           logic::Formula payload) {
    Move m;
    m.agent = agent;
    m.kind = MoveKind::assertion;
    m.function = fn;
    m.target = target;
    m.premise_index = premise_index;
    m.formula = std::move(payload);
    return m;
}

inline Move make_request(Agent agent, int target, int premise_index, RequestToken token) {
    Move m;
    m.agent = agent;
    m.kind = MoveKind::request;
    m.function = MoveFunction::attack;
    m.target = target;
    m.premise_index = premise_index;
    m.request = token;
    return m;
}

/// Candidate moves by the local rules alone; structural rules are
/// filtered afterwards.
inline std::vector<Move> local_candidates(const DialogueState& s) {
    std::vector<Move> out;
    const Agent agent = s.to_move();
    using Kind = logic::Formula::Kind;

    // attacks on every opposing statement
    for (int p = 0; p <= s.content_count(); ++p) {
        auto add_attacks = [&](int premise_index, const Statement& stmt) {
            if (stmt.owner != other(agent)) return;
            if (stmt.is_sequent) {
                if (agent == Agent::opponent) {
                    Move m;
                    m.agent = agent;
                    m.kind = MoveKind::assertion;
                    m.function = MoveFunction::attack;
                    m.target = p;
                    m.premises = s.thesis().premises;
                    out.push_back(std::move(m));
                }
                return;
            }
            const logic::Formula& f = *stmt.formula;
            switch (f.kind()) {
                case Kind::negation:
                    out.push_back(make_assertion(agent, MoveFunction::attack, p, premise_index,
                                                 f.left()));
                    break;
                case Kind::conjunction:
                    out.push_back(make_request(agent, p, premise_index, RequestToken::left));
                    out.push_back(make_request(agent, p, premise_index, RequestToken::right));
                    break;
                case Kind::disjunction:
                    out.push_back(make_request(agent, p, premise_index, RequestToken::disjunction));
                    break;
                case Kind::implication:
                    out.push_back(make_assertion(agent, MoveFunction::attack, p, premise_index,
                                                 f.left()));
                    break;
                case Kind::atom:
                    break;
            }
        };
        if (auto stmt = statement_at(s, p, -1)) {
            add_attacks(-1, *stmt);
        } else {
            for (int j = 0;; ++j) {
                auto part = statement_at(s, p, j);
                if (!part) break;
                add_attacks(j, *part);
            }
        }
    }

    // defences against opposing attacks
    for (int p = 1; p <= s.content_count(); ++p) {
        const Move& attack = s.move_at(p);
        if (attack.agent != other(agent) || attack.function != MoveFunction::attack) continue;
        auto target = statement_at(s, attack.target, attack.premise_index);
        if (!target) continue;
        if (target->is_sequent) {
            out.push_back(make_assertion(agent, MoveFunction::defence, p, -1,
                                         s.thesis().conclusion));
            continue;
        }
        const logic::Formula& f = *target->formula;
        if (attack.kind == MoveKind::request) {
            if (attack.request == RequestToken::left)
                out.push_back(make_assertion(agent, MoveFunction::defence, p, -1, f.left()));
            else if (attack.request == RequestToken::right)
                out.push_back(make_assertion(agent, MoveFunction::defence, p, -1, f.right()));
            else {
                out.push_back(make_assertion(agent, MoveFunction::defence, p, -1, f.left()));
                out.push_back(make_assertion(agent, MoveFunction::defence, p, -1, f.right()));
            }
        } else if (f.kind() == Kind::implication) {
            out.push_back(make_assertion(agent, MoveFunction::defence, p, -1, f.right()));
        }
        // negation attacks admit no defence
    }
    return out;
}

}  // namespace detail

inline DialogueState initial_state(const Sequent& thesis, const RuleSet& rules) {
    return DialogueState(thesis, rules);
}

inline DialogueState initial_state(const logic::Formula& thesis, const RuleSet& rules) {
    return DialogueState(Sequent{{}, thesis}, rules);
}

/// Moves the agent to move may legally play, in canonical order.
inline std::vector<Move> legal_moves(const DialogueState& s) {
    if (s.thesis_is_bare_atom()) return {};
    std::vector<Move> out;
    for (Move& m : detail::local_candidates(s))
        if (detail::structural_violation(s, m).empty()) out.push_back(std::move(m));
    std::sort(out.begin(), out.end(), [](const Move& a, const Move& b) {
        if (a.target != b.target) return a.target < b.target;
        if (a.premise_index != b.premise_index) return a.premise_index < b.premise_index;
        const std::string ka = a.payload_key(), kb = b.payload_key();
        if (ka != kb) return ka < kb;
        return a.function < b.function;
    });
    return out;
}

/// Applies a move after validating it, naming the violated rule on
/// failure.
inline DialogueState apply_move(const DialogueState& s, const Move& m) {
    if (m.agent != s.to_move())
        throw SemanticError("illegal move at position " + std::to_string(s.next_position()) +
                            ": move order rule");
    const auto candidates = detail::local_candidates(s);
    if (std::find(candidates.begin(), candidates.end(), m) == candidates.end())
        throw SemanticError("illegal move at position " + std::to_string(s.next_position()) +
                            ": local rule");
    const std::string violated = detail::structural_violation(s, m);
    if (!violated.empty())
        throw SemanticError("illegal move at position " + std::to_string(s.next_position()) +
                            ": " + violated);
    if (s.content_count() + 1 > s.rules().depth_cap)
        throw ResourceError("dialogue exceeded its depth cap");
    return s.extended(m);
}

/// Winner once the agent to move has no legal continuation. A bare
/// atomic thesis loses immediately: its assertion already breaks the
/// atom rule.
inline std::optional<Agent> winner(const DialogueState& s) {
    if (s.thesis_is_bare_atom()) return Agent::opponent;
    if (legal_moves(s).empty()) return other(s.to_move());
    return std::nullopt;
}

}  // namespace arguendo::dialogue
