#pragma once

#include <string>

#include "arguendo/errors.hpp"

namespace arguendo::dialogue {

enum class DialogueStyle { classical, intuitionistic };

/// Structural rule configuration for a dialogue game.
///
/// Ranks bound how often an agent may repeat one and the same move
/// (identical function, target and payload). Independently of ranks,
/// an agent may never re-play a payload it already played against the
/// same target; this is the repetition ban behind the winning
/// criterion, and it is what keeps every game finite.
struct RuleSet {
    DialogueStyle style = DialogueStyle::classical;
    int rank_o = 2;
    int rank_p = 2;
    /// The proponent may attack a negated atomic statement only if the
    /// opponent has attacked the same statement before.
    bool negative_literal = false;
    /// The opponent may neither assert an atom the proponent has
    /// already asserted, nor attack a negated atomic statement of the
    /// proponent's unless the proponent attacked the same statement
    /// before. Together these reproduce the bounded-repetition reading
    /// of the paraconsistent preset.
    bool d11_atom_restriction = false;
    /// Hard bound on content moves per play.
    int depth_cap = 64;

    static RuleSet classical_rules() { return RuleSet{}; }

    static RuleSet intuitionistic_rules() {
        RuleSet r;
        r.style = DialogueStyle::intuitionistic;
        r.rank_o = 1;
        r.rank_p = 1;
        return r;
    }

    static RuleSet d11() {
        RuleSet r;
        r.rank_o = 1;
        r.rank_p = 1;
        r.d11_atom_restriction = true;
        return r;
    }

    static RuleSet d11_nl() {
        RuleSet r = d11();
        r.negative_literal = true;
        return r;
    }

    static RuleSet preset(const std::string& name) {
        if (name == "classical") return classical_rules();
        if (name == "intuitionistic") return intuitionistic_rules();
        if (name == "d11") return d11();
        if (name == "d11-nl") return d11_nl();
        throw SemanticError("unknown rule preset '" + name + "'");
    }
};

}  // namespace arguendo::dialogue
