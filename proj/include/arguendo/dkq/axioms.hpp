#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "arguendo/dkq/formula.hpp"
#include "arguendo/errors.hpp"

namespace arguendo::dkq {

/// One axiom scheme over metaformulas A..D. Two schemes are
/// substitution-shaped and matched specially; the rest are plain
/// patterns.
struct AxiomScheme {
    enum class Form {
        pattern,           // structural pattern over metaformulas
        subst_plain,       // A -> A(t/x)
        subst_universal    // (x)A -> A(t/x)
    };
    int id = 0;
    Form form = Form::pattern;
    std::optional<FOFormula> pattern;
    /// (variable metavar, formula metavar) pairs: the bound variable
    /// must not occur free in the matched formula.
    std::vector<std::pair<std::string, std::string>> provisos;
};

using SchemeSet = std::vector<AxiomScheme>;

namespace detail {

inline FOFormula A() { return FOFormula::metaformula("A"); }
inline FOFormula B() { return FOFormula::metaformula("B"); }
inline FOFormula C() { return FOFormula::metaformula("C"); }

}  // namespace detail

/// The thirteen schemes exactly as printed, including the duplicated
/// distribution scheme (4 = 5) and the one-sided conjunction scheme (6).
inline const SchemeSet& printed_schemes() {
    using F = FOFormula;
    static const SchemeSet schemes = [] {
        using detail::A;
        using detail::B;
        using detail::C;
        SchemeSet s;
        auto pattern = [&](int id, FOFormula p) {
            s.push_back(AxiomScheme{id, AxiomScheme::Form::pattern, std::move(p), {}});
        };
        pattern(1, F::implication(A(), A()));
        pattern(2, F::implication(F::conjunction(A(), B()), A()));
        pattern(3, F::implication(F::conjunction(A(), B()), B()));
        const FOFormula distribution = F::implication(
            F::conjunction(A(), F::disjunction(B(), C())),
            F::disjunction(F::conjunction(A(), B()), C()));
        pattern(4, distribution);
        pattern(5, distribution);
        pattern(6, F::implication(
                       F::conjunction(F::implication(A(), B()), F::implication(B(), C())),
                       F::implication(A(), F::conjunction(B(), C()))));
        pattern(7, F::implication(
                       F::conjunction(F::implication(A(), B()), F::implication(B(), C())),
                       F::implication(A(), C())));
        pattern(8, F::implication(F::implication(A(), F::negation(B())),
                                  F::implication(B(), F::negation(A()))));
        pattern(9, F::implication(F::negation(F::negation(A())), A()));
        pattern(10, F::disjunction(A(), F::negation(A())));
        s.push_back(AxiomScheme{11, AxiomScheme::Form::subst_plain, std::nullopt, {}});
        pattern(12, F::implication(F::implication(A(), B()),
                                   F::implication(A(), F::forall("x", B()))));
        pattern(13, F::implication(F::disjunction(A(), B()),
                                   F::disjunction(A(), F::forall("x", B()))));
        return s;
    }();
    return schemes;
}

/// Standard forms of the same schemes: both distribution slots carry
/// the full distribution axiom, scheme 6 collects consequents, the
/// quantifier schemes take their usual shapes with freeness provisos.
inline const SchemeSet& corrected_schemes() {
    using F = FOFormula;
    static const SchemeSet schemes = [] {
        using detail::A;
        using detail::B;
        using detail::C;
        SchemeSet s;
        auto pattern = [&](int id, FOFormula p,
                           std::vector<std::pair<std::string, std::string>> provisos = {}) {
            s.push_back(AxiomScheme{id, AxiomScheme::Form::pattern, std::move(p),
                                    std::move(provisos)});
        };
        pattern(1, F::implication(A(), A()));
        pattern(2, F::implication(F::conjunction(A(), B()), A()));
        pattern(3, F::implication(F::conjunction(A(), B()), B()));
        const FOFormula distribution = F::implication(
            F::conjunction(A(), F::disjunction(B(), C())),
            F::disjunction(F::conjunction(A(), B()), F::conjunction(A(), C())));
        pattern(4, distribution);
        pattern(5, distribution);
        pattern(6, F::implication(
                       F::conjunction(F::implication(A(), B()), F::implication(A(), C())),
                       F::implication(A(), F::conjunction(B(), C()))));
        pattern(7, F::implication(
                       F::conjunction(F::implication(A(), B()), F::implication(B(), C())),
                       F::implication(A(), C())));
        pattern(8, F::implication(F::implication(A(), F::negation(B())),
                                  F::implication(B(), F::negation(A()))));
        pattern(9, F::implication(F::negation(F::negation(A())), A()));
        pattern(10, F::disjunction(A(), F::negation(A())));
        s.push_back(AxiomScheme{11, AxiomScheme::Form::subst_universal, std::nullopt, {}});
        pattern(12, F::implication(F::forall("x", F::implication(A(), B())),
                                   F::implication(A(), F::forall("x", B()))),
                {{"x", "A"}});
        pattern(13, F::implication(F::disjunction(A(), F::forall("x", B())),
                                   F::forall("x", F::disjunction(A(), B()))),
                {{"x", "A"}});
        return s;
    }();
    return schemes;
}

struct AxiomMatch {
    int scheme_id = 0;
    /// Metaformulas rendered, plus "x"/"t" for substitution schemes.
    std::map<std::string, std::string> bindings;
};

namespace detail {

struct MatchContext {
    std::map<std::string, FOFormula> meta;
    std::map<std::string, std::string> vars;
};

inline bool match_pattern(const FOFormula& pattern, const FOFormula& f, MatchContext& ctx) {
    using Kind = FOFormula::Kind;
    switch (pattern.kind()) {
        case Kind::metaformula: {
            auto it = ctx.meta.find(pattern.name());
            if (it != ctx.meta.end()) return it->second == f;
            ctx.meta.emplace(pattern.name(), f);
            return true;
        }
        case Kind::forall:
        case Kind::exists: {
            if (f.kind() != pattern.kind()) return false;
            auto it = ctx.vars.find(pattern.name());
            if (it != ctx.vars.end()) {
                if (it->second != f.name()) return false;
            } else {
                ctx.vars.emplace(pattern.name(), f.name());
            }
            return match_pattern(pattern.body(), f.body(), ctx);
        }
        case Kind::negation:
            return f.kind() == Kind::negation && match_pattern(pattern.left(), f.left(), ctx);
        case Kind::conjunction:
        case Kind::disjunction:
        case Kind::implication:
            return f.kind() == pattern.kind() && match_pattern(pattern.left(), f.left(), ctx) &&
                   match_pattern(pattern.right(), f.right(), ctx);
        default:
            return pattern == f;
    }
}

// Collects (term-in-a, term-in-b) pairs at positions where the two
// formulas differ; nullopt when they differ beyond term positions.
inline bool collect_term_diffs(const FOFormula& a, const FOFormula& b,
                               std::vector<std::pair<Term, Term>>& out) {
    using Kind = FOFormula::Kind;
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
        case Kind::atom:
        case Kind::metaformula:
            return a.name() == b.name();
        case Kind::predicate: {
            if (a.name() != b.name() || a.args().size() != b.args().size()) return false;
            for (std::size_t i = 0; i < a.args().size(); ++i)
                if (a.args()[i] != b.args()[i]) out.emplace_back(a.args()[i], b.args()[i]);
            return true;
        }
        case Kind::negation:
            return collect_term_diffs(a.left(), b.left(), out);
        case Kind::forall:
        case Kind::exists:
            return a.name() == b.name() && collect_term_diffs(a.body(), b.body(), out);
        default:
            return collect_term_diffs(a.left(), b.left(), out) &&
                   collect_term_diffs(a.right(), b.right(), out);
    }
}

/// Matches body -> body(t/x) given the instantiated left side; fills
/// the x/t bindings on success.
inline bool match_substitution(const FOFormula& body, const FOFormula& instance,
                               const std::optional<std::string>& fixed_var,
                               std::map<std::string, std::string>& bindings) {
    if (body == instance) {
        if (fixed_var) bindings["x"] = *fixed_var;
        return true;  // vacuous substitution
    }
    std::vector<std::pair<Term, Term>> diffs;
    if (!collect_term_diffs(body, instance, diffs) || diffs.empty()) return false;
    std::set<std::pair<std::string, std::string>> candidates;
    for (const auto& [from, to] : diffs) {
        if (from.kind != Term::Kind::variable) return false;
        if (fixed_var && from.name != *fixed_var) return false;
        candidates.insert({from.name, to.name});
    }
    for (const auto& [var, term_name] : candidates) {
        const Term t = Term::make(term_name);
        try {
            if (substitute(body, var, t) == instance) {
                bindings["x"] = var;
                bindings["t"] = term_name;
                return true;
            }
        } catch (const SemanticError&) {
            // capture; not a legitimate instance via this candidate
        }
    }
    return false;
}

inline bool match_scheme(const AxiomScheme& scheme, const FOFormula& f, AxiomMatch& out) {
    out = AxiomMatch{scheme.id, {}};
    if (scheme.form == AxiomScheme::Form::pattern) {
        MatchContext ctx;
        if (!match_pattern(*scheme.pattern, f, ctx)) return false;
        for (const auto& [var_meta, formula_meta] : scheme.provisos) {
            auto v = ctx.vars.find(var_meta);
            auto m = ctx.meta.find(formula_meta);
            if (v != ctx.vars.end() && m != ctx.meta.end() &&
                m->second.free_variables().count(v->second))
                return false;
        }
        for (const auto& [name, formula] : ctx.meta)
            out.bindings[name] = render_fo_formula(formula);
        for (const auto& [name, var] : ctx.vars) out.bindings[name] = var;
        return true;
    }
    if (f.kind() != FOFormula::Kind::implication) return false;
    FOFormula lhs = f.left();
    std::optional<std::string> fixed_var;
    if (scheme.form == AxiomScheme::Form::subst_universal) {
        if (lhs.kind() != FOFormula::Kind::forall) return false;
        fixed_var = lhs.name();
        lhs = lhs.body();
    }
    if (!match_substitution(lhs, f.right(), fixed_var, out.bindings)) return false;
    out.bindings["A"] = render_fo_formula(lhs);
    return true;
}

}  // namespace detail

/// Every scheme the formula instantiates, in ascending id order.
inline std::vector<AxiomMatch> match_axiom(const FOFormula& f,
                                           const SchemeSet& schemes = printed_schemes()) {
    std::vector<AxiomMatch> out;
    for (const AxiomScheme& scheme : schemes) {
        AxiomMatch match;
        if (detail::match_scheme(scheme, f, match)) out.push_back(std::move(match));
    }
    return out;
}

enum class Rule { mp, adj, affix, gen };

inline const char* to_string(Rule r) {
    switch (r) {
        case Rule::mp: return "mp";
        case Rule::adj: return "adj";
        case Rule::affix: return "affix";
        case Rule::gen: return "gen";
    }
    return "?";
}

inline std::size_t rule_arity(Rule r) {
    return r == Rule::mp || r == Rule::adj ? 2 : 1;
}

/// One-step rule application check.
inline bool check_rule(Rule rule, const std::vector<FOFormula>& premises,
                       const FOFormula& conclusion) {
    if (premises.size() != rule_arity(rule))
        throw SemanticError(std::string(to_string(rule)) + " expects " +
                            std::to_string(rule_arity(rule)) + " premises, got " +
                            std::to_string(premises.size()));
    using Kind = FOFormula::Kind;
    switch (rule) {
        case Rule::mp:
            return premises[1].kind() == Kind::implication &&
                   premises[1].left() == premises[0] && premises[1].right() == conclusion;
        case Rule::adj:
            return conclusion.kind() == Kind::conjunction &&
                   conclusion.left() == premises[0] && conclusion.right() == premises[1];
        case Rule::affix: {
            const FOFormula& p = premises[0];
            if (p.kind() != Kind::implication || p.left().kind() != Kind::implication ||
                p.right().kind() != Kind::implication)
                return false;
            const FOFormula a = p.left().left(), b = p.left().right();
            const FOFormula c = p.right().left(), d = p.right().right();
            return conclusion ==
                   FOFormula::implication(FOFormula::implication(b, c),
                                          FOFormula::implication(a, d));
        }
        case Rule::gen:
            return conclusion.kind() == Kind::forall && conclusion.body() == premises[0];
    }
    return false;
}

}  // namespace arguendo::dkq
