#pragma once

#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "arguendo/errors.hpp"

namespace arguendo::dkq {

/// First-order term: a subject variable or an individual constant.
/// Variables are the identifiers t..z (optionally digit-suffixed).
struct Term {
    enum class Kind { variable, constant };
    Kind kind;
    std::string name;

    static bool is_variable_name(const std::string& name) {
        if (name.empty() || name[0] < 't' || name[0] > 'z') return false;
        for (std::size_t i = 1; i < name.size(); ++i)
            if (name[i] < '0' || name[i] > '9') return false;
        return true;
    }

    static Term make(std::string name) {
        Kind k = is_variable_name(name) ? Kind::variable : Kind::constant;
        return Term{k, std::move(name)};
    }
    static Term variable(std::string name) { return Term{Kind::variable, std::move(name)}; }
    static Term constant(std::string name) { return Term{Kind::constant, std::move(name)}; }

    friend bool operator==(const Term& a, const Term& b) {
        return a.kind == b.kind && a.name == b.name;
    }
    friend bool operator!=(const Term& a, const Term& b) { return !(a == b); }
};

/// Quantified formula tree. Propositional formulas embed unchanged as
/// atoms plus connectives; metaformula nodes appear only inside axiom
/// scheme patterns, never in parsed input.
class FOFormula {
public:
    enum class Kind {
        atom,
        predicate,
        negation,
        conjunction,
        disjunction,
        implication,
        forall,
        exists,
        metaformula
    };

    static FOFormula atom(std::string name) {
        return FOFormula(std::make_shared<Node>(Node{Kind::atom, std::move(name), {}, nullptr, nullptr}));
    }
    static FOFormula predicate(std::string name, std::vector<Term> args) {
        return FOFormula(std::make_shared<Node>(
            Node{Kind::predicate, std::move(name), std::move(args), nullptr, nullptr}));
    }
    static FOFormula negation(FOFormula f) {
        return FOFormula(std::make_shared<Node>(Node{Kind::negation, {}, {}, f.node_, nullptr}));
    }
    static FOFormula conjunction(FOFormula l, FOFormula r) {
        return FOFormula(std::make_shared<Node>(Node{Kind::conjunction, {}, {}, l.node_, r.node_}));
    }
    static FOFormula disjunction(FOFormula l, FOFormula r) {
        return FOFormula(std::make_shared<Node>(Node{Kind::disjunction, {}, {}, l.node_, r.node_}));
    }
    static FOFormula implication(FOFormula l, FOFormula r) {
        return FOFormula(std::make_shared<Node>(Node{Kind::implication, {}, {}, l.node_, r.node_}));
    }
    static FOFormula forall(std::string var, FOFormula body) {
        return FOFormula(std::make_shared<Node>(Node{Kind::forall, std::move(var), {}, body.node_, nullptr}));
    }
    static FOFormula exists(std::string var, FOFormula body) {
        return FOFormula(std::make_shared<Node>(Node{Kind::exists, std::move(var), {}, body.node_, nullptr}));
    }
    static FOFormula metaformula(std::string name) {
        return FOFormula(std::make_shared<Node>(Node{Kind::metaformula, std::move(name), {}, nullptr, nullptr}));
    }

    Kind kind() const { return node_->kind; }
    /// Atom, predicate or metaformula name; binder variable for quantifiers.
    const std::string& name() const { return node_->name; }
    const std::vector<Term>& args() const { return node_->args; }
    FOFormula left() const { return FOFormula(node_->left); }
    FOFormula right() const { return FOFormula(node_->right); }
    FOFormula body() const { return FOFormula(node_->left); }

    bool is_quantifier() const { return kind() == Kind::forall || kind() == Kind::exists; }
    bool is_binary() const {
        return kind() == Kind::conjunction || kind() == Kind::disjunction ||
               kind() == Kind::implication;
    }

    friend bool operator==(const FOFormula& a, const FOFormula& b) {
        return a.node_ == b.node_ || equal(*a.node_, *b.node_);
    }
    friend bool operator!=(const FOFormula& a, const FOFormula& b) { return !(a == b); }

    std::set<std::string> free_variables() const {
        std::set<std::string> bound, free;
        collect_free(*node_, bound, free);
        return free;
    }

private:
    struct Node {
        Kind kind;
        std::string name;
        std::vector<Term> args;
        std::shared_ptr<const Node> left;
        std::shared_ptr<const Node> right;
    };

    explicit FOFormula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

    static bool equal(const Node& a, const Node& b) {
        if (a.kind != b.kind || a.name != b.name) return false;
        if (a.args.size() != b.args.size()) return false;
        for (std::size_t i = 0; i < a.args.size(); ++i)
            if (a.args[i] != b.args[i]) return false;
        if (!a.left != !b.left || !a.right != !b.right) return false;
        if (a.left && !equal(*a.left, *b.left)) return false;
        if (a.right && !equal(*a.right, *b.right)) return false;
        return true;
    }

    static void collect_free(const Node& n, std::set<std::string>& bound,
                             std::set<std::string>& free) {
        switch (n.kind) {
            case Kind::predicate:
                for (const Term& t : n.args)
                    if (t.kind == Term::Kind::variable && !bound.count(t.name))
                        free.insert(t.name);
                return;
            case Kind::forall:
            case Kind::exists: {
                const bool was_bound = bound.count(n.name) != 0;
                bound.insert(n.name);
                collect_free(*n.left, bound, free);
                if (!was_bound) bound.erase(n.name);
                return;
            }
            default:
                if (n.left) collect_free(*n.left, bound, free);
                if (n.right) collect_free(*n.right, bound, free);
                return;
        }
    }

    std::shared_ptr<const Node> node_;
};

namespace detail {

inline int precedence(FOFormula::Kind k) {
    switch (k) {
        case FOFormula::Kind::atom:
        case FOFormula::Kind::predicate:
        case FOFormula::Kind::metaformula: return 5;
        case FOFormula::Kind::negation: return 4;
        case FOFormula::Kind::conjunction: return 3;
        case FOFormula::Kind::disjunction: return 2;
        case FOFormula::Kind::implication: return 1;
        default: return 0;  // quantifiers extend maximally to the right
    }
}

inline void render_into(const FOFormula& f, int min_prec, std::string& out) {
    const int prec = precedence(f.kind());
    const bool parens = prec < min_prec;
    if (parens) out += '(';
    switch (f.kind()) {
        case FOFormula::Kind::atom:
        case FOFormula::Kind::metaformula:
            out += f.name();
            break;
        case FOFormula::Kind::predicate: {
            out += f.name() + "(";
            for (std::size_t i = 0; i < f.args().size(); ++i) {
                if (i) out += ",";
                out += f.args()[i].name;
            }
            out += ")";
            break;
        }
        case FOFormula::Kind::negation:
            out += '~';
            render_into(f.left(), 4, out);
            break;
        case FOFormula::Kind::conjunction:
            render_into(f.left(), 3, out);
            out += " & ";
            render_into(f.right(), 4, out);
            break;
        case FOFormula::Kind::disjunction:
            render_into(f.left(), 2, out);
            out += " | ";
            render_into(f.right(), 3, out);
            break;
        case FOFormula::Kind::implication:
            render_into(f.left(), 2, out);
            out += " -> ";
            render_into(f.right(), 1, out);
            break;
        case FOFormula::Kind::forall:
        case FOFormula::Kind::exists:
            out += f.kind() == FOFormula::Kind::forall ? "forall " : "exists ";
            out += f.name() + ". ";
            render_into(f.body(), 0, out);
            break;
    }
    if (parens) out += ')';
}

}  // namespace detail

inline std::string render_fo_formula(const FOFormula& f) {
    std::string out;
    detail::render_into(f, 0, out);
    return out;
}

/// Capture-avoiding substitution of term t for the free occurrences of
/// variable x.
inline FOFormula substitute(const FOFormula& f, const std::string& x, const Term& t) {
    using Kind = FOFormula::Kind;
    switch (f.kind()) {
        case Kind::atom:
        case Kind::metaformula:
            return f;
        case Kind::predicate: {
            std::vector<Term> args = f.args();
            for (Term& a : args)
                if (a.kind == Term::Kind::variable && a.name == x) a = t;
            return FOFormula::predicate(f.name(), std::move(args));
        }
        case Kind::negation:
            return FOFormula::negation(substitute(f.left(), x, t));
        case Kind::conjunction:
            return FOFormula::conjunction(substitute(f.left(), x, t), substitute(f.right(), x, t));
        case Kind::disjunction:
            return FOFormula::disjunction(substitute(f.left(), x, t), substitute(f.right(), x, t));
        case Kind::implication:
            return FOFormula::implication(substitute(f.left(), x, t), substitute(f.right(), x, t));
        case Kind::forall:
        case Kind::exists: {
            if (f.name() == x) return f;  // x is bound here
            if (t.kind == Term::Kind::variable && t.name == f.name() &&
                f.body().free_variables().count(x))
                throw SemanticError("substituting " + t.name + " for " + x +
                                    " would capture it under the binder of " + f.name());
            FOFormula body = substitute(f.body(), x, t);
            return f.kind() == Kind::forall ? FOFormula::forall(f.name(), std::move(body))
                                            : FOFormula::exists(f.name(), std::move(body));
        }
    }
    throw SemanticError("unreachable formula kind");
}

}  // namespace arguendo::dkq
