#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <set>
#include <string>
#include <utility>

#include "arguendo/errors.hpp"

namespace arguendo::logic {

/// Immutable propositional formula. Copies are cheap (shared structure);
/// equality and ordering are syntactic, no normalisation is ever applied.
class Formula {
public:
    enum class Kind { atom, negation, conjunction, disjunction, implication };

    static Formula atom(std::string name) {
        if (name.empty() || name[0] < 'a' || name[0] > 'z')
            throw SemanticError("atom name must start with a lowercase letter: '" + name + "'");
        for (char c : name)
            if (!is_ident_char(c))
                throw SemanticError("invalid character in atom name: '" + name + "'");
        return Formula(std::make_shared<Node>(Node{Kind::atom, std::move(name), nullptr, nullptr}));
    }
    static Formula negation(Formula f) {
        return Formula(std::make_shared<Node>(Node{Kind::negation, {}, f.node_, nullptr}));
    }
    static Formula conjunction(Formula l, Formula r) {
        return Formula(std::make_shared<Node>(Node{Kind::conjunction, {}, l.node_, r.node_}));
    }
    static Formula disjunction(Formula l, Formula r) {
        return Formula(std::make_shared<Node>(Node{Kind::disjunction, {}, l.node_, r.node_}));
    }
    static Formula implication(Formula l, Formula r) {
        return Formula(std::make_shared<Node>(Node{Kind::implication, {}, l.node_, r.node_}));
    }

    Kind kind() const { return node_->kind; }
    const std::string& atom_name() const { return node_->name; }

    /// Left operand of a binary connective, or the operand of a negation.
    Formula left() const { return Formula(node_->left); }
    Formula right() const { return Formula(node_->right); }

    bool is_atom() const { return kind() == Kind::atom; }

    friend bool operator==(const Formula& a, const Formula& b) {
        return a.node_ == b.node_ || structurally_equal(*a.node_, *b.node_);
    }
    friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }

    /// Structural order: by kind, then atom name, then operands.
    friend bool operator<(const Formula& a, const Formula& b) {
        return compare(*a.node_, *b.node_) < 0;
    }

    /// All atom names occurring in the formula.
    std::set<std::string> atoms() const {
        std::set<std::string> out;
        collect_atoms(*node_, out);
        return out;
    }

    std::size_t hash() const { return hash_node(*node_); }

private:
    struct Node {
        Kind kind;
        std::string name;  // atom only
        std::shared_ptr<const Node> left;
        std::shared_ptr<const Node> right;  // null for negation
    };

    explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

    static bool is_ident_char(char c) {
        return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
               (c >= '0' && c <= '9') || c == '_';
    }

    static bool structurally_equal(const Node& a, const Node& b) {
        if (a.kind != b.kind) return false;
        if (a.kind == Kind::atom) return a.name == b.name;
        if (!structurally_equal(*a.left, *b.left)) return false;
        if (a.kind == Kind::negation) return true;
        return structurally_equal(*a.right, *b.right);
    }

    static int compare(const Node& a, const Node& b) {
        if (a.kind != b.kind) return a.kind < b.kind ? -1 : 1;
        if (a.kind == Kind::atom) return a.name.compare(b.name);
        if (int c = compare(*a.left, *b.left); c != 0) return c;
        if (a.kind == Kind::negation) return 0;
        return compare(*a.right, *b.right);
    }

    static void collect_atoms(const Node& n, std::set<std::string>& out) {
        if (n.kind == Kind::atom) {
            out.insert(n.name);
            return;
        }
        collect_atoms(*n.left, out);
        if (n.kind != Kind::negation) collect_atoms(*n.right, out);
    }

    static std::size_t hash_node(const Node& n) {
        std::size_t h = static_cast<std::size_t>(n.kind) * 0x9e3779b97f4a7c15ull;
        if (n.kind == Kind::atom) return h ^ std::hash<std::string>{}(n.name);
        h ^= hash_node(*n.left) + 0x9e3779b9 + (h << 6) + (h >> 2);
        if (n.kind != Kind::negation)
            h ^= hash_node(*n.right) + 0x9e3779b9 + (h << 6) + (h >> 2);
        return h;
    }

    std::shared_ptr<const Node> node_;
};

namespace detail {

// Precedence: negation 4 > conjunction 3 > disjunction 2 > implication 1.
// Conjunction and disjunction associate left, implication right.
inline int precedence(Formula::Kind k) {
    switch (k) {
        case Formula::Kind::atom: return 5;
        case Formula::Kind::negation: return 4;
        case Formula::Kind::conjunction: return 3;
        case Formula::Kind::disjunction: return 2;
        case Formula::Kind::implication: return 1;
    }
    return 0;
}

inline void render_into(const Formula& f, int min_prec, std::string& out) {
    const int prec = precedence(f.kind());
    const bool parens = prec < min_prec;
    if (parens) out += '(';
    switch (f.kind()) {
        case Formula::Kind::atom:
            out += f.atom_name();
            break;
        case Formula::Kind::negation:
            out += '~';
            render_into(f.left(), 4, out);
            break;
        case Formula::Kind::conjunction:
            render_into(f.left(), 3, out);
            out += " & ";
            render_into(f.right(), 4, out);
            break;
        case Formula::Kind::disjunction:
            render_into(f.left(), 2, out);
            out += " | ";
            render_into(f.right(), 3, out);
            break;
        case Formula::Kind::implication:
            render_into(f.left(), 2, out);
            out += " -> ";
            render_into(f.right(), 1, out);
            break;
    }
    if (parens) out += ')';
}

}  // namespace detail

/// Canonical text with minimal parentheses; parse_formula inverts it.
inline std::string render_formula(const Formula& f) {
    std::string out;
    detail::render_into(f, 0, out);
    return out;
}

struct FormulaHash {
    std::size_t operator()(const Formula& f) const { return f.hash(); }
};

}  // namespace arguendo::logic
