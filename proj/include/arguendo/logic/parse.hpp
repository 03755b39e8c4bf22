#pragma once

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "arguendo/errors.hpp"
#include "arguendo/logic/formula.hpp"

namespace arguendo::logic {

namespace detail {

// Recursive-descent parser for:
//   formula := disj ("->" formula)?
//   disj    := conj ("|" conj)*
//   conj    := neg ("&" neg)*
//   neg     := "~" neg | atom | "(" formula ")"
//   atom    := [a-z][a-zA-Z0-9_]*
class FormulaParser {
public:
    explicit FormulaParser(std::string_view text) : text_(text) {}

    Formula parse() {
        skip_ws();
        if (at_end())
            throw ParseError("empty formula", pos_, {"'~'", "'('", "atom"});
        Formula f = parse_implication();
        skip_ws();
        if (!at_end())
            throw ParseError("unexpected trailing input", pos_, {"end of input"});
        return f;
    }

private:
    Formula parse_implication() {
        Formula lhs = parse_disjunction();
        skip_ws();
        if (match("->")) return Formula::implication(lhs, parse_implication());
        return lhs;
    }

    Formula parse_disjunction() {
        Formula lhs = parse_conjunction();
        for (skip_ws(); peek() == '|'; skip_ws()) {
            ++pos_;
            lhs = Formula::disjunction(lhs, parse_conjunction());
        }
        return lhs;
    }

    Formula parse_conjunction() {
        Formula lhs = parse_negation();
        for (skip_ws(); peek() == '&'; skip_ws()) {
            ++pos_;
            lhs = Formula::conjunction(lhs, parse_negation());
        }
        return lhs;
    }

    Formula parse_negation() {
        skip_ws();
        if (peek() == '~') {
            ++pos_;
            return Formula::negation(parse_negation());
        }
        if (peek() == '(') {
            ++pos_;
            Formula inner = parse_implication();
            skip_ws();
            if (peek() != ')')
                throw ParseError("unbalanced parenthesis", pos_, {"')'"});
            ++pos_;
            return inner;
        }
        if (std::islower(static_cast<unsigned char>(peek()))) return parse_atom();
        throw ParseError("expected a formula", pos_, {"'~'", "'('", "atom"});
    }

    Formula parse_atom() {
        std::size_t start = pos_;
        ++pos_;
        while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_'))
            ++pos_;
        return Formula::atom(std::string(text_.substr(start, pos_ - start)));
    }

    bool match(std::string_view token) {
        if (text_.substr(pos_, token.size()) == token) {
            pos_ += token.size();
            return true;
        }
        return false;
    }

    void skip_ws() {
        while (!at_end() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
    }

    char peek() const { return at_end() ? '\0' : text_[pos_]; }
    bool at_end() const { return pos_ >= text_.size(); }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline Formula parse_formula(std::string_view text) {
    return detail::FormulaParser(text).parse();
}

}  // namespace arguendo::logic
