#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "arguendo/dkq/formula.hpp"
#include "arguendo/errors.hpp"

namespace arguendo::dkq {

namespace detail {

// Propositional grammar extended with `forall x. <formula>`,
// `exists x. <formula>` (maximal scope) and uppercase-named predicate
// applications P(t1,...,tn). Lowercase identifiers are atoms; term
// identifiers t..z (digit-suffixed allowed) are variables, the rest are
// constants.
class FOParser {
public:
    explicit FOParser(std::string_view text) : text_(text) {}

    FOFormula parse() {
        skip_ws();
        if (at_end()) throw ParseError("empty formula", pos_, {"formula"});
        FOFormula f = parse_implication();
        skip_ws();
        if (!at_end()) throw ParseError("unexpected trailing input", pos_, {"end of input"});
        return f;
    }

private:
    FOFormula parse_implication() {
        FOFormula lhs = parse_disjunction();
        skip_ws();
        if (text_.substr(pos_, 2) == "->") {
            pos_ += 2;
            return FOFormula::implication(lhs, parse_implication());
        }
        return lhs;
    }

    FOFormula parse_disjunction() {
        FOFormula lhs = parse_conjunction();
        for (skip_ws(); peek() == '|'; skip_ws()) {
            ++pos_;
            lhs = FOFormula::disjunction(lhs, parse_conjunction());
        }
        return lhs;
    }

    FOFormula parse_conjunction() {
        FOFormula lhs = parse_unary();
        for (skip_ws(); peek() == '&'; skip_ws()) {
            ++pos_;
            lhs = FOFormula::conjunction(lhs, parse_unary());
        }
        return lhs;
    }

    FOFormula parse_unary() {
        skip_ws();
        if (peek() == '~') {
            ++pos_;
            return FOFormula::negation(parse_unary());
        }
        if (peek() == '(') {
            ++pos_;
            FOFormula inner = parse_implication();
            skip_ws();
            if (peek() != ')') throw ParseError("unbalanced parenthesis", pos_, {"')'"});
            ++pos_;
            return inner;
        }
        if (std::isupper(static_cast<unsigned char>(peek()))) return parse_predicate();
        if (std::islower(static_cast<unsigned char>(peek()))) {
            const std::size_t start = pos_;
            std::string word = identifier();
            if (word == "forall" || word == "exists") return parse_quantifier(word == "forall");
            if (!Term::is_variable_name(word) || peek() != '(')
                return FOFormula::atom(word);
            throw ParseError("term used as a formula", start, {"atom", "predicate"});
        }
        throw ParseError("expected a formula", pos_, {"'~'", "'('", "atom", "quantifier"});
    }

    FOFormula parse_quantifier(bool universal) {
        skip_ws();
        if (!std::islower(static_cast<unsigned char>(peek())))
            throw ParseError("expected a variable", pos_, {"variable"});
        std::string var = identifier();
        if (!Term::is_variable_name(var))
            throw ParseError("'" + var + "' is not a variable name", pos_, {"variable"});
        skip_ws();
        if (peek() != '.') throw ParseError("expected '.'", pos_, {"'.'"});
        ++pos_;
        FOFormula body = parse_implication();
        return universal ? FOFormula::forall(var, std::move(body))
                         : FOFormula::exists(var, std::move(body));
    }

    FOFormula parse_predicate() {
        std::string name = identifier();
        skip_ws();
        if (peek() != '(')
            throw ParseError("predicate '" + name + "' needs arguments", pos_, {"'('"});
        ++pos_;
        std::vector<Term> args;
        while (true) {
            skip_ws();
            if (!std::islower(static_cast<unsigned char>(peek())))
                throw ParseError("expected a term", pos_, {"term"});
            args.push_back(Term::make(identifier()));
            skip_ws();
            if (peek() == ',') {
                ++pos_;
                continue;
            }
            if (peek() == ')') {
                ++pos_;
                break;
            }
            throw ParseError("expected ',' or ')'", pos_, {"','", "')'"});
        }
        return FOFormula::predicate(std::move(name), std::move(args));
    }

    std::string identifier() {
        const std::size_t start = pos_;
        while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_'))
            ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    void skip_ws() {
        while (!at_end() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
    }
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    bool at_end() const { return pos_ >= text_.size(); }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline FOFormula parse_fo_formula(std::string_view text) {
    return detail::FOParser(text).parse();
}

}  // namespace arguendo::dkq
