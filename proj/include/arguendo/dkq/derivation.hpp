#pragma once

#include <cctype>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "arguendo/dkq/axioms.hpp"
#include "arguendo/dkq/formula.hpp"
#include "arguendo/dkq/parse.hpp"
#include "arguendo/errors.hpp"

namespace arguendo::dkq {

struct Justification {
    enum class Kind { axiom, premise, mp, adj, affix, gen };
    Kind kind = Kind::premise;
    int axiom_id = 0;
    std::size_t ref1 = 0;
    std::size_t ref2 = 0;
    std::string gen_var;
};

struct DerivationLine {
    std::size_t index = 0;  // 1-based
    FOFormula formula;
    Justification justification;
};

struct Derivation {
    std::vector<FOFormula> premises;
    std::vector<DerivationLine> lines;
};

struct CheckResult {
    bool ok = true;
    std::size_t line = 0;
    std::string reason;

    static CheckResult success() { return CheckResult{}; }
    static CheckResult failure(std::size_t line, std::string reason) {
        return CheckResult{false, line, std::move(reason)};
    }
};

namespace detail {

inline bool contains_exists(const FOFormula& f) {
    switch (f.kind()) {
        case FOFormula::Kind::exists: return true;
        case FOFormula::Kind::atom:
        case FOFormula::Kind::predicate:
        case FOFormula::Kind::metaformula: return false;
        case FOFormula::Kind::negation:
        case FOFormula::Kind::forall: return contains_exists(f.left());
        default: return contains_exists(f.left()) || contains_exists(f.right());
    }
}

}  // namespace detail

/// Verifies every line and reports the first failure.
inline CheckResult check_derivation(const Derivation& d,
                                    const SchemeSet& schemes = printed_schemes()) {
    for (std::size_t i = 0; i < d.lines.size(); ++i) {
        const DerivationLine& line = d.lines[i];
        const std::size_t number = i + 1;
        const Justification& j = line.justification;

        auto fetch = [&](std::size_t ref) -> const FOFormula* {
            if (ref < 1 || ref >= number) return nullptr;
            return &d.lines[ref - 1].formula;
        };

        switch (j.kind) {
            case Justification::Kind::premise: {
                bool found = false;
                for (const FOFormula& p : d.premises)
                    if (p == line.formula) found = true;
                if (!found)
                    return CheckResult::failure(number, "not among the declared premises");
                break;
            }
            case Justification::Kind::axiom: {
                if (j.axiom_id < 1 || j.axiom_id > static_cast<int>(schemes.size()))
                    return CheckResult::failure(number,
                                                "bad axiom id " + std::to_string(j.axiom_id));
                bool matched = false;
                for (const AxiomMatch& m : match_axiom(line.formula, schemes))
                    if (m.scheme_id == j.axiom_id) matched = true;
                if (!matched) {
                    if (detail::contains_exists(line.formula))
                        return CheckResult::failure(
                            number, "the particular quantifier has no axioms");
                    return CheckResult::failure(
                        number, "unification with scheme " + std::to_string(j.axiom_id) +
                                    " failed");
                }
                break;
            }
            case Justification::Kind::mp:
            case Justification::Kind::adj: {
                const FOFormula* a = fetch(j.ref1);
                const FOFormula* b = fetch(j.ref2);
                if (!a || !b)
                    return CheckResult::failure(number, "reference to an unavailable line");
                const Rule rule = j.kind == Justification::Kind::mp ? Rule::mp : Rule::adj;
                if (!check_rule(rule, {*a, *b}, line.formula))
                    return CheckResult::failure(number, std::string("not a correct ") +
                                                            to_string(rule) + " instance");
                break;
            }
            case Justification::Kind::affix: {
                const FOFormula* a = fetch(j.ref1);
                if (!a) return CheckResult::failure(number, "reference to an unavailable line");
                if (!check_rule(Rule::affix, {*a}, line.formula))
                    return CheckResult::failure(number, "not a correct affix instance");
                break;
            }
            case Justification::Kind::gen: {
                const FOFormula* a = fetch(j.ref1);
                if (!a) return CheckResult::failure(number, "reference to an unavailable line");
                if (line.formula.kind() != FOFormula::Kind::forall ||
                    line.formula.name() != j.gen_var || line.formula.body() != *a)
                    return CheckResult::failure(number, "not a correct gen instance");
                break;
            }
        }
    }
    return CheckResult::success();
}

/// Parses the derivation text format: one `n. <formula> [<rule>]` per
/// line, `#` comments, premises declared by their own lines.
inline Derivation parse_derivation(const std::string& text) {
    Derivation d;
    std::istringstream in(text);
    std::string raw;
    std::size_t expected = 1;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::size_t begin = raw.find_first_not_of(" \t\r");
        if (begin == std::string::npos) continue;
        std::size_t end = raw.find_last_not_of(" \t\r");
        std::string content = raw.substr(begin, end - begin + 1);

        auto fail = [&](const std::string& msg) -> ParseError {
            return ParseError("derivation line " + std::to_string(line_no) + ": " + msg, begin);
        };

        std::size_t dot = content.find('.');
        if (dot == std::string::npos) throw fail("missing line number");
        std::size_t number = 0;
        try {
            number = std::stoul(content.substr(0, dot));
        } catch (...) {
            throw fail("missing line number");
        }
        if (number != expected)
            throw fail("expected line " + std::to_string(expected) + ", found " +
                       std::to_string(number));
        ++expected;

        std::size_t open = content.rfind('[');
        std::size_t close = content.rfind(']');
        if (open == std::string::npos || close == std::string::npos || close < open)
            throw fail("missing [justification]");
        FOFormula formula = parse_fo_formula(content.substr(dot + 1, open - dot - 1));
        std::istringstream just(content.substr(open + 1, close - open - 1));
        std::string keyword;
        just >> keyword;

        Justification j;
        auto read_refs = [&](std::size_t count) {
            std::string rest;
            std::getline(just, rest);
            for (char& c : rest)
                if (c == ',') c = ' ';
            std::istringstream numbers(rest);
            std::size_t a = 0, b = 0;
            if (!(numbers >> a) || (count == 2 && !(numbers >> b)))
                throw fail("justification needs " + std::to_string(count) + " line reference(s)");
            j.ref1 = a;
            j.ref2 = b;
        };
        if (keyword == "axiom") {
            j.kind = Justification::Kind::axiom;
            if (!(just >> j.axiom_id)) throw fail("axiom needs a scheme id");
        } else if (keyword == "premise") {
            j.kind = Justification::Kind::premise;
            d.premises.push_back(formula);
        } else if (keyword == "mp") {
            j.kind = Justification::Kind::mp;
            read_refs(2);
        } else if (keyword == "adj") {
            j.kind = Justification::Kind::adj;
            read_refs(2);
        } else if (keyword == "affix") {
            j.kind = Justification::Kind::affix;
            read_refs(1);
        } else if (keyword == "gen") {
            j.kind = Justification::Kind::gen;
            std::size_t ref = 0;
            std::string var;
            if (!(just >> ref >> var)) throw fail("gen needs a line reference and a variable");
            j.ref1 = ref;
            j.gen_var = var;
        } else {
            throw fail("unknown justification '" + keyword + "'");
        }
        d.lines.push_back(DerivationLine{number, std::move(formula), std::move(j)});
    }
    return d;
}

}  // namespace arguendo::dkq
