#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "arguendo/af/framework.hpp"
#include "arguendo/errors.hpp"
#include "arguendo/logic/formula.hpp"
#include "arguendo/logic/knowledge_base.hpp"
#include "arguendo/logic/semantics.hpp"

namespace arguendo::builder {

/// Deductive argument: a claim together with the premises that entail it.
/// Supports are kept in knowledge-base order.
struct StructuredArgument {
    std::string id;
    std::vector<logic::Formula> support;
    logic::Formula claim;

    friend bool operator==(const StructuredArgument& a, const StructuredArgument& b) {
        return a.support == b.support && a.claim == b.claim;
    }
};

struct BuilderConfig {
    std::size_t max_support_size = 3;
    /// When absent, claims range over KB members, their negations, and
    /// the undercut claims of previously built arguments.
    std::optional<std::vector<logic::Formula>> claim_targets;
    bool allow_inconsistent_support = false;
    /// Upper bound on candidate (support, claim) checks.
    std::size_t node_budget = 200000;
    logic::EntailmentOptions entailment;
};

/// Negation of the conjunction of the target's support, conjoined in
/// support order.
inline logic::Formula canonical_undercut_claim(const StructuredArgument& arg) {
    if (arg.support.empty())
        throw SemanticError("undercut of an argument with empty support");
    logic::Formula conj = arg.support.front();
    for (std::size_t i = 1; i < arg.support.size(); ++i)
        conj = logic::Formula::conjunction(conj, arg.support[i]);
    return logic::Formula::negation(conj);
}

/// Attack holds when the attacker's claim is inconsistent with the
/// target's support, or the attacker's support refutes one of the
/// target's premises. Computable from the two arguments alone.
inline bool attacks(const StructuredArgument& attacker, const StructuredArgument& target,
                    const logic::EntailmentOptions& opts = {}) {
    std::vector<logic::Formula> rebut = target.support;
    rebut.push_back(attacker.claim);
    if (!logic::is_consistent(rebut, opts)) return true;
    for (const logic::Formula& premise : target.support)
        if (logic::entails(attacker.support, logic::Formula::negation(premise), opts))
            return true;
    return false;
}

namespace detail {

inline std::string render_support(const std::vector<logic::Formula>& support) {
    std::string out;
    for (std::size_t i = 0; i < support.size(); ++i) {
        if (i) out += ';';
        out += logic::render_formula(support[i]);
    }
    return out;
}

struct CandidateOrder {
    bool operator()(const StructuredArgument& a, const StructuredArgument& b) const {
        if (a.support.size() != b.support.size()) return a.support.size() < b.support.size();
        const std::string sa = render_support(a.support), sb = render_support(b.support);
        if (sa != sb) return sa < sb;
        return logic::render_formula(a.claim) < logic::render_formula(b.claim);
    }
};

// Enumerates subsets of the KB (sizes 1..max) in deterministic order and
// keeps the ones forming a valid argument for the claim.
class SupportSearch {
public:
    SupportSearch(const logic::KnowledgeBase& kb, const BuilderConfig& cfg, std::size_t& budget)
        : kb_(kb), cfg_(cfg), budget_(budget) {}

    std::vector<StructuredArgument> arguments_for(const logic::Formula& claim) {
        std::vector<StructuredArgument> found;
        std::vector<logic::Formula> subset;
        search(0, subset, claim, found);
        return found;
    }

private:
    void search(std::size_t next, std::vector<logic::Formula>& subset,
                const logic::Formula& claim, std::vector<StructuredArgument>& found) {
        if (!subset.empty()) {
            if (budget_ == 0)
                throw ResourceError("argument search exceeded its node budget");
            --budget_;
            if (valid_argument(subset, claim))
                found.push_back(StructuredArgument{"", subset, claim});
        }
        if (subset.size() == cfg_.max_support_size) return;
        for (std::size_t i = next; i < kb_.size(); ++i) {
            subset.push_back(kb_.formulas()[i]);
            search(i + 1, subset, claim, found);
            subset.pop_back();
        }
    }

    bool valid_argument(const std::vector<logic::Formula>& support,
                        const logic::Formula& claim) const {
        if (!cfg_.allow_inconsistent_support && !logic::is_consistent(support, cfg_.entailment))
            return false;
        if (!logic::entails(support, claim, cfg_.entailment)) return false;
        // subset-minimality: no proper subset may already entail the claim
        for (std::size_t skip = 0; skip < support.size(); ++skip) {
            std::vector<logic::Formula> smaller;
            for (std::size_t i = 0; i < support.size(); ++i)
                if (i != skip) smaller.push_back(support[i]);
            if (logic::entails(smaller, claim, cfg_.entailment)) return false;
        }
        return true;
    }

    const logic::KnowledgeBase& kb_;
    const BuilderConfig& cfg_;
    std::size_t& budget_;
};

}  // namespace detail

/// Every argument over the knowledge base satisfying the structural
/// invariants, in deterministic order (support size, then rendering),
/// with ids arg1, arg2, ... assigned by that order.
inline std::vector<StructuredArgument> build_arguments(const logic::KnowledgeBase& kb,
                                                       const BuilderConfig& cfg) {
    if (cfg.max_support_size < 1)
        throw SemanticError("max_support_size must be at least 1");
    std::size_t budget = cfg.node_budget;
    detail::SupportSearch search(kb, cfg, budget);

    std::vector<logic::Formula> queue;
    std::set<std::string> queued;
    auto push_target = [&](const logic::Formula& f) {
        if (queued.insert(logic::render_formula(f)).second) queue.push_back(f);
    };
    if (cfg.claim_targets) {
        for (const auto& f : *cfg.claim_targets) push_target(f);
    } else {
        for (const auto& f : kb) push_target(f);
        for (const auto& f : kb) push_target(logic::Formula::negation(f));
    }

    std::vector<StructuredArgument> out;
    std::set<std::pair<std::string, std::string>> seen;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        const logic::Formula claim = queue[qi];
        for (StructuredArgument& arg : search.arguments_for(claim)) {
            auto key = std::make_pair(detail::render_support(arg.support),
                                      logic::render_formula(arg.claim));
            if (!seen.insert(key).second) continue;
            if (!cfg.claim_targets) push_target(canonical_undercut_claim(arg));
            out.push_back(std::move(arg));
        }
    }
    std::sort(out.begin(), out.end(), detail::CandidateOrder{});
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i].id = "arg" + std::to_string(i + 1);
    return out;
}

struct BuiltFramework {
    af::Framework framework;
    std::vector<StructuredArgument> arguments;
};

/// Framework whose nodes are the built arguments and whose edges are
/// the attack predicate over all ordered pairs.
inline BuiltFramework framework_from_kb(const logic::KnowledgeBase& kb,
                                        const BuilderConfig& cfg) {
    BuiltFramework built;
    built.arguments = build_arguments(kb, cfg);
    for (const auto& arg : built.arguments) built.framework.add_argument(arg.id);
    for (const auto& a : built.arguments)
        for (const auto& b : built.arguments)
            if (attacks(a, b, cfg.entailment)) built.framework.add_attack(a.id, b.id);
    return built;
}

/// One `argument(<id>, [<f>;...], <claim>).` line per argument.
inline std::string render_argument_table(const std::vector<StructuredArgument>& args) {
    std::string out;
    for (const auto& arg : args) {
        out += "argument(" + arg.id + ", [" + detail::render_support(arg.support) + "], " +
               logic::render_formula(arg.claim) + ").\n";
    }
    return out;
}

}  // namespace arguendo::builder
