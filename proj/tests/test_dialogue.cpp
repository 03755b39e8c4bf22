#include <catch2/catch_amalgamated.hpp>

#include "arguendo/dialogue/game.hpp"
#include "arguendo/dialogue/rules.hpp"
#include "arguendo/dialogue/strategy.hpp"
#include "arguendo/dialogue/transcript.hpp"
#include "arguendo/io/line_reader.hpp"
#include "arguendo/io/script_format.hpp"
#include "arguendo/logic/parse.hpp"
#include "arguendo/logic/semantics.hpp"

using namespace arguendo;
using dialogue::Agent;
using dialogue::Move;
using dialogue::RuleSet;
using logic::parse_formula;

namespace {

std::vector<Move> fixture_script(const std::string& name) {
    return io::load_script(std::string(FIXTURES_DIR) + "/" + name);
}

std::string golden(const std::string& name) {
    return io::read_file(std::string(FIXTURES_DIR) + "/golden/" + name);
}

bool has_move(const std::vector<Move>& moves, const Move& m) {
    return std::find(moves.begin(), moves.end(), m) != moves.end();
}

Move attack_with(Agent agent, int target, const std::string& payload) {
    Move m;
    m.agent = agent;
    m.kind = dialogue::MoveKind::assertion;
    m.function = dialogue::MoveFunction::attack;
    m.target = target;
    m.formula = parse_formula(payload);
    return m;
}

Move request(Agent agent, int target, dialogue::RequestToken token) {
    Move m;
    m.agent = agent;
    m.kind = dialogue::MoveKind::request;
    m.function = dialogue::MoveFunction::attack;
    m.target = target;
    m.request = token;
    return m;
}

Move defend_with(Agent agent, int target, const std::string& payload) {
    Move m = attack_with(agent, target, payload);
    m.function = dialogue::MoveFunction::defence;
    return m;
}

}  // namespace

TEST_CASE("initial state carries the thesis and the rank prelude") {
    auto state = dialogue::initial_state(parse_formula("a & ~a"), RuleSet::classical_rules());
    REQUIRE(state.history().size() == 3);
    CHECK(state.history()[0].function == dialogue::MoveFunction::thesis);
    CHECK(state.history()[1].kind == dialogue::MoveKind::rank);
    CHECK(state.history()[2].kind == dialogue::MoveKind::rank);
    CHECK(state.to_move() == Agent::opponent);

    dialogue::Sequent seq{{parse_formula("a"), parse_formula("a -> y")}, parse_formula("y")};
    auto with_premises = dialogue::initial_state(seq, RuleSet::classical_rules());
    CHECK(with_premises.history()[0].premises.size() == 2);
    CHECK(with_premises.to_move() == Agent::opponent);
}

TEST_CASE("scripted inconsistent conjunction, unrestricted preset") {
    auto t = dialogue::play_script(parse_formula("a & ~a"), RuleSet::classical_rules(),
                                   fixture_script("table3.script"));
    REQUIRE(t.rows.size() == 6);
    CHECK(t.verdict == Agent::opponent);
    CHECK(t.rows[5].reference == 2);
    CHECK(dialogue::render_transcript(t) == golden("table3.txt"));
}

TEST_CASE("scripted inconsistent conjunction, bounded repetition preset") {
    auto t = dialogue::play_script(parse_formula("a & ~a"), RuleSet::d11(),
                                   fixture_script("table4.script"));
    REQUIRE(t.rows.size() == 5);
    CHECK(t.verdict == Agent::proponent);
    CHECK(dialogue::render_transcript(t) == golden("table4.txt"));
}

TEST_CASE("empty script renders the header and thesis only") {
    auto t = dialogue::play_script(parse_formula("a & ~a"), RuleSet::classical_rules(), {});
    CHECK(t.rows.size() == 1);
    CHECK_FALSE(t.verdict.has_value());
    CHECK(dialogue::render_transcript(t) ==
          "Opponent [rank 2] | Proponent [rank 2]\n"
          "                  | a & ~a  (0)\n");
}

TEST_CASE("legal moves after the conjunct has been unpacked") {
    // thesis a & ~a; the opponent asked ?R and got ~a
    auto state = dialogue::initial_state(parse_formula("a & ~a"), RuleSet::classical_rules());
    state = dialogue::apply_move(state, request(Agent::opponent, 0, dialogue::RequestToken::right));
    state = dialogue::apply_move(state, defend_with(Agent::proponent, 1, "~a"));

    auto moves = dialogue::legal_moves(state);
    CHECK(has_move(moves, request(Agent::opponent, 0, dialogue::RequestToken::left)));
    CHECK(has_move(moves, attack_with(Agent::opponent, 2, "a")));

    // the same position under the bounded preset, after the proponent's a
    auto d11 = dialogue::initial_state(parse_formula("a & ~a"), RuleSet::d11());
    d11 = dialogue::apply_move(d11, request(Agent::opponent, 0, dialogue::RequestToken::right));
    d11 = dialogue::apply_move(d11, defend_with(Agent::proponent, 1, "~a"));
    d11 = dialogue::apply_move(d11, request(Agent::opponent, 0, dialogue::RequestToken::left));
    d11 = dialogue::apply_move(d11, defend_with(Agent::proponent, 3, "a"));
    auto d11_moves = dialogue::legal_moves(d11);
    CHECK_FALSE(has_move(d11_moves, attack_with(Agent::opponent, 2, "a")));
    CHECK(d11_moves.empty());
    CHECK(dialogue::winner(d11) == Agent::proponent);
}

TEST_CASE("illegal moves are rejected with the violated rule") {
    auto state = dialogue::initial_state(parse_formula("a & ~a"), RuleSet::classical_rules());
    CHECK_THROWS_WITH(
        dialogue::apply_move(state, request(Agent::opponent, 0, dialogue::RequestToken::disjunction)),
        Catch::Matchers::ContainsSubstring("local rule"));
    CHECK_THROWS_WITH(
        dialogue::apply_move(state, request(Agent::proponent, 0, dialogue::RequestToken::left)),
        Catch::Matchers::ContainsSubstring("move order"));

    // a request against an atom
    auto atom_state =
        dialogue::initial_state(parse_formula("a -> a"), RuleSet::classical_rules());
    atom_state = dialogue::apply_move(atom_state, attack_with(Agent::opponent, 0, "a"));
    CHECK_THROWS_WITH(
        dialogue::apply_move(atom_state, request(Agent::proponent, 1, dialogue::RequestToken::left)),
        Catch::Matchers::ContainsSubstring("local rule"));
}

TEST_CASE("winner is absent while moves remain") {
    auto state = dialogue::initial_state(parse_formula("a & ~a"), RuleSet::classical_rules());
    CHECK_FALSE(dialogue::winner(state).has_value());
    for (const Move& m : fixture_script("table3.script")) state = dialogue::apply_move(state, m);
    CHECK(dialogue::winner(state) == Agent::opponent);
    CHECK(dialogue::legal_moves(state).empty());
}

TEST_CASE("decision procedure on the contradiction thesis") {
    const auto thesis = parse_formula("a & ~a");
    CHECK(dialogue::proponent_wins(thesis, RuleSet::classical_rules()).winner ==
          Agent::opponent);
    CHECK(dialogue::proponent_wins(thesis, RuleSet::d11()).winner == Agent::proponent);
    CHECK(dialogue::proponent_wins(thesis, RuleSet::d11_nl()).winner == Agent::proponent);
}

TEST_CASE("indirect explosion survives the bounded preset but not the literal rule") {
    const auto indirect = parse_formula("a -> (~a -> b)");
    CHECK(dialogue::proponent_wins(indirect, RuleSet::d11()).winner == Agent::proponent);
    CHECK(dialogue::proponent_wins(indirect, RuleSet::d11_nl()).winner == Agent::opponent);
    const auto direct = parse_formula("(a & ~a) -> b");
    CHECK(dialogue::proponent_wins(direct, RuleSet::d11_nl()).winner == Agent::opponent);
}

TEST_CASE("classical preset agrees with the truth tables on the corpus") {
    const std::vector<std::pair<std::string, bool>> corpus = {
        {"a -> a", true},
        {"a | ~a", true},
        {"((a -> b) -> a) -> a", true},
        {"~(a & ~a)", true},
        {"a -> (~a -> b)", true},
        {"a", false},
        {"a -> b", false},
        {"(a | b) -> a", false},
    };
    for (const auto& [text, expected] : corpus) {
        CAPTURE(text);
        const auto thesis = parse_formula(text);
        CHECK(logic::is_valid(thesis) == expected);
        CHECK((dialogue::proponent_wins(thesis, RuleSet::classical_rules()).winner ==
               Agent::proponent) == expected);
    }
}

TEST_CASE("sequent dialogues decide entailment from premises") {
    dialogue::Sequent good{{parse_formula("a"), parse_formula("a -> y")}, parse_formula("y")};
    CHECK(dialogue::proponent_wins(good, RuleSet::classical_rules()).winner ==
          Agent::proponent);
    dialogue::Sequent bad{{parse_formula("a")}, parse_formula("y")};
    CHECK(dialogue::proponent_wins(bad, RuleSet::classical_rules()).winner ==
          Agent::opponent);
    // contradictory premises explode classically but not under the
    // literal-rule preset
    dialogue::Sequent explosive{{parse_formula("a"), parse_formula("~a")}, parse_formula("b")};
    CHECK(dialogue::proponent_wins(explosive, RuleSet::classical_rules()).winner ==
          Agent::proponent);
    CHECK(dialogue::proponent_wins(explosive, RuleSet::d11_nl()).winner == Agent::opponent);
}

TEST_CASE("agents alternate strictly after the prelude") {
    auto state = dialogue::initial_state(parse_formula("a & ~a"), RuleSet::classical_rules());
    Agent expected = Agent::opponent;
    for (const Move& m : fixture_script("table3.script")) {
        CHECK(m.agent == expected);
        CHECK(state.to_move() == expected);
        state = dialogue::apply_move(state, m);
        expected = dialogue::other(expected);
    }
}

TEST_CASE("every play over the small corpus terminates within the cap") {
    const std::vector<std::string> corpus = {"a -> a", "a | ~a", "~(a & ~a)",
                                             "((a -> b) -> a) -> a", "a -> (~a -> b)",
                                             "(a & b) -> (b & a)"};
    for (const auto& text : corpus) {
        for (auto rules : {RuleSet::classical_rules(), RuleSet::d11(), RuleSet::d11_nl(),
                           RuleSet::intuitionistic_rules()}) {
            CAPTURE(text, static_cast<int>(rules.style), rules.d11_atom_restriction);
            CHECK_NOTHROW(dialogue::proponent_wins(parse_formula(text), rules));
        }
    }
}

TEST_CASE("legal move order is canonical and stable") {
    auto state = dialogue::initial_state(parse_formula("(a & b) | (a -> b)"),
                                         RuleSet::classical_rules());
    auto once = dialogue::legal_moves(state);
    auto twice = dialogue::legal_moves(state);
    REQUIRE(once.size() == twice.size());
    for (std::size_t i = 0; i < once.size(); ++i) CHECK(once[i] == twice[i]);
    for (std::size_t i = 1; i < once.size(); ++i) {
        CHECK(once[i - 1].target <= once[i].target);
        if (once[i - 1].target == once[i].target)
            CHECK(once[i - 1].payload_key() <= once[i].payload_key());
    }
}

TEST_CASE("winning strategies cover every opponent branch") {
    auto result = dialogue::proponent_wins(parse_formula("a & ~a"), RuleSet::d11());
    REQUIRE(result.winner == Agent::proponent);
    REQUIRE(result.strategy.has_value());

    // walk the tree alongside the game and compare branch sets
    auto state = dialogue::initial_state(parse_formula("a & ~a"), RuleSet::d11());
    auto check = [&](auto&& self, const dialogue::StrategyNode& node,
                     dialogue::DialogueState s) -> void {
        if (s.to_move() == Agent::proponent) {
            REQUIRE(node.proponent_move.has_value());
            self(self, node, dialogue::apply_move(s, *node.proponent_move));
            return;
        }
        auto moves = dialogue::legal_moves(s);
        REQUIRE(node.opponent_branches.size() == moves.size());
        for (const auto& [move, child] : node.opponent_branches)
            self(self, child, dialogue::apply_move(s, move));
    };
    check(check, *result.strategy, state);
}

TEST_CASE("a bare atomic thesis is an immediate loss") {
    CHECK(dialogue::proponent_wins(parse_formula("a"), RuleSet::d11()).winner ==
          Agent::opponent);
    auto state = dialogue::initial_state(parse_formula("a"), RuleSet::classical_rules());
    CHECK(dialogue::winner(state) == Agent::opponent);
}
