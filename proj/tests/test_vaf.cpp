#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "arguendo/io/vaf_format.hpp"
#include "arguendo/vaf/practice.hpp"
#include "arguendo/vaf/semantics.hpp"
#include "arguendo/vaf/value_framework.hpp"
#include "support/generators.hpp"
#include "support/oracle.hpp"

using namespace arguendo;
using vaf::Audience;
using vaf::ValueFramework;

namespace {

io::LoadedVaf load_fixture(const std::string& name) {
    return io::load_vaf(std::string(FIXTURES_DIR) + "/" + name);
}

std::vector<std::vector<std::string>> member_lists(const std::vector<af::Extension>& exts) {
    std::vector<std::vector<std::string>> out;
    for (const auto& e : exts) out.push_back(e.members);
    return out;
}

}  // namespace

TEST_CASE("valpref is the strict audience order") {
    Audience y("y", {"y", "w"});
    Audience w("w", {"w", "y"});
    CHECK(vaf::valpref(y, "y", "w"));
    CHECK_FALSE(vaf::valpref(y, "y", "y"));
    CHECK_FALSE(vaf::valpref(w, "y", "w"));
    CHECK_THROWS_AS(vaf::valpref(y, "y", "zebra"), SemanticError);
}

TEST_CASE("defeat for an audience") {
    auto loaded = load_fixture("vaf_kb0.vaf");
    const ValueFramework& vf = loaded.framework;
    CHECK_FALSE(vaf::defeats_for(vf.audience("y"), "A2", "A1", vf));
    CHECK(vaf::defeats_for(vf.audience("w"), "A2", "A1", vf));
    CHECK_FALSE(vaf::defeats_for(vf.audience("y"), "A1", "A3", vf));  // no attack
}

TEST_CASE("reduction keeps exactly the surviving defeats") {
    auto loaded = load_fixture("vaf_kb0.vaf");
    const ValueFramework& vf = loaded.framework;
    auto for_y = vaf::reduce_for_audience(vf, vf.audience("y"));
    CHECK(for_y.attacks() ==
          std::vector<std::pair<std::string, std::string>>{{"A3", "A2"}});
    auto for_w = vaf::reduce_for_audience(vf, vf.audience("w"));
    CHECK(for_w.attacks() ==
          std::vector<std::pair<std::string, std::string>>{{"A2", "A1"}, {"A4", "A1"}});
}

TEST_CASE("with a single value the reduction is the base framework") {
    af::Framework base;
    base.add_argument("x");
    base.add_argument("y");
    base.add_attack("x", "y");
    ValueFramework vf(std::move(base), {{"x", "v"}, {"y", "v"}}, {Audience("only", {"v"})});
    auto reduced = vaf::reduce_for_audience(vf, vf.audience("only"));
    CHECK(reduced.attacks() == vf.base().attacks());
    CHECK(member_lists(vaf::preferred_for_audience(vf, vf.audience("only"))) ==
          member_lists(af::enumerate_extensions(vf.base(), af::Semantics::preferred)));
}

TEST_CASE("audience-relative conflict freeness") {
    auto loaded = load_fixture("vaf_kb0.vaf");
    const ValueFramework& vf = loaded.framework;
    CHECK(vaf::conflict_free_for(vf.audience("y"), {"A1", "A2"}, vf));
    CHECK_FALSE(vaf::conflict_free_for(vf.audience("w"), {"A1", "A2"}, vf));
    CHECK(vaf::conflict_free_for(vf.audience("w"), {}, vf));
}

TEST_CASE("strict conflict reading bars value-related pairs") {
    auto loaded = load_fixture("vaf_kb0.vaf");
    const ValueFramework& vf = loaded.framework;
    vaf::VafOptions strict;
    strict.strict_def10 = true;
    // no attack between A1 and A3... but none needed: A1 (y) vs A2 (w)
    CHECK_FALSE(vaf::conflict_free_for(vf.audience("y"), {"A1", "A2"}, vf, strict));
    // same-value sets stay fine
    CHECK(vaf::conflict_free_for(vf.audience("y"), {"A1", "A3"}, vf, strict));
}

TEST_CASE("acceptability to an audience") {
    auto loaded = load_fixture("vaf_kb0.vaf");
    const ValueFramework& vf = loaded.framework;
    CHECK(vaf::acceptable_to(vf.audience("y"), "A1", {}, vf));
    CHECK_FALSE(vaf::acceptable_to(vf.audience("w"), "A1", {"A3"}, vf));
    CHECK(vaf::acceptable_to(vf.audience("w"), "A3", {}, vf));  // undefeated
}

TEST_CASE("admissibility for an audience") {
    auto loaded = load_fixture("vaf_kb0.vaf");
    const ValueFramework& vf = loaded.framework;
    CHECK(vaf::admissible_for(vf.audience("y"), {"A1", "A3", "A4"}, vf));
    CHECK(vaf::admissible_for(vf.audience("w"), {}, vf));
    CHECK_FALSE(vaf::admissible_for(vf.audience("w"), {"A1"}, vf));
}

TEST_CASE("preferred extensions per audience on the four-argument fixture") {
    auto loaded = load_fixture("vaf_kb0.vaf");
    const ValueFramework& vf = loaded.framework;
    CHECK(member_lists(vaf::preferred_for_audience(vf, vf.audience("y"))) ==
          std::vector<std::vector<std::string>>{{"A1", "A3", "A4"}});
    CHECK(member_lists(vaf::preferred_for_audience(vf, vf.audience("w"))) ==
          std::vector<std::vector<std::string>>{{"A2", "A3", "A4"}});
}

TEST_CASE("preferred extensions per audience on the extended fixture") {
    auto loaded = load_fixture("vaf_kb1.vaf");
    const ValueFramework& vf = loaded.framework;
    auto for_y = member_lists(vaf::preferred_for_audience(vf, vf.audience("y")));
    REQUIRE(for_y.size() == 1);
    CHECK(for_y[0] == std::vector<std::string>{"A1", "A3", "A5", "A7"});
    auto for_w = member_lists(vaf::preferred_for_audience(vf, vf.audience("w")));
    REQUIRE(for_w.size() == 1);
    CHECK(for_w[0] == std::vector<std::string>{"A2", "A5", "A7"});
    // the reconciling argument is accepted by both audiences
    CHECK(vaf::status_for_audience(vf, vf.audience("y"), "A5") == af::Status::justified);
    CHECK(vaf::status_for_audience(vf, vf.audience("w"), "A5") == af::Status::justified);
}

TEST_CASE("direct search agrees with the reduction route") {
    std::mt19937 rng(77);
    for (int i = 0; i < 40; ++i) {
        ValueFramework vf = testsupport::random_vaf(rng, 6, 3, 0.5);
        for (const auto& name : vf.audience_names()) {
            const Audience& aud = vf.audience(name);
            auto direct = member_lists(vaf::preferred_for_audience(vf, aud));
            auto reduced = vaf::reduce_for_audience(vf, aud);
            CHECK(direct ==
                  member_lists(af::enumerate_extensions(reduced, af::Semantics::preferred)));
            CHECK(direct == testsupport::oracle_extensions(reduced, af::Semantics::preferred));
        }
    }
}

TEST_CASE("defeats are a subset of attacks; renaming values changes nothing") {
    std::mt19937 rng(78);
    ValueFramework vf = testsupport::random_vaf(rng, 6, 3, 0.5);
    for (const auto& name : vf.audience_names()) {
        const Audience& aud = vf.audience(name);
        for (const auto& [from, to] : vaf::reduce_for_audience(vf, aud).attacks())
            CHECK(vf.base().has_attack(from, to));
        for (const auto& ext : vaf::preferred_for_audience(vf, aud))
            CHECK(vaf::conflict_free_for(aud, {ext.members.begin(), ext.members.end()}, vf));
    }

    // consistent renaming of the values
    af::Framework base;
    base.add_argument("p");
    base.add_argument("q");
    base.add_attack("p", "q");
    ValueFramework original(base, {{"p", "v0"}, {"q", "v1"}},
                            {Audience("a", {"v0", "v1"})});
    af::Framework base2;
    base2.add_argument("p");
    base2.add_argument("q");
    base2.add_attack("p", "q");
    ValueFramework renamed(base2, {{"p", "blue"}, {"q", "red"}},
                           {Audience("a", {"blue", "red"})});
    CHECK(member_lists(vaf::preferred_for_audience(original, original.audience("a"))) ==
          member_lists(vaf::preferred_for_audience(renamed, renamed.audience("a"))));
}

TEST_CASE("practice ordering over the four-argument fixture") {
    auto loaded = load_fixture("vaf_kb0.vaf");
    const ValueFramework& vf = loaded.framework;
    auto for_y = vaf::practice_ordering(vf, vf.audience("y"), loaded.practices);
    CHECK(for_y.dominates ==
          std::set<std::pair<std::string, std::string>>{{"agriculture", "restoration"}});
    auto for_w = vaf::practice_ordering(vf, vf.audience("w"), loaded.practices);
    CHECK(for_w.dominates ==
          std::set<std::pair<std::string, std::string>>{{"restoration", "agriculture"}});

    std::map<std::string, std::string> single;
    for (const auto& node : vf.base().nodes()) single[node] = "only";
    CHECK(vaf::practice_ordering(vf, vf.audience("y"), single).dominates.empty());
}

TEST_CASE("hasse rendering applies the transitive reduction") {
    vaf::PracticeOrdering po;
    po.practices = {"top", "mid", "low"};
    po.dominates = {{"top", "mid"}, {"mid", "low"}, {"top", "low"}};
    CHECK(vaf::hasse_to_dot(po) ==
          "digraph practices {\n"
          "  \"low\";\n  \"mid\";\n  \"top\";\n"
          "  \"mid\" -> \"low\";\n  \"top\" -> \"mid\";\n"
          "}\n");

    vaf::PracticeOrdering single;
    single.practices = {"a", "r"};
    single.dominates = {{"a", "r"}};
    CHECK(vaf::hasse_to_dot(single) ==
          "digraph practices {\n  \"a\";\n  \"r\";\n  \"a\" -> \"r\";\n}\n");

    vaf::PracticeOrdering isolated;
    isolated.practices = {"a", "r"};
    CHECK(vaf::hasse_to_dot(isolated) == "digraph practices {\n  \"a\";\n  \"r\";\n}\n");

    vaf::PracticeOrdering cyclic;
    cyclic.practices = {"a", "b", "c"};
    cyclic.dominates = {{"a", "b"}, {"b", "c"}, {"c", "a"}};
    CHECK_THROWS_AS(vaf::hasse_to_dot(cyclic), SemanticError);
}
