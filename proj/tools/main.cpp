// Command line front end: solve, vaf, build, dialogue, dkq, dot.
// Exit codes: 0 success, 1 semantic error, 2 input error, 3 resource bound.

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "arguendo/arguendo.hpp"

namespace {

using namespace arguendo;

constexpr int kOk = 0;
constexpr int kSemanticError = 1;
constexpr int kInputError = 2;
constexpr int kResourceError = 3;

struct Output {
    std::string path;  // empty = stdout

    void write(const std::string& text) const {
        if (path.empty()) {
            std::cout << text;
            return;
        }
        std::ofstream out(path, std::ios::binary);
        if (!out) throw SemanticError("cannot write '" + path + "'");
        out << text;
    }
};

std::vector<logic::Formula> parse_formula_list(const std::string& joined) {
    std::vector<logic::Formula> out;
    std::string current;
    std::istringstream in(joined);
    while (std::getline(in, current, ';'))
        if (current.find_first_not_of(" \t") != std::string::npos)
            out.push_back(logic::parse_formula(current));
    return out;
}

std::string render_extensions(const std::vector<af::Extension>& exts) {
    std::string out;
    for (const auto& e : exts) {
        out += "{";
        for (std::size_t i = 0; i < e.members.size(); ++i) {
            if (i) out += ",";
            out += e.members[i];
        }
        out += "}\n";
    }
    return out;
}

int run_solve(const std::string& input, const std::string& semantics_name,
              std::size_t node_bound, const Output& output) {
    af::Framework f = io::load_af(input);
    const af::Semantics sem = af::semantics_from_string(semantics_name);
    af::SemanticsOptions opts;
    opts.node_bound = node_bound;
    std::string text = render_extensions(af::enumerate_extensions(f, sem, opts));
    if (sem != af::Semantics::admissible) {
        std::vector<std::string> nodes = f.nodes();
        std::sort(nodes.begin(), nodes.end());
        for (const auto& n : nodes)
            text += n + ": " + af::to_string(af::argument_status(f, n, sem, opts)) + "\n";
    }
    output.write(text);
    return kOk;
}

int run_vaf(const std::string& input, const std::string& audience_filter,
            std::size_t node_bound, const Output& output) {
    io::LoadedVaf loaded = io::load_vaf(input);
    const vaf::ValueFramework& vf = loaded.framework;
    vaf::VafOptions opts;
    opts.node_bound = node_bound;

    std::vector<std::string> audiences = vf.audience_names();
    if (!audience_filter.empty()) {
        vf.audience(audience_filter);  // raises when unknown
        audiences = {audience_filter};
    }
    std::string text;
    for (const auto& name : audiences) {
        const vaf::Audience& aud = vf.audience(name);
        text += "audience " + name + ":\n";
        text += render_extensions(vaf::preferred_for_audience(vf, aud, opts));
        std::vector<std::string> nodes = vf.base().nodes();
        std::sort(nodes.begin(), nodes.end());
        for (const auto& n : nodes)
            text += n + ": " + af::to_string(vaf::status_for_audience(vf, aud, n, opts)) + "\n";
        if (!loaded.practices.empty()) {
            auto po = vaf::practice_ordering(vf, aud, loaded.practices, opts);
            for (const auto& [p, q] : po.dominates) text += p + " > " + q + "\n";
        }
    }
    output.write(text);
    return kOk;
}

int run_build(const std::string& input, const std::string& targets,
              std::size_t max_support, bool allow_inconsistent, const Output& output) {
    logic::KnowledgeBase kb = io::load_kb(input);
    builder::BuilderConfig cfg;
    cfg.max_support_size = max_support;
    cfg.allow_inconsistent_support = allow_inconsistent;
    if (!targets.empty()) cfg.claim_targets = parse_formula_list(targets);
    auto built = builder::framework_from_kb(kb, cfg);
    output.write(builder::render_argument_table(built.arguments) +
                 io::render_af(built.framework));
    return kOk;
}

int run_dialogue(const std::string& thesis_text, const std::string& premises_text,
                 const std::string& preset, std::optional<int> rank_o,
                 std::optional<int> rank_p, const std::string& script_path, bool decide,
                 const Output& output) {
    dialogue::RuleSet rules = dialogue::RuleSet::preset(preset);
    if (rank_o) rules.rank_o = *rank_o;
    if (rank_p) rules.rank_p = *rank_p;
    dialogue::Sequent thesis{parse_formula_list(premises_text),
                             logic::parse_formula(thesis_text)};
    if (!script_path.empty()) {
        auto script = io::load_script(script_path);
        auto transcript = dialogue::play_script(thesis, rules, script);
        output.write(dialogue::render_transcript(transcript));
        return kOk;
    }
    if (decide) {
        auto result = dialogue::proponent_wins(thesis, rules);
        output.write(std::string("The ") + dialogue::to_string(result.winner) + " wins\n");
        return kOk;
    }
    throw SemanticError("dialogue needs --script or --decide");
}

int run_dkq(const std::string& input, bool corrected, const Output& output) {
    dkq::Derivation d = dkq::parse_derivation(io::read_file(input));
    const auto& schemes = corrected ? dkq::corrected_schemes() : dkq::printed_schemes();
    auto result = dkq::check_derivation(d, schemes);
    if (result.ok) {
        output.write("ok\n");
        return kOk;
    }
    output.write("error line " + std::to_string(result.line) + ": " + result.reason + "\n");
    return kSemanticError;
}

int run_dot(const std::string& input, const std::string& audience, bool hasse,
            std::size_t node_bound, const Output& output) {
    const bool is_vaf = input.size() >= 4 && input.substr(input.size() - 4) == ".vaf";
    if (!is_vaf) {
        if (hasse || !audience.empty())
            throw SemanticError("--audience and --hasse need a value framework input");
        output.write(af::framework_to_dot(io::load_af(input)));
        return kOk;
    }
    io::LoadedVaf loaded = io::load_vaf(input);
    if (audience.empty()) {
        if (hasse) throw SemanticError("--hasse needs --audience");
        output.write(af::framework_to_dot(loaded.framework.base()));
        return kOk;
    }
    const vaf::Audience& aud = loaded.framework.audience(audience);
    if (!hasse) {
        output.write(af::framework_to_dot(vaf::reduce_for_audience(loaded.framework, aud)));
        return kOk;
    }
    if (loaded.practices.empty())
        throw SemanticError("the input declares no practices");
    vaf::VafOptions opts;
    opts.node_bound = node_bound;
    output.write(vaf::hasse_to_dot(
        vaf::practice_ordering(loaded.framework, aud, loaded.practices, opts)));
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"argumentation toolkit: frameworks, audiences, dialogues, derivations"};
    app.require_subcommand(1);
    app.set_config("--config");
    unsigned seed = 0;
    app.add_option("--seed", seed,
                   "seed for randomized corpus generation (current commands are deterministic)");

    std::string input, output_path, semantics = "preferred", audience, targets;
    std::string thesis, premises, preset = "classical", script;
    std::size_t node_bound = 18, max_support = 3;
    bool allow_inconsistent = false, decide = false, corrected = false, hasse = false;
    std::optional<int> rank_o, rank_p;

    CLI::App* solve = app.add_subcommand("solve", "extensions and statuses of a framework");
    solve->add_option("--input", input, "framework file")->required();
    solve->add_option("--semantics", semantics,
                      "admissible|complete|grounded|stable|preferred");
    solve->add_option("--node-bound", node_bound, "enumeration bound");
    solve->add_option("--output", output_path, "write here instead of stdout");

    CLI::App* vaf_cmd = app.add_subcommand("vaf", "per-audience analysis of a value framework");
    vaf_cmd->add_option("--input", input, "value framework file")->required();
    vaf_cmd->add_option("--audience", audience, "restrict to one audience");
    vaf_cmd->add_option("--node-bound", node_bound, "enumeration bound");
    vaf_cmd->add_option("--output", output_path, "write here instead of stdout");

    CLI::App* build = app.add_subcommand("build", "arguments and attacks from a knowledge base");
    build->add_option("--input", input, "knowledge base file")->required();
    build->add_option("--targets", targets, "semicolon-separated claim formulas");
    build->add_option("--max-support", max_support, "largest support size");
    build->add_flag("--allow-inconsistent", allow_inconsistent,
                    "admit inconsistent supports");
    build->add_option("--output", output_path, "write here instead of stdout");

    CLI::App* dlg = app.add_subcommand("dialogue", "replay or decide a dialogue");
    dlg->add_option("--thesis", thesis, "thesis formula")->required();
    dlg->add_option("--premises", premises, "semicolon-separated premises");
    dlg->add_option("--preset", preset, "classical|intuitionistic|d11|d11-nl");
    dlg->add_option("--rank-o", rank_o, "opponent repetition rank");
    dlg->add_option("--rank-p", rank_p, "proponent repetition rank");
    dlg->add_option("--script", script, "move script to replay");
    dlg->add_flag("--decide", decide, "search for a winning strategy");
    dlg->add_option("--output", output_path, "write here instead of stdout");

    CLI::App* dkq_cmd = app.add_subcommand("dkq", "check a derivation file");
    dkq_cmd->add_option("--input", input, "derivation file")->required();
    dkq_cmd->add_flag("--corrected", corrected, "use the corrected scheme set");
    dkq_cmd->add_option("--output", output_path, "write here instead of stdout");

    CLI::App* dot = app.add_subcommand("dot", "emit graphs in DOT form");
    dot->add_option("--input", input, "framework or value framework file")->required();
    dot->add_option("--audience", audience, "reduce for this audience");
    dot->add_flag("--hasse", hasse, "practice ordering instead of the framework");
    dot->add_option("--node-bound", node_bound, "enumeration bound");
    dot->add_option("--output", output_path, "write here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }

    const Output out{output_path};
    try {
        if (*solve) return run_solve(input, semantics, node_bound, out);
        if (*vaf_cmd) return run_vaf(input, audience, node_bound, out);
        if (*build) return run_build(input, targets, max_support, allow_inconsistent, out);
        if (*dlg)
            return run_dialogue(thesis, premises, preset, rank_o, rank_p, script, decide, out);
        if (*dkq_cmd) return run_dkq(input, corrected, out);
        if (*dot) return run_dot(input, audience, hasse, node_bound, out);
    } catch (const ResourceError& e) {
        std::cerr << "resource bound: " << e.what() << "\n";
        return kResourceError;
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInputError;
    } catch (const SemanticError& e) {
        // problems reading or validating inputs are input errors
        const std::string what = e.what();
        if (what.rfind("cannot open", 0) == 0 || what.rfind("line ", 0) == 0 ||
            what.rfind("script line", 0) == 0) {
            std::cerr << "input error: " << what << "\n";
            return kInputError;
        }
        std::cerr << "error: " << what << "\n";
        return kSemanticError;
    }
    return kInputError;
}
