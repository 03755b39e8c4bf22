#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "arguendo/dialogue/game.hpp"
#include "arguendo/errors.hpp"
#include "arguendo/io/line_reader.hpp"
#include "arguendo/logic/parse.hpp"

namespace arguendo::io {

/// One move per line: `O|P attack|defend <target-position> <payload>`,
/// payload being `?L`, `?R`, `?` or a formula.
inline std::vector<dialogue::Move> parse_script(const std::string& text) {
    std::vector<dialogue::Move> out;
    for (const SourceLine& line : content_lines(text)) {
        auto fail = [&](const std::string& msg) {
            return SemanticError("script line " + std::to_string(line.number) + ": " + msg);
        };
        std::istringstream in(line.text);
        std::string agent, function, payload;
        int target = -1;
        if (!(in >> agent >> function >> target)) throw fail("malformed move");
        std::getline(in, payload);
        const auto begin = payload.find_first_not_of(" \t");
        if (begin == std::string::npos) throw fail("missing payload");
        payload = payload.substr(begin);

        dialogue::Move m;
        if (agent == "O")
            m.agent = dialogue::Agent::opponent;
        else if (agent == "P")
            m.agent = dialogue::Agent::proponent;
        else
            throw fail("agent must be O or P");
        if (function == "attack")
            m.function = dialogue::MoveFunction::attack;
        else if (function == "defend")
            m.function = dialogue::MoveFunction::defence;
        else
            throw fail("function must be attack or defend");
        m.target = target;
        if (payload == "?L" || payload == "?R" || payload == "?") {
            if (m.function != dialogue::MoveFunction::attack)
                throw fail("requests are attacks");
            m.kind = dialogue::MoveKind::request;
            m.request = payload == "?L"  ? dialogue::RequestToken::left
                        : payload == "?R" ? dialogue::RequestToken::right
                                          : dialogue::RequestToken::disjunction;
        } else {
            m.kind = dialogue::MoveKind::assertion;
            m.formula = logic::parse_formula(payload);
        }
        out.push_back(std::move(m));
    }
    return out;
}

inline std::vector<dialogue::Move> load_script(const std::string& path) {
    return parse_script(read_file(path));
}

}  // namespace arguendo::io
