#pragma once

#include <string>

#include "arguendo/errors.hpp"
#include "arguendo/io/line_reader.hpp"
#include "arguendo/logic/knowledge_base.hpp"
#include "arguendo/logic/parse.hpp"

namespace arguendo::io {

/// One formula per line; duplicates are rejected.
inline logic::KnowledgeBase parse_kb(const std::string& text) {
    logic::KnowledgeBase kb;
    for (const SourceLine& line : content_lines(text)) {
        logic::Formula f = logic::parse_formula(line.text);
        if (!kb.insert(f))
            throw SemanticError("line " + std::to_string(line.number) +
                                ": duplicate formula '" + logic::render_formula(f) + "'");
    }
    return kb;
}

inline logic::KnowledgeBase load_kb(const std::string& path) {
    return parse_kb(read_file(path));
}

inline std::string render_kb(const logic::KnowledgeBase& kb) {
    std::string out;
    for (const auto& f : kb) out += logic::render_formula(f) + "\n";
    return out;
}

}  // namespace arguendo::io
