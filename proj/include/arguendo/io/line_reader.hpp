#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "arguendo/errors.hpp"

namespace arguendo::io {

struct SourceLine {
    std::size_t number;  // 1-based
    std::string text;    // comment-stripped, trimmed, non-empty
};

/// Splits text into content lines; `#` starts a comment, blank lines
/// are dropped.
inline std::vector<SourceLine> content_lines(const std::string& text) {
    std::vector<SourceLine> out;
    std::istringstream in(text);
    std::string raw;
    std::size_t number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        const auto begin = raw.find_first_not_of(" \t\r");
        if (begin == std::string::npos) continue;
        const auto end = raw.find_last_not_of(" \t\r");
        out.push_back(SourceLine{number, raw.substr(begin, end - begin + 1)});
    }
    return out;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw SemanticError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace arguendo::io
