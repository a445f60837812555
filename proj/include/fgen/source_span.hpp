#pragma once

#include <cstddef>
#include <string>

namespace fgen {

// 1-based position of a token or construct in the input text.
struct SourceSpan {
    int line = 1;
    int column = 1;
    int length = 1;

    friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

inline std::string to_string(const SourceSpan& s) {
    return "line " + std::to_string(s.line) + ", column " + std::to_string(s.column);
}

} // namespace fgen
