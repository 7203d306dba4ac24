#pragma once

#include <string>

#include "gorcode/code.hpp"
#include "gorcode/decomp.hpp"

namespace gorcode {

/// Parses the matrix text format:
///   line 1:  q k n        (q as a plain prime or as p^m)
///   then k lines of n whitespace-separated canonical integer encodings.
/// Blank lines are ignored. Errors: parse_error with 1-based line/column.
Code parse_code_text(const std::string& text, const std::string& source_name = "<input>");

/// Reads and parses a code file. Errors: parse_error (unreadable file or
/// malformed contents).
Code read_code_file(const std::string& path);

/// Serializes a code in the matrix text format.
std::string format_code_text(const Code& c);

/// DOT rendering of the block graph, one `i -- j;` edge line per nonzero
/// entry of A. Vertices carry original 1-based column numbers: rows appear
/// as their pivot column, right vertices as their own column.
std::string to_dot(const BlockGraph& graph);

} // namespace gorcode
