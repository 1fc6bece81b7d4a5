#pragma once

#include <string>

#include "ctc/code.hpp"

namespace ctc {

/// Text format: "m=<int> kind=linear|explicit", then one 0/1 word per line
/// with coordinate 0 leftmost. Linear files list basis rows.
/// Blank lines and lines starting with '#' are skipped.
Code parse_code(const std::string& text, const std::string& source = "<string>");
Code read_code_file(const std::string& path);
std::string format_code(const Code& c);
void write_code_file(const Code& c, const std::string& path);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace ctc
