#pragma once

// Plain-text formats.
//
// Front files hold a plat word, tokens L<i>, R<i>, X<i> separated by
// whitespace; '#' starts a comment running to the end of the line.
//
// Grid files:
//   grid <n>
//   X: x_1 ... x_n     (row of the X marker in columns 1..n)
//   O: o_1 ... o_n

#include <filesystem>
#include <string>
#include <string_view>

#include "legfront/front.hpp"
#include "legfront/grid.hpp"

namespace legfront {

// Throws SyntaxError (with line/column) or the validation error of the word.
FrontDiagram parse_front(std::string_view text);
std::string serialize_front(const FrontDiagram& d);

GridDiagram parse_grid(std::string_view text);
std::string serialize_grid(const GridDiagram& g);

// Throws Io when the file cannot be read.
std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace legfront
