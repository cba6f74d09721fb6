#pragma once

#include "corkcalc/moves.hpp"

#include <string>
#include <vector>

namespace corkcalc {

/* Move scripts: one step per line, '#' comments and blank lines ignored.
 * See docs/formats.md for the line grammar.  Throws Error("ScriptParse")
 * with the offending line number. */
std::vector<MoveStep> parse_script(const std::string& text);

std::string format_script(const std::vector<MoveStep>& steps);

}  // namespace corkcalc
