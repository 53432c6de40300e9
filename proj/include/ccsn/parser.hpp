#pragma once

#include <string>

#include "ccsn/syntax.hpp"

namespace ccsn {

// Parses the concrete program syntax:
//
//   program := {"chan" ident+ ";"} {"let" ident "=" stmt ";"} "run" stmt
//
// Statement precedence, loosest to tightest: `+` | parallel family
// (`||` `|` `||-` `|-`, one level, mixing needs parentheses) | `;`
// (right-assoc) | postfix `\c` | atom. Atoms are `stop`, `@` (context hole),
// parenthesized statements, and `&`-joined action items. `#` starts a line
// comment. Bare identifiers resolve via the declarations: `chan` names are
// channels, `let` names are process variables, anything else in action
// position is an internal action.
Program parseProgram(const std::string& text, Calculus calculus, int nbar);

}  // namespace ccsn
