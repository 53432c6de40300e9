#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ccsn/abstraction.hpp"
#include "ccsn/bags.hpp"
#include "ccsn/denotational.hpp"
#include "ccsn/errors.hpp"
#include "ccsn/gen.hpp"
#include "ccsn/identifiers.hpp"
#include "ccsn/interaction.hpp"
#include "ccsn/json_io.hpp"
#include "ccsn/laws.hpp"
#include "ccsn/names.hpp"
#include "ccsn/operational.hpp"
#include "ccsn/parser.hpp"
#include "ccsn/syntax.hpp"
#include "ccsn/traces.hpp"

using namespace ccsn;

TEST_CASE("every public header stands alone and the engines link") {
  const Program p = parseProgram("run b1 || b2", Calculus::CCSN, 2);
  CHECK(denO(p.main, p, 8).size() == 2);
  CHECK(denD(p.main, p, 16).size() == 2);
}
