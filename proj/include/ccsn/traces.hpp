#pragma once

// Finite trace approximations. A trace is a finite symbol sequence with a
// terminator: ordinary termination, deadlock (operational only), or a cut
// marking budget exhaustion. Infinite behaviour appears only as cut-ended
// prefixes; two sets are compared at budget m by truncating both.

#include <compare>
#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "ccsn/names.hpp"

namespace ccsn {

enum class Terminator { Eps, Delta, Cut };

struct Trace {
  std::vector<Token> symbols;
  Terminator end = Terminator::Eps;

  auto operator<=>(const Trace&) const = default;

  std::string toString() const;
};

using TraceSet = std::set<Trace>;

inline Trace epsTrace() { return {}; }
inline Trace deltaTrace() { return {{}, Terminator::Delta}; }
inline Trace cutTrace() { return {{}, Terminator::Cut}; }

TraceSet prefixAction(const Token& b, const TraceSet& p);
TraceSet tauPow(std::size_t i, const TraceSet& p);

// The level-i choice combination: keeps those traces that still act after
// the nbar-i silent steps all alternatives share, or reports that shared
// deadlock when none does. A cut right at the boundary is kept as
// undetermined.
TraceSet choiceMerge(std::size_t i, const TraceSet& p1, const TraceSet& p2,
                     std::size_t nbar);

// Operational-to-denotational trace abstraction: every symbol gains an
// nbar-fold silent prelude, deadlock becomes nbar silent steps.
Trace xiTrace(const Trace& q, std::size_t nbar);
TraceSet xiSet(const TraceSet& p, std::size_t nbar);

TraceSet truncateSet(const TraceSet& p, std::size_t m);

std::string renderTraceSet(const TraceSet& p);

}  // namespace ccsn
