#pragma once

// Seeded random generators for property testing: identifiers, traces,
// guarded programs in either calculus, interaction sets, and reachable
// resumptions harvested from the rewrite relation.

#include <cstddef>
#include <random>
#include <vector>

#include "ccsn/identifiers.hpp"
#include "ccsn/interaction.hpp"
#include "ccsn/operational.hpp"
#include "ccsn/syntax.hpp"
#include "ccsn/traces.hpp"

namespace ccsn {

using Rng = std::mt19937_64;

// Identifier with up to maxDepth wrappers over a random leaf. Restriction
// wrappers draw from a three-channel pool.
Identifier randomIdentifier(Rng& rng, int maxDepth = 6);

// Trace over {tau, b1, b2} with a geometric silent prefix, ending in eps or
// delta, or in cut when allowed.
Trace randomTrace(Rng& rng, std::size_t maxLen, bool allowCut = false);

TraceSet randomTraceSet(Rng& rng, std::size_t maxSize, std::size_t maxLen,
                        bool allowCut = false);

struct GenOptions {
  int maxDepth = 4;
  int maxChannels = 3;
  int maxDecls = 2;
  int nbar = 2;
};

// Closed program with guarded declarations, valid for the chosen calculus.
// Recursion is restricted to sequential tails and kept out of parallel
// positions, so budgeted trace sets stay enumerable.
Program randomProgram(Rng& rng, Calculus calc, const GenOptions& opts = {});

// Interaction set for the matching tests: up to maxSize joint prefixes with
// up to maxJoint items each, over a three-channel pool, with shallow
// identifiers. Roughly half the draws admit a full matching.
InteractionSet randomInteractionSet(Rng& rng, std::size_t maxSize = 4,
                                    std::size_t maxJoint = 3);

// Statement-resumption pairs reachable from the initial configuration of p
// by the silent rewrite relation, breadth first, at most limit of them.
std::vector<std::pair<Statement, Resumption>> harvestResumptions(
    const Program& p, std::size_t limit);

}  // namespace ccsn
