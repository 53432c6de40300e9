#pragma once

// Interaction sets and the interaction functions of both calculi. A set is
// ripe when its actions can jointly synchronize given where each component
// sits in the tree; the result is then the silent action, except for the
// singleton internal-action case which yields that action.

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "ccsn/identifiers.hpp"
#include "ccsn/syntax.hpp"

namespace ccsn {

using LocatedAction = std::pair<Action, Identifier>;
using InteractionSet = std::set<LocatedAction>;

// nullopt encodes "no interaction".
using InteractionResult = std::optional<Token>;

// Base calculus: one joint input against exactly matching outputs.
InteractionResult interactN(const InteractionSet& u, int nbar);

// Extended calculus: multiset synchronization across joint prefixes.
InteractionResult interactNPlus(const InteractionSet& u, int nbar);

// Dispatch on the program's calculus.
InteractionResult interact(const InteractionSet& u, const Program& p);

using LocatedChannel = std::pair<ChannelName, Identifier>;

// Input / output occurrences of a joint prefix, tagged with its position.
// Sends are stored by underlying channel (the involution applied).
std::vector<LocatedChannel> splitReceives(const Action& joint, const Identifier& a);
std::vector<LocatedChannel> splitSends(const Action& joint, const Identifier& a);

// Pointwise synchronization of two equally long occurrence sequences.
bool matchSequences(const std::vector<LocatedChannel>& recv,
                    const std::vector<LocatedChannel>& send);

}  // namespace ccsn
