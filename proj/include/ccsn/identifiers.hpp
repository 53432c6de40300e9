#pragma once

// Hierarchical identifiers locating a component inside a running statement.
// The grammar is linear (every constructor has exactly one child), so an
// identifier is a spine of unary wrappers, outermost first, around a leaf
// that is either a hole or the sequencing marker.

#include <compare>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ccsn/names.hpp"

namespace ccsn {

enum class IdLeaf { Hole, SeqMark };

struct IdWrap {
  enum Kind { SeqLeft, Restrict, ParLeft, ParRight };
  Kind kind;
  ChannelName chan;  // meaningful only when kind == Restrict, empty otherwise

  auto operator<=>(const IdWrap&) const = default;
};

class Identifier {
 public:
  Identifier() : leaf_(IdLeaf::Hole) {}

  static Identifier hole() { return Identifier{}; }
  static Identifier seqMark() { return Identifier({}, IdLeaf::SeqMark); }

  // Wrapping constructors, child -> wrapped identifier.
  static Identifier seqLeft(Identifier child);            // <a;
  static Identifier restricted(Identifier child, ChannelName c);  // (a)\c
  static Identifier parLeft(Identifier child);            // <a|
  static Identifier parRight(Identifier child);           // |a>

  // a(pattern): the transition rules extend the current identifier at its
  // hole, e.g. extendRestrict(a, c) = substitute(a, (*)\c).
  Identifier extendSeqLeft() const;
  Identifier extendSeqMark() const;
  Identifier extendRestrict(const ChannelName& c) const;
  Identifier extendParLeft() const;
  Identifier extendParRight() const;

  IdLeaf leaf() const { return leaf_; }
  const std::vector<IdWrap>& spine() const { return spine_; }
  std::size_t size() const { return spine_.size() + 1; }

  // Innermost wrapper (nearest the leaf), if any; parent strips it.
  std::optional<IdWrap> innermost() const;
  Identifier parent() const;

  std::string toString() const;

  auto operator<=>(const Identifier&) const = default;

 private:
  Identifier(std::vector<IdWrap> spine, IdLeaf leaf)
      : spine_(std::move(spine)), leaf_(leaf) {}

  std::vector<IdWrap> spine_;
  IdLeaf leaf_;

  friend Identifier substitute(const Identifier&, const Identifier&);
  friend Identifier glb(const Identifier&, const Identifier&);
  friend std::optional<Identifier> subtract(const Identifier&, const Identifier&);
};

using IdSet = std::set<Identifier>;

// Replaces the hole of outer by inner; identifiers ending in the sequencing
// marker absorb the substitution.
Identifier substitute(const Identifier& outer, const Identifier& inner);

// The prefix order: matches(a, b) iff a's spine is a prefix of b's and a's
// leaf permits the remainder (a hole matches anything, the marker only
// itself).
bool matches(const Identifier& a, const Identifier& b);

// Greatest lower bound under matches.
Identifier glb(const Identifier& a, const Identifier& b);

// Relative position of big under small; nullopt when the spines disagree.
std::optional<Identifier> subtract(const Identifier& big, const Identifier& small);

// Whether channel c is bound by a restriction wrapper along a's spine.
bool occursRestricted(const ChannelName& c, const Identifier& a);

// Whether components at the two positions may synchronize on their channels:
// distinct positions, equal channels, and no restriction on the channel
// strictly between the shared prefix and either position.
bool binaryInteract(const ChannelName& c1, const Identifier& a1,
                    const ChannelName& c2, const Identifier& a2);

// Subset of pi at or below a.
IdSet filterBelow(const IdSet& pi, const Identifier& a);

// First restriction wrapper of b strictly below position a, if any.
std::optional<ChannelName> restrictedNameAt(const Identifier& a, const Identifier& b);

// Channels restricted immediately below a by some member of pi.
std::set<ChannelName> restrictedNamesBelow(const IdSet& pi, const Identifier& a);

}  // namespace ccsn
