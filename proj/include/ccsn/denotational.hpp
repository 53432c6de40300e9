#pragma once

// Continuation-structured denotational evaluation. Denotations are kept as
// terms over the seven semantic operators; evaluating a term at a
// continuation under a symbol budget yields its trace set. Structural term
// equality stands in for the function equality the metric model provides.

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "ccsn/bags.hpp"
#include "ccsn/identifiers.hpp"
#include "ccsn/interaction.hpp"
#include "ccsn/syntax.hpp"
#include "ccsn/traces.hpp"

namespace ccsn {

class DenTerm;

struct DenNode {
  enum Op {
    OfStmt,  // the denotation of a statement
    RestrictT,
    SeqT,
    ChoiceT,
    MergeT,
    SyncMergeT,
    LeftMergeT,
    LeftSyncMergeT,
  };

  Op op;
  Statement stmt;    // OfStmt
  ChannelName chan;  // RestrictT
  std::vector<DenTerm> kids;
};

class DenTerm {
 public:
  DenTerm() = default;

  static DenTerm ofStmt(Statement x);
  static DenTerm restrictT(DenTerm d, ChannelName c);
  static DenTerm seqT(DenTerm d1, DenTerm d2);
  static DenTerm choiceT(DenTerm d1, DenTerm d2);
  static DenTerm mergeT(DenTerm d1, DenTerm d2);
  static DenTerm syncMergeT(DenTerm d1, DenTerm d2);
  static DenTerm leftMergeT(DenTerm d1, DenTerm d2);
  static DenTerm leftSyncMergeT(DenTerm d1, DenTerm d2);

  DenNode::Op op() const { return node_->op; }
  const Statement& stmt() const { return node_->stmt; }
  const ChannelName& channel() const { return node_->chan; }
  const DenTerm& child(std::size_t i) const { return node_->kids[i]; }
  std::size_t arity() const { return node_->kids.size(); }
  bool valid() const { return node_ != nullptr; }

  friend bool operator==(const DenTerm& a, const DenTerm& b);
  friend std::strong_ordering operator<=>(const DenTerm& a, const DenTerm& b);

 private:
  explicit DenTerm(std::shared_ptr<const DenNode> n) : node_(std::move(n)) {}
  std::shared_ptr<const DenNode> node_;
};

// Either the empty denotation or a term to evaluate.
struct Denotation {
  std::optional<DenTerm> term;

  static Denotation empty() { return {}; }
  static Denotation of(DenTerm d) { return {std::move(d)}; }
  bool isEmpty() const { return !term.has_value(); }

  friend bool operator==(const Denotation& a, const Denotation& b) {
    if (a.term.has_value() != b.term.has_value()) return false;
    return !a.term.has_value() || *a.term == *b.term;
  }
  friend std::strong_ordering operator<=>(const Denotation& a,
                                          const Denotation& b) {
    if (a.term.has_value() != b.term.has_value())
      return a.term.has_value() <=> b.term.has_value();
    if (!a.term.has_value()) return std::strong_ordering::equal;
    return *a.term <=> *b.term;
  }
};

struct Continuation {
  std::vector<DenTerm> sync;    // joint partners, soonest first
  InteractionSet iset;          // actions already offered, with positions
  std::vector<Identifier> ids;  // active positions, head first
  Bag<Denotation> kbag{Denotation::empty()};

  friend bool operator==(const Continuation& a, const Continuation& b) {
    return a.sync == b.sync && a.iset == b.iset && a.ids == b.ids &&
           a.kbag == b.kbag;
  }
  friend std::strong_ordering operator<=>(const Continuation& a,
                                          const Continuation& b) {
    if (auto c = a.sync <=> b.sync; c != 0) return c;
    if (auto c = a.iset <=> b.iset; c != 0) return c;
    if (auto c = a.ids <=> b.ids; c != 0) return c;
    return a.kbag <=> b.kbag;
  }
};

Continuation gamma0();

// The four continuation transformers.
struct ContTransform {
  enum Kind { Restrict, AddSeq, AddLeftMerge, AddLeftSync };

  Kind kind;
  ChannelName chan;  // Restrict
  DenTerm den;       // the Add* kinds

  static ContTransform restrictChan(ChannelName c) {
    return {Restrict, std::move(c), {}};
  }
  static ContTransform addSeq(DenTerm d) { return {AddSeq, {}, std::move(d)}; }
  static ContTransform addLeftMerge(DenTerm d) {
    return {AddLeftMerge, {}, std::move(d)};
  }
  static ContTransform addLeftSync(DenTerm d) {
    return {AddLeftSync, {}, std::move(d)};
  }
};

// Throws GuardViolationError when AddLeftSync is applied to a continuation
// whose synchronous capacity is exhausted; evaluation checks first.
Continuation contTransform(const ContTransform& t, const Continuation& g,
                           int nbar);

std::size_t cardU(const Continuation& g);
bool cardGamma(const Continuation& g, int nbar);

// Collapses the bag at or below position a into one denotation, mirroring
// the operational bag collapse.
Denotation collapseKD(const Identifier& a, const Bag<Denotation>& k);

// A single action evaluated at a continuation: pop a synchronous partner or
// close the offered set and emit. The budget counts emitted symbols; where
// it runs out the trace ends in a cut.
TraceSet opA(const Action& a, const Continuation& g, const Program& p,
             std::size_t m);

TraceSet evalDen(const DenTerm& d, const Continuation& g, const Program& p,
                 std::size_t m);

// Traces of a statement's denotation at the initial continuation.
TraceSet denD(const Statement& x, const Program& p, std::size_t m);

// Occurrence counter for the branch the capacity invariant makes
// unreachable; stays at zero unless a rule regresses.
std::size_t opaDefensiveHits();
void resetOpaDefensiveHits();

}  // namespace ccsn
