#pragma once

// Resumption-based execution. A running statement carries a resumption:
// synchronous partners still owed a joint action, the interactions already
// offered, the active positions, and a bag of asynchronous continuations.
// Execution alternates a silent rewriting phase with labelled action steps;
// runO folds that into budgeted trace sets.

#include <compare>
#include <cstddef>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "ccsn/bags.hpp"
#include "ccsn/identifiers.hpp"
#include "ccsn/interaction.hpp"
#include "ccsn/syntax.hpp"
#include "ccsn/traces.hpp"

namespace ccsn {

// Outcome slot: either everything terminated or a statement remains to run.
struct RRes {
  std::optional<Statement> pending;

  static RRes terminated() { return {}; }
  static RRes of(Statement x) { return {std::move(x)}; }
  bool isTerminated() const { return !pending.has_value(); }

  friend bool operator==(const RRes& a, const RRes& b) {
    if (a.pending.has_value() != b.pending.has_value()) return false;
    return !a.pending.has_value() || *a.pending == *b.pending;
  }
  friend std::strong_ordering operator<=>(const RRes& a, const RRes& b) {
    if (a.pending.has_value() != b.pending.has_value())
      return a.pending.has_value() <=> b.pending.has_value();
    if (!a.pending.has_value()) return std::strong_ordering::equal;
    return *a.pending <=> *b.pending;
  }
};

struct Resumption {
  StatementList sync;           // joint partners, soonest first
  InteractionSet iset;          // actions already offered, with positions
  std::vector<Identifier> ids;  // active positions, head first
  Bag<RRes> kbag{RRes::terminated()};

  friend bool operator==(const Resumption& a, const Resumption& b) {
    return a.sync == b.sync && a.iset == b.iset && a.ids == b.ids &&
           a.kbag == b.kbag;
  }
  friend std::strong_ordering operator<=>(const Resumption& a,
                                          const Resumption& b) {
    if (auto c = a.sync <=> b.sync; c != 0) return c;
    if (auto c = a.iset <=> b.iset; c != 0) return c;
    if (auto c = a.ids <=> b.ids; c != 0) return c;
    return a.kbag <=> b.kbag;
  }
};

struct Configuration {
  enum Kind { Running, Final };

  Kind kind = Final;
  Statement stmt;   // Running only
  Resumption rho;   // Running only
  RRes outcome;     // Final only

  static Configuration running(Statement x, Resumption r) {
    Configuration t;
    t.kind = Running;
    t.stmt = std::move(x);
    t.rho = std::move(r);
    return t;
  }
  static Configuration finalOf(RRes r) {
    Configuration t;
    t.outcome = std::move(r);
    return t;
  }

  friend bool operator==(const Configuration& a, const Configuration& b) {
    if (a.kind != b.kind) return false;
    if (a.kind == Running) return a.stmt == b.stmt && a.rho == b.rho;
    return a.outcome == b.outcome;
  }
  friend std::strong_ordering operator<=>(const Configuration& a,
                                          const Configuration& b) {
    if (a.kind != b.kind) return a.kind <=> b.kind;
    if (a.kind == Running) {
      if (auto c = a.stmt <=> b.stmt; c != 0) return c;
      return a.rho <=> b.rho;
    }
    return a.outcome <=> b.outcome;
  }
};

Resumption initialResumption();

// Lexicographic progress measure: interaction count, then summed position
// sizes. Forming a resumption raises it, so inverting rules lowers it.
std::pair<std::size_t, std::size_t> measure(const Resumption& rho);

// Whether rho is reachable by the resumption formation rules; decided by
// backward search over the inverted rules, which terminates because every
// inversion strictly lowers the measure.
bool wellFormed(const Resumption& rho, int nbar);

// Collapses the bag at or below position a into one outcome, rebuilding the
// restriction / sequencing / parallel structure the positions record.
RRes collapseK(const Identifier& a, const Bag<RRes>& k);

using Successor = std::pair<Token, Configuration>;
using SuccessorSet = std::set<Successor>;

// One silent rewriting step of a running pair: the unfoldings, identifier
// extensions, branch splits, bindings, pushes and pops that do not emit a
// symbol. Action statements with no synchronous partners are left alone;
// they are exactly the emission candidates.
std::vector<std::pair<Statement, Resumption>> rewrites(const Statement& x,
                                                       const Resumption& rho,
                                                       const Program& p);

// All labelled transitions of t: rewrite exhaustively, then fire every
// emission candidate whose offered set interacts. Empty means t blocks.
SuccessorSet step(const Configuration& t, const Program& p);

// Budgeted trace semantics. Termination yields the empty trace, blocking
// yields deadlock, an exhausted budget yields a cut, otherwise every
// successor contributes its symbol-prefixed traces. The budget counts
// emitted symbols only.
TraceSet runO(const Configuration& t, const Program& p, std::size_t m);

// Traces of a statement from the initial resumption.
TraceSet denO(const Statement& x, const Program& p, std::size_t m);

}  // namespace ccsn
