#pragma once

// The bridge between the two semantics: lifting resumptions to denotable
// continuations, the trace-abstraction equality check, the transformer
// invariance squares, and bounded context-discrimination search.

#include <cstddef>
#include <optional>
#include <vector>

#include "ccsn/denotational.hpp"
#include "ccsn/operational.hpp"
#include "ccsn/syntax.hpp"
#include "ccsn/traces.hpp"

namespace ccsn {

// Resumption image under the semantic lift: statements become their
// denotations, terminated slots become the empty denotation, positions and
// offered interactions carry over verbatim. Throws IllFormedResumptionError
// unless rho is well formed.
Continuation liftResumption(const Resumption& rho, int nbar);

struct XiVerdict {
  bool equal = false;
  TraceSet opImage;              // abstracted operational set, truncated
  TraceSet denImage;             // denotational set, truncated
  std::optional<Trace> witness;  // an element of the symmetric difference
};

// Compares the tau-padded operational traces with the denotational traces
// at budget m, after truncating both sides to m symbols.
XiVerdict checkXi(const Statement& x, const Program& p, std::size_t m);

// The commuting squares transformer∘lift = lift∘rule, one per continuation
// transformer, with x as the added statement; restriction is checked for
// every program channel, the synchronous push only where its guard holds.
bool checkInvariance(const Resumption& rho, const Statement& x,
                     const Program& p);

struct ContextVocab {
  std::vector<Action> actions;        // leaf actions
  std::vector<ChannelName> channels;  // restriction names
};

// Enumerates syntactic contexts with at least one hole, layered by exact
// tree depth, deterministic within a layer. Hole-free terms are generated
// internally as building material but never emitted.
class ContextStream {
 public:
  ContextStream(int maxDepth, ContextVocab vocab);

  std::optional<Statement> next();

 private:
  std::optional<Statement> produce();

  int maxDepth_;
  ContextVocab vocab_;
  std::vector<Statement> stored_;
  std::vector<int> depthOf_;
  int layer_ = 0;
  std::size_t cursor_ = 0;     // leaf index, or restriction child index
  std::size_t chanIdx_ = 0;    // restriction channel index
  std::size_t opIdx_ = 0;      // which production within the layer
  std::size_t leftIdx_ = 0;    // binary production left operand
  std::size_t rightIdx_ = 0;   // binary production right operand
  std::size_t layerEnd_ = 0;   // stored_ size when the current layer began
};

// Context vocabulary a program induces: one send leaf per channel, in the
// program's action dialect, plus the channels themselves.
ContextVocab vocabFor(const Program& p);

struct DiscriminationResult {
  std::optional<Statement> context;  // set when a discriminating context exists
  int searchedDepth = 0;
};

// First enumerated context S with different operational trace sets for
// S(x1) and S(x2) at budget m.
DiscriminationResult discriminate(const Statement& x1, const Statement& x2,
                                  const Program& p, int maxDepth,
                                  std::size_t m);

}  // namespace ccsn
