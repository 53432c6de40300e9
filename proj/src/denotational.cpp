#include "ccsn/denotational.hpp"

#include <atomic>

#include "ccsn/errors.hpp"

namespace ccsn {

DenTerm DenTerm::ofStmt(Statement x) {
  return DenTerm(std::make_shared<const DenNode>(
      DenNode{DenNode::OfStmt, std::move(x), {}, {}}));
}
DenTerm DenTerm::restrictT(DenTerm d, ChannelName c) {
  return DenTerm(std::make_shared<const DenNode>(
      DenNode{DenNode::RestrictT, {}, std::move(c), {std::move(d)}}));
}
DenTerm DenTerm::seqT(DenTerm d1, DenTerm d2) {
  return DenTerm(std::make_shared<const DenNode>(
      DenNode{DenNode::SeqT, {}, {}, {std::move(d1), std::move(d2)}}));
}
DenTerm DenTerm::choiceT(DenTerm d1, DenTerm d2) {
  return DenTerm(std::make_shared<const DenNode>(
      DenNode{DenNode::ChoiceT, {}, {}, {std::move(d1), std::move(d2)}}));
}
DenTerm DenTerm::mergeT(DenTerm d1, DenTerm d2) {
  return DenTerm(std::make_shared<const DenNode>(
      DenNode{DenNode::MergeT, {}, {}, {std::move(d1), std::move(d2)}}));
}
DenTerm DenTerm::syncMergeT(DenTerm d1, DenTerm d2) {
  return DenTerm(std::make_shared<const DenNode>(
      DenNode{DenNode::SyncMergeT, {}, {}, {std::move(d1), std::move(d2)}}));
}
DenTerm DenTerm::leftMergeT(DenTerm d1, DenTerm d2) {
  return DenTerm(std::make_shared<const DenNode>(
      DenNode{DenNode::LeftMergeT, {}, {}, {std::move(d1), std::move(d2)}}));
}
DenTerm DenTerm::leftSyncMergeT(DenTerm d1, DenTerm d2) {
  return DenTerm(std::make_shared<const DenNode>(
      DenNode{DenNode::LeftSyncMergeT, {}, {}, {std::move(d1), std::move(d2)}}));
}

bool operator==(const DenTerm& a, const DenTerm& b) {
  return (a <=> b) == 0;
}

std::strong_ordering operator<=>(const DenTerm& a, const DenTerm& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (!a.node_ || !b.node_)
    return (a.node_ != nullptr) <=> (b.node_ != nullptr);
  if (auto c = a.node_->op <=> b.node_->op; c != 0) return c;
  switch (a.node_->op) {
    case DenNode::OfStmt:
      return a.node_->stmt <=> b.node_->stmt;
    case DenNode::RestrictT:
      if (auto c = a.node_->chan <=> b.node_->chan; c != 0) return c;
      return a.child(0) <=> b.child(0);
    default:
      if (auto c = a.child(0) <=> b.child(0); c != 0) return c;
      return a.child(1) <=> b.child(1);
  }
}

Continuation gamma0() {
  Continuation g;
  g.ids.push_back(Identifier::hole());
  return g;
}

std::size_t cardU(const Continuation& g) { return g.iset.size(); }

bool cardGamma(const Continuation& g, int nbar) {
  return g.sync.size() + g.iset.size() < static_cast<std::size_t>(nbar);
}

Continuation contTransform(const ContTransform& t, const Continuation& g,
                           int nbar) {
  Continuation out = g;
  const Identifier head = g.ids.front();
  switch (t.kind) {
    case ContTransform::Restrict:
      out.ids.front() = head.extendRestrict(t.chan);
      return out;
    case ContTransform::AddSeq:
      out.ids.front() = head.extendSeqLeft();
      out.kbag = out.kbag.bind(head.extendSeqMark(), Denotation::of(t.den));
      return out;
    case ContTransform::AddLeftMerge:
      out.ids.front() = head.extendParLeft();
      out.kbag = out.kbag.bind(head.extendParRight(), Denotation::of(t.den));
      return out;
    case ContTransform::AddLeftSync:
      if (!cardGamma(g, nbar))
        throw GuardViolationError("no synchronous capacity left");
      out.sync.insert(out.sync.begin(), t.den);
      out.ids.front() = head.extendParLeft();
      out.ids.insert(out.ids.begin() + 1, head.extendParRight());
      return out;
  }
  return out;
}

namespace {

Denotation hatRestrict(const Denotation& d, const ChannelName& c) {
  if (d.isEmpty()) return d;
  return Denotation::of(DenTerm::restrictT(*d.term, c));
}

Denotation hatSeq(const Denotation& d1, const Denotation& d2) {
  if (d1.isEmpty()) return d2;
  if (d2.isEmpty()) return d1;
  return Denotation::of(DenTerm::seqT(*d1.term, *d2.term));
}

Denotation hatMerge(const Denotation& d1, const Denotation& d2) {
  if (d1.isEmpty()) return d2;
  if (d2.isEmpty()) return d1;
  return Denotation::of(DenTerm::mergeT(*d1.term, *d2.term));
}

}  // namespace

Denotation collapseKD(const Identifier& a, const Bag<Denotation>& k) {
  IdSet below = filterBelow(k.domain(), a);
  if (below.empty()) return Denotation::empty();
  if (below.size() == 1 && *below.begin() == a) return k.lookup(a);
  std::set<ChannelName> names = restrictedNamesBelow(below, a);
  if (names.size() > 1)
    throw AmbiguousRestrictionError("multiple restrictions directly below " +
                                    a.toString());
  if (names.size() == 1) {
    const ChannelName& c = *names.begin();
    return hatRestrict(collapseKD(a.extendRestrict(c), k), c);
  }
  Identifier mark = a.extendSeqMark();
  if (k.domain().contains(mark))
    return hatSeq(collapseKD(a.extendSeqLeft(), k), k.lookup(mark));
  return hatMerge(collapseKD(a.extendParLeft(), k),
                  collapseKD(a.extendParRight(), k));
}

namespace {

std::atomic<std::size_t> g_defensiveHits{0};

// Emit the symbols in full when the budget allows, else cut where it ends.
Trace cappedTrace(std::vector<Token> symbols, std::size_t m) {
  if (symbols.size() <= m) return {std::move(symbols), Terminator::Eps};
  symbols.resize(m);
  return {std::move(symbols), Terminator::Cut};
}

TraceSet prefixTokens(const std::vector<Token>& pre, const TraceSet& p) {
  TraceSet out;
  for (const Trace& q : p) {
    Trace t;
    t.symbols.reserve(pre.size() + q.symbols.size());
    t.symbols = pre;
    t.symbols.insert(t.symbols.end(), q.symbols.begin(), q.symbols.end());
    t.end = q.end;
    out.insert(std::move(t));
  }
  return out;
}

}  // namespace

std::size_t opaDefensiveHits() {
  return g_defensiveHits.load(std::memory_order_relaxed);
}

void resetOpaDefensiveHits() {
  g_defensiveHits.store(0, std::memory_order_relaxed);
}

TraceSet opA(const Action& a, const Continuation& g, const Program& p,
             std::size_t m) {
  const std::size_t nbar = static_cast<std::size_t>(p.nbar);
  const std::size_t used = g.iset.size();
  const std::size_t w = used >= nbar ? 0 : nbar - used;

  if (!g.sync.empty()) {
    if (used <= nbar) {
      if (m == 0) return {cutTrace()};
      Continuation next;
      next.sync.assign(g.sync.begin() + 1, g.sync.end());
      next.iset = g.iset;
      next.iset.insert({a, g.ids.front()});
      next.ids.assign(g.ids.begin() + 1, g.ids.end());
      next.kbag = g.kbag;
      return prefixAction(tauToken(),
                          evalDen(g.sync.front(), next, p, m - 1));
    }
    // Unreachable while the capacity invariant holds; counted, not fatal.
    g_defensiveHits.fetch_add(1, std::memory_order_relaxed);
    return {cappedTrace(std::vector<Token>(w, tauToken()), m)};
  }

  InteractionSet u = g.iset;
  u.insert({a, g.ids.front()});
  if (InteractionResult b = interact(u, p)) {
    std::vector<Token> pre(w, tauToken());
    pre.push_back(*b);
    Denotation rest = collapseKD(Identifier::hole(), g.kbag);
    if (rest.isEmpty() || m < pre.size())
      return {cappedTrace(std::move(pre), m)};
    return prefixTokens(pre, evalDen(*rest.term, gamma0(), p, m - pre.size()));
  }
  return {cappedTrace(std::vector<Token>(w, tauToken()), m)};
}

TraceSet evalDen(const DenTerm& d, const Continuation& g, const Program& p,
                 std::size_t m) {
  const std::size_t nbar = static_cast<std::size_t>(p.nbar);
  switch (d.op()) {
    case DenNode::OfStmt: {
      const Statement& x = d.stmt();
      switch (x.op()) {
        case StmtNode::Act:
          return opA(x.action(), g, p, m);
        case StmtNode::Var: {
          auto it = p.decls.find(x.varName());
          if (it == p.decls.end()) throw UnboundVariableError(x.varName());
          return evalDen(DenTerm::ofStmt(it->second), g, p, m);
        }
        case StmtNode::Hole:
          // A bare hole cannot act; it behaves like the inert action.
          return opA(Action::stop(), g, p, m);
        case StmtNode::Restrict:
          return evalDen(
              DenTerm::restrictT(DenTerm::ofStmt(x.child(0)), x.channel()), g,
              p, m);
        case StmtNode::Seq:
          return evalDen(DenTerm::seqT(DenTerm::ofStmt(x.child(0)),
                                       DenTerm::ofStmt(x.child(1))),
                         g, p, m);
        case StmtNode::Choice:
          return evalDen(DenTerm::choiceT(DenTerm::ofStmt(x.child(0)),
                                          DenTerm::ofStmt(x.child(1))),
                         g, p, m);
        case StmtNode::Merge:
          return evalDen(DenTerm::mergeT(DenTerm::ofStmt(x.child(0)),
                                         DenTerm::ofStmt(x.child(1))),
                         g, p, m);
        case StmtNode::SyncMerge:
          return evalDen(DenTerm::syncMergeT(DenTerm::ofStmt(x.child(0)),
                                             DenTerm::ofStmt(x.child(1))),
                         g, p, m);
        case StmtNode::LeftMerge:
          return evalDen(DenTerm::leftMergeT(DenTerm::ofStmt(x.child(0)),
                                             DenTerm::ofStmt(x.child(1))),
                         g, p, m);
        case StmtNode::LeftSyncMerge:
          return evalDen(DenTerm::leftSyncMergeT(DenTerm::ofStmt(x.child(0)),
                                                 DenTerm::ofStmt(x.child(1))),
                         g, p, m);
      }
      return {};
    }
    case DenNode::RestrictT:
      return evalDen(
          d.child(0),
          contTransform(ContTransform::restrictChan(d.channel()), g, p.nbar),
          p, m);
    case DenNode::SeqT:
      return evalDen(d.child(0),
                     contTransform(ContTransform::addSeq(d.child(1)), g,
                                   p.nbar),
                     p, m);
    case DenNode::LeftMergeT:
      return evalDen(d.child(0),
                     contTransform(ContTransform::addLeftMerge(d.child(1)), g,
                                   p.nbar),
                     p, m);
    case DenNode::LeftSyncMergeT: {
      if (cardGamma(g, p.nbar))
        return evalDen(d.child(0),
                       contTransform(ContTransform::addLeftSync(d.child(1)),
                                     g, p.nbar),
                       p, m);
      const std::size_t used = g.iset.size();
      const std::size_t w = used >= nbar ? 0 : nbar - used;
      return {cappedTrace(std::vector<Token>(w, tauToken()), m)};
    }
    case DenNode::ChoiceT:
      return choiceMerge(cardU(g), evalDen(d.child(0), g, p, m),
                         evalDen(d.child(1), g, p, m), nbar);
    case DenNode::SyncMergeT:
      return evalDen(
          DenTerm::choiceT(DenTerm::leftSyncMergeT(d.child(0), d.child(1)),
                           DenTerm::leftSyncMergeT(d.child(1), d.child(0))),
          g, p, m);
    case DenNode::MergeT: {
      const std::size_t level = cardU(g);
      TraceSet lm1 =
          evalDen(DenTerm::leftMergeT(d.child(0), d.child(1)), g, p, m);
      TraceSet lm2 =
          evalDen(DenTerm::leftMergeT(d.child(1), d.child(0)), g, p, m);
      TraceSet ls1 =
          evalDen(DenTerm::leftSyncMergeT(d.child(0), d.child(1)), g, p, m);
      TraceSet ls2 =
          evalDen(DenTerm::leftSyncMergeT(d.child(1), d.child(0)), g, p, m);
      return choiceMerge(level, choiceMerge(level, lm1, lm2, nbar),
                         choiceMerge(level, ls1, ls2, nbar), nbar);
    }
  }
  return {};
}

TraceSet denD(const Statement& x, const Program& p, std::size_t m) {
  weight(x, p);
  return evalDen(DenTerm::ofStmt(x), gamma0(), p, m);
}

}  // namespace ccsn
