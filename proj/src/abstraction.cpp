#include "ccsn/abstraction.hpp"

#include <algorithm>

#include "ccsn/errors.hpp"

namespace ccsn {

Continuation liftResumption(const Resumption& rho, int nbar) {
  if (!wellFormed(rho, nbar))
    throw IllFormedResumptionError("resumption is not derivable");
  Continuation g;
  g.sync.reserve(rho.sync.size());
  for (const Statement& x : rho.sync) g.sync.push_back(DenTerm::ofStmt(x));
  g.iset = rho.iset;
  g.ids = rho.ids;
  g.kbag = rho.kbag.mapValues([](const RRes& r) {
    return r.isTerminated() ? Denotation::empty()
                            : Denotation::of(DenTerm::ofStmt(*r.pending));
  });
  return g;
}

XiVerdict checkXi(const Statement& x, const Program& p, std::size_t m) {
  XiVerdict v;
  v.opImage =
      truncateSet(xiSet(denO(x, p, m), static_cast<std::size_t>(p.nbar)), m);
  v.denImage = truncateSet(denD(x, p, m), m);
  v.equal = v.opImage == v.denImage;
  if (!v.equal) {
    for (const Trace& q : v.opImage)
      if (!v.denImage.contains(q)) {
        v.witness = q;
        break;
      }
    if (!v.witness)
      for (const Trace& q : v.denImage)
        if (!v.opImage.contains(q)) {
          v.witness = q;
          break;
        }
  }
  return v;
}

bool checkInvariance(const Resumption& rho, const Statement& x,
                     const Program& p) {
  const int nbar = p.nbar;
  const Continuation lifted = liftResumption(rho, nbar);
  const DenTerm d = DenTerm::ofStmt(x);
  const Identifier head = rho.ids.front();

  std::vector<ChannelName> chans(p.channels.begin(), p.channels.end());
  if (chans.empty()) chans.push_back(ChannelName{"c"});
  for (const ChannelName& c : chans) {
    Resumption r2 = rho;
    r2.ids.front() = head.extendRestrict(c);
    if (contTransform(ContTransform::restrictChan(c), lifted, nbar) !=
        liftResumption(r2, nbar))
      return false;
  }
  {
    Resumption r2 = rho;
    r2.ids.front() = head.extendSeqLeft();
    r2.kbag = r2.kbag.bind(head.extendSeqMark(), RRes::of(x));
    if (contTransform(ContTransform::addSeq(d), lifted, nbar) !=
        liftResumption(r2, nbar))
      return false;
  }
  {
    Resumption r2 = rho;
    r2.ids.front() = head.extendParLeft();
    r2.kbag = r2.kbag.bind(head.extendParRight(), RRes::of(x));
    if (contTransform(ContTransform::addLeftMerge(d), lifted, nbar) !=
        liftResumption(r2, nbar))
      return false;
  }
  if (rho.sync.size() + rho.iset.size() < static_cast<std::size_t>(nbar)) {
    Resumption r2 = rho;
    r2.sync.insert(r2.sync.begin(), x);
    r2.ids.front() = head.extendParLeft();
    r2.ids.insert(r2.ids.begin() + 1, head.extendParRight());
    if (contTransform(ContTransform::addLeftSync(d), lifted, nbar) !=
        liftResumption(r2, nbar))
      return false;
  }
  return true;
}

namespace {

Statement makeBinary(StmtNode::Op op, const Statement& l, const Statement& r) {
  switch (op) {
    case StmtNode::Seq:
      return Statement::seq(l, r);
    case StmtNode::Choice:
      return Statement::choice(l, r);
    case StmtNode::Merge:
      return Statement::merge(l, r);
    case StmtNode::SyncMerge:
      return Statement::syncMerge(l, r);
    case StmtNode::LeftMerge:
      return Statement::leftMerge(l, r);
    default:
      return Statement::leftSyncMerge(l, r);
  }
}

constexpr StmtNode::Op kBinaryOps[] = {
    StmtNode::Seq,       StmtNode::Choice,    StmtNode::Merge,
    StmtNode::SyncMerge, StmtNode::LeftMerge, StmtNode::LeftSyncMerge,
};

}  // namespace

ContextStream::ContextStream(int maxDepth, ContextVocab vocab)
    : maxDepth_(maxDepth), vocab_(std::move(vocab)) {}

std::optional<Statement> ContextStream::produce() {
  auto startNextLayer = [this] {
    layer_ += 1;
    layerEnd_ = stored_.size();
    cursor_ = 0;
    chanIdx_ = 0;
    opIdx_ = 0;
    leftIdx_ = 0;
    rightIdx_ = 0;
  };

  while (layer_ <= maxDepth_) {
    if (layer_ == 0) {
      if (cursor_ == 0) {
        ++cursor_;
        return Statement::hole();
      }
      if (cursor_ - 1 < vocab_.actions.size()) {
        ++cursor_;
        return Statement::act(vocab_.actions[cursor_ - 2]);
      }
      startNextLayer();
      continue;
    }
    if (opIdx_ == 0) {
      // restriction over last-layer children
      while (cursor_ < layerEnd_ &&
             (vocab_.channels.empty() || depthOf_[cursor_] != layer_ - 1))
        ++cursor_;
      if (cursor_ < layerEnd_) {
        Statement out =
            Statement::restricted(stored_[cursor_], vocab_.channels[chanIdx_]);
        if (++chanIdx_ >= vocab_.channels.size()) {
          chanIdx_ = 0;
          ++cursor_;
        }
        return out;
      }
      opIdx_ = 1;
      continue;
    }
    if (opIdx_ <= std::size(kBinaryOps)) {
      while (leftIdx_ < layerEnd_) {
        while (rightIdx_ < layerEnd_) {
          const std::size_t l = leftIdx_;
          const std::size_t r = rightIdx_++;
          if (std::max(depthOf_[l], depthOf_[r]) != layer_ - 1) continue;
          return makeBinary(kBinaryOps[opIdx_ - 1], stored_[l], stored_[r]);
        }
        rightIdx_ = 0;
        ++leftIdx_;
      }
      ++opIdx_;
      leftIdx_ = 0;
      rightIdx_ = 0;
      continue;
    }
    startNextLayer();
  }
  return std::nullopt;
}

std::optional<Statement> ContextStream::next() {
  while (auto s = produce()) {
    if (layer_ < maxDepth_) {
      stored_.push_back(*s);
      depthOf_.push_back(layer_);
    }
    if (containsHole(*s)) return s;
  }
  return std::nullopt;
}

ContextVocab vocabFor(const Program& p) {
  ContextVocab v;
  for (const ChannelName& c : p.channels) {
    if (p.calculus == Calculus::CCSN) {
      v.actions.push_back(Action::output(c));
    } else {
      v.actions.push_back(
          Action::jointPrefix({SyncAction{SyncAction::Out, c}}));
    }
    v.channels.push_back(c);
  }
  return v;
}

DiscriminationResult discriminate(const Statement& x1, const Statement& x2,
                                  const Program& p, int maxDepth,
                                  std::size_t m) {
  DiscriminationResult res;
  res.searchedDepth = maxDepth;
  ContextStream stream(maxDepth, vocabFor(p));
  while (auto s = stream.next()) {
    if (denO(fillContext(*s, x1), p, m) != denO(fillContext(*s, x2), p, m)) {
      res.context = *s;
      return res;
    }
  }
  return res;
}

}  // namespace ccsn
