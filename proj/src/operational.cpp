#include "ccsn/operational.hpp"

#include <map>
#include <stdexcept>
#include <tuple>

#include "ccsn/errors.hpp"

namespace ccsn {

Resumption initialResumption() {
  Resumption rho;
  rho.ids.push_back(Identifier::hole());
  return rho;
}

std::pair<std::size_t, std::size_t> measure(const Resumption& rho) {
  std::size_t sizes = 0;
  for (const auto& a : rho.ids) sizes += a.size();
  return {rho.iset.size(), sizes};
}

namespace {

RRes liftRestrict(const RRes& r, const ChannelName& c) {
  if (r.isTerminated()) return r;
  return RRes::of(Statement::restricted(*r.pending, c));
}

RRes liftSeq(const RRes& r1, const RRes& r2) {
  if (r1.isTerminated()) return r2;
  if (r2.isTerminated()) return r1;
  return RRes::of(Statement::seq(*r1.pending, *r2.pending));
}

RRes liftMerge(const RRes& r1, const RRes& r2) {
  if (r1.isTerminated()) return r2;
  if (r2.isTerminated()) return r1;
  return RRes::of(Statement::merge(*r1.pending, *r2.pending));
}

}  // namespace

RRes collapseK(const Identifier& a, const Bag<RRes>& k) {
  IdSet below = filterBelow(k.domain(), a);
  if (below.empty()) return RRes::terminated();
  if (below.size() == 1 && *below.begin() == a) return k.lookup(a);
  std::set<ChannelName> names = restrictedNamesBelow(below, a);
  if (names.size() > 1)
    throw AmbiguousRestrictionError("multiple restrictions directly below " +
                                    a.toString());
  if (names.size() == 1) {
    const ChannelName& c = *names.begin();
    return liftRestrict(collapseK(a.extendRestrict(c), k), c);
  }
  Identifier mark = a.extendSeqMark();
  if (k.domain().contains(mark))
    return liftSeq(collapseK(a.extendSeqLeft(), k), k.lookup(mark));
  return liftMerge(collapseK(a.extendParLeft(), k),
                   collapseK(a.extendParRight(), k));
}

std::vector<std::pair<Statement, Resumption>> rewrites(const Statement& x,
                                                       const Resumption& rho,
                                                       const Program& p) {
  std::vector<std::pair<Statement, Resumption>> out;
  if (rho.ids.empty()) return out;
  const Identifier head = rho.ids.front();
  const std::size_t nbar = static_cast<std::size_t>(p.nbar);

  auto bindRight = [&](const Statement& x1, const Statement& x2) {
    Resumption r = rho;
    r.ids.front() = head.extendParLeft();
    r.kbag = r.kbag.bind(head.extendParRight(), RRes::of(x2));
    out.emplace_back(x1, std::move(r));
  };
  auto pushRight = [&](const Statement& x1, const Statement& x2) {
    if (rho.sync.size() + rho.iset.size() >= nbar) return;
    Resumption r = rho;
    r.sync.insert(r.sync.begin(), x2);
    r.ids.front() = head.extendParLeft();
    r.ids.insert(r.ids.begin() + 1, head.extendParRight());
    out.emplace_back(x1, std::move(r));
  };

  switch (x.op()) {
    case StmtNode::Act: {
      if (rho.sync.empty()) break;  // emission candidate, no silent move
      if (rho.iset.size() > nbar) break;
      Resumption r = rho;
      Statement next = r.sync.front();
      r.sync.erase(r.sync.begin());
      r.iset.insert({x.action(), head});
      r.ids.erase(r.ids.begin());
      out.emplace_back(std::move(next), std::move(r));
      break;
    }
    case StmtNode::Var: {
      auto it = p.decls.find(x.varName());
      if (it == p.decls.end()) throw UnboundVariableError(x.varName());
      out.emplace_back(it->second, rho);
      break;
    }
    case StmtNode::Hole:
      break;
    case StmtNode::Restrict: {
      Resumption r = rho;
      r.ids.front() = head.extendRestrict(x.channel());
      out.emplace_back(x.child(0), std::move(r));
      break;
    }
    case StmtNode::Seq: {
      Resumption r = rho;
      r.ids.front() = head.extendSeqLeft();
      r.kbag = r.kbag.bind(head.extendSeqMark(), RRes::of(x.child(1)));
      out.emplace_back(x.child(0), std::move(r));
      break;
    }
    case StmtNode::Choice:
      out.emplace_back(x.child(0), rho);
      out.emplace_back(x.child(1), rho);
      break;
    case StmtNode::Merge:
      bindRight(x.child(0), x.child(1));
      bindRight(x.child(1), x.child(0));
      pushRight(x.child(0), x.child(1));
      pushRight(x.child(1), x.child(0));
      break;
    case StmtNode::SyncMerge:
      pushRight(x.child(0), x.child(1));
      pushRight(x.child(1), x.child(0));
      break;
    case StmtNode::LeftMerge:
      bindRight(x.child(0), x.child(1));
      break;
    case StmtNode::LeftSyncMerge:
      pushRight(x.child(0), x.child(1));
      break;
  }
  return out;
}

SuccessorSet step(const Configuration& t, const Program& p) {
  SuccessorSet out;
  Statement x0;
  Resumption r0;
  if (t.kind == Configuration::Final) {
    if (t.outcome.isTerminated()) return out;
    x0 = *t.outcome.pending;
    r0 = initialResumption();
  } else {
    x0 = t.stmt;
    r0 = t.rho;
  }

  // Every silent rewrite either lowers the running statement's weight or
  // pops a synchronous partner, and pops are capped by the interaction
  // bound, so chains are short; a blown bound means a rule regression.
  const std::size_t depthBound =
      static_cast<std::size_t>(p.nbar + 2) *
          static_cast<std::size_t>(weight(x0, p) + 2) +
      8;

  std::set<std::pair<Statement, Resumption>> seen;
  std::vector<std::tuple<Statement, Resumption, std::size_t>> work;
  seen.insert({x0, r0});
  work.emplace_back(std::move(x0), std::move(r0), 0);

  while (!work.empty()) {
    auto [x, rho, depth] = std::move(work.back());
    work.pop_back();
    if (depth > depthBound)
      throw std::logic_error("silent rewriting exceeded its weight bound");

    if (x.op() == StmtNode::Act && rho.sync.empty()) {
      if (rho.iset.size() <= static_cast<std::size_t>(p.nbar)) {
        InteractionSet u = rho.iset;
        u.insert({x.action(), rho.ids.front()});
        if (InteractionResult b = interact(u, p))
          out.insert({*b, Configuration::finalOf(
                              collapseK(Identifier::hole(), rho.kbag))});
      }
      continue;
    }
    for (auto& [x2, rho2] : rewrites(x, rho, p)) {
      if (seen.insert({x2, rho2}).second)
        work.emplace_back(std::move(x2), std::move(rho2), depth + 1);
    }
  }
  return out;
}

namespace {

// Resumption membership does not depend on the stored statements, only on
// the synchronous arity, the offered interactions, the positions and the
// bound keys; the search works on that quotient.
struct SearchState {
  std::size_t syncLen = 0;
  InteractionSet iset;
  std::vector<Identifier> ids;
  IdSet keys;

  friend auto operator<=>(const SearchState&, const SearchState&) = default;
};

bool derivable(const SearchState& s, std::size_t nbar,
               std::map<SearchState, bool>& memo) {
  if (auto it = memo.find(s); it != memo.end()) return it->second;
  bool ok = s.syncLen == 0 && s.iset.empty() && s.keys.empty() &&
            s.ids.size() == 1 && s.ids.front() == Identifier::hole();

  if (!ok) {
    if (auto wrap = s.ids.front().innermost()) {
      Identifier par = s.ids.front().parent();
      switch (wrap->kind) {
        case IdWrap::Restrict: {
          SearchState t = s;
          t.ids.front() = par;
          ok = derivable(t, nbar, memo);
          break;
        }
        case IdWrap::SeqLeft: {
          Identifier key = par.extendSeqMark();
          if (s.keys.contains(key)) {
            SearchState t = s;
            t.ids.front() = par;
            t.keys.erase(key);
            ok = derivable(t, nbar, memo);
          }
          break;
        }
        case IdWrap::ParLeft: {
          Identifier right = par.extendParRight();
          if (s.keys.contains(right)) {
            SearchState t = s;
            t.ids.front() = par;
            t.keys.erase(right);
            ok = derivable(t, nbar, memo);
          }
          if (!ok && s.syncLen >= 1 && s.ids.size() >= 2 &&
              s.ids[1] == right &&
              (s.syncLen - 1) + s.iset.size() < nbar) {
            SearchState t = s;
            t.syncLen -= 1;
            t.ids.erase(t.ids.begin(), t.ids.begin() + 2);
            t.ids.insert(t.ids.begin(), par);
            ok = derivable(t, nbar, memo);
          }
          break;
        }
        case IdWrap::ParRight:
          break;
      }
    }
  }

  if (!ok && !s.iset.empty() && s.iset.size() <= nbar + 1 &&
      s.syncLen + 1 <= nbar) {
    for (const auto& offered : s.iset) {
      if (offered.second.leaf() != IdLeaf::Hole) continue;
      SearchState t = s;
      t.syncLen += 1;
      t.iset.erase(offered);
      t.ids.insert(t.ids.begin(), offered.second);
      if (derivable(t, nbar, memo)) {
        ok = true;
        break;
      }
    }
  }

  memo.emplace(s, ok);
  return ok;
}

}  // namespace

bool wellFormed(const Resumption& rho, int nbar) {
  if (nbar < 1) return false;
  const std::size_t n = static_cast<std::size_t>(nbar);
  if (rho.ids.size() != rho.sync.size() + 1) return false;
  if (rho.sync.size() + rho.iset.size() > n) return false;
  for (const auto& a : rho.ids)
    if (a.leaf() != IdLeaf::Hole) return false;

  if (!rho.kbag.defaultValue().isTerminated()) return false;
  IdSet keys;
  for (const auto& [key, value] : rho.kbag.table()) {
    if (value.isTerminated()) return false;
    keys.insert(key);
  }
  if (keys != rho.kbag.domain()) return false;

  SearchState s{rho.sync.size(), rho.iset, rho.ids, std::move(keys)};
  std::map<SearchState, bool> memo;
  return derivable(s, n, memo);
}

namespace {

TraceSet runOImpl(const Configuration& t, const Program& p, std::size_t m,
                  std::map<std::pair<Configuration, std::size_t>, TraceSet>& memo) {
  if (t.kind == Configuration::Final && t.outcome.isTerminated())
    return {epsTrace()};
  auto key = std::make_pair(t, m);
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  SuccessorSet succ = step(t, p);
  TraceSet out;
  if (succ.empty()) {
    out.insert(deltaTrace());
  } else if (m == 0) {
    out.insert(cutTrace());
  } else {
    for (const auto& [b, next] : succ) {
      TraceSet sub = prefixAction(b, runOImpl(next, p, m - 1, memo));
      out.insert(sub.begin(), sub.end());
    }
  }
  memo.emplace(std::move(key), out);
  return out;
}

}  // namespace

TraceSet runO(const Configuration& t, const Program& p, std::size_t m) {
  std::map<std::pair<Configuration, std::size_t>, TraceSet> memo;
  return runOImpl(t, p, m, memo);
}

TraceSet denO(const Statement& x, const Program& p, std::size_t m) {
  return runO(Configuration::running(x, initialResumption()), p, m);
}

}  // namespace ccsn
