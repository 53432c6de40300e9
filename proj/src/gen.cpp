#include "ccsn/gen.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>
#include <utility>

namespace ccsn {

namespace {

std::size_t pick(Rng& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

const std::vector<ChannelName>& channelPool() {
  static const std::vector<ChannelName> pool{
      ChannelName{"c1"}, ChannelName{"c2"}, ChannelName{"c3"}};
  return pool;
}

}  // namespace

Identifier randomIdentifier(Rng& rng, int maxDepth) {
  Identifier id = coin(rng, 0.25) ? Identifier::seqMark() : Identifier::hole();
  const std::size_t wrappers = pick(rng, static_cast<std::size_t>(maxDepth) + 1);
  for (std::size_t i = 0; i < wrappers; ++i) {
    switch (pick(rng, 4)) {
      case 0:
        id = id.extendSeqLeft();
        break;
      case 1:
        id = id.extendRestrict(channelPool()[pick(rng, channelPool().size())]);
        break;
      case 2:
        id = id.extendParLeft();
        break;
      default:
        id = id.extendParRight();
        break;
    }
  }
  return id;
}

Trace randomTrace(Rng& rng, std::size_t maxLen, bool allowCut) {
  static const std::vector<Token> pool{tauToken(), Token{"b1"}, Token{"b2"}};
  Trace t;
  const std::size_t len = pick(rng, maxLen + 1);
  while (t.symbols.size() < len && coin(rng)) t.symbols.push_back(tauToken());
  while (t.symbols.size() < len) t.symbols.push_back(pool[pick(rng, pool.size())]);
  if (allowCut && coin(rng, 0.2))
    t.end = Terminator::Cut;
  else
    t.end = coin(rng) ? Terminator::Eps : Terminator::Delta;
  return t;
}

TraceSet randomTraceSet(Rng& rng, std::size_t maxSize, std::size_t maxLen,
                        bool allowCut) {
  TraceSet out;
  const std::size_t size = pick(rng, maxSize + 1);
  for (std::size_t i = 0; i < size; ++i) out.insert(randomTrace(rng, maxLen, allowCut));
  return out;
}

namespace {

Action randomAction(Rng& rng, Calculus calc, const std::vector<ChannelName>& chans,
                    int nbar) {
  static const std::vector<Token> tokens{tauToken(), Token{"b1"}, Token{"b2"},
                                         Token{"b3"}};
  if (coin(rng, 0.08)) return Action::stop();
  if (chans.empty() || coin(rng, 0.4))
    return Action::internal(tokens[pick(rng, tokens.size())]);
  if (calc == Calculus::CCSN) {
    if (coin(rng)) return Action::output(chans[pick(rng, chans.size())]);
    const std::size_t arity = 1 + pick(rng, static_cast<std::size_t>(nbar));
    std::vector<ChannelName> cs;
    for (std::size_t i = 0; i < arity; ++i)
      cs.push_back(chans[pick(rng, chans.size())]);
    std::sort(cs.begin(), cs.end());
    return Action::jointInput(std::move(cs));
  }
  const std::size_t arity = 1 + pick(rng, static_cast<std::size_t>(nbar));
  std::vector<SyncAction> items;
  for (std::size_t i = 0; i < arity; ++i)
    items.push_back(SyncAction{coin(rng) ? SyncAction::In : SyncAction::Out,
                               chans[pick(rng, chans.size())]});
  return Action::jointPrefix(std::move(items));
}

// References a cycle can reach multiply interleavings without bound when
// they sit under a parallel operator, so those positions only draw from the
// variables with finite expansions.
struct VarPools {
  std::vector<std::string> any;
  std::vector<std::string> finite;
};

Statement randomStmt(Rng& rng, Calculus calc, const std::vector<ChannelName>& chans,
                     const VarPools& vars, int depth, int nbar, bool underPar) {
  const std::size_t roll = depth <= 0 ? 0 : pick(rng, 100);
  if (depth <= 0 || roll < 30) {
    const auto& pool = underPar ? vars.finite : vars.any;
    if (!pool.empty() && coin(rng, 0.2))
      return Statement::var(pool[pick(rng, pool.size())]);
    return Statement::act(randomAction(rng, calc, chans, nbar));
  }
  auto sub = [&](bool par) {
    return randomStmt(rng, calc, chans, vars, depth - 1, nbar, underPar || par);
  };
  if (roll < 42 && !chans.empty())
    return Statement::restricted(sub(false), chans[pick(rng, chans.size())]);
  if (roll < 58) return Statement::seq(sub(false), sub(false));
  if (roll < 70) return Statement::choice(sub(false), sub(false));
  if (roll < 82) return Statement::merge(sub(true), sub(true));
  if (roll < 88) return Statement::syncMerge(sub(true), sub(true));
  if (roll < 94) return Statement::leftMerge(sub(false), sub(false));
  return Statement::leftSyncMerge(sub(false), sub(false));
}

// Self-recursion is only ever a guarded sequential tail: a short action
// chain looping back to the declaration. Each unfolding then contributes one
// deterministic segment instead of a fresh parallel component.
Statement loopBody(Rng& rng, Calculus calc, const std::vector<ChannelName>& chans,
                   const std::string& self, int nbar) {
  Statement body = Statement::var(self);
  const std::size_t len = 1 + pick(rng, 3);
  for (std::size_t i = 0; i < len; ++i)
    body = Statement::seq(Statement::act(randomAction(rng, calc, chans, nbar)), body);
  return body;
}

bool usesOnly(const Statement& s, const std::set<std::string>& allowed) {
  if (s.op() == StmtNode::Var) return allowed.count(s.varName()) > 0;
  for (std::size_t i = 0; i < s.arity(); ++i)
    if (!usesOnly(s.child(i), allowed)) return false;
  return true;
}

}  // namespace

Program randomProgram(Rng& rng, Calculus calc, const GenOptions& opts) {
  Program p;
  p.calculus = calc;
  p.nbar = opts.nbar;
  const std::size_t nchan = 1 + pick(rng, static_cast<std::size_t>(opts.maxChannels));
  std::vector<ChannelName> chans;
  for (std::size_t i = 0; i < nchan; ++i) {
    ChannelName c{"c" + std::to_string(i + 1)};
    p.channels.insert(c);
    chans.push_back(c);
  }
  VarPools pools;
  std::set<std::string> finiteSet;
  const std::size_t ndecl = pick(rng, static_cast<std::size_t>(opts.maxDecls) + 1);
  for (std::size_t i = 0; i < ndecl; ++i) {
    const std::string y = "y" + std::to_string(i + 1);
    Statement body;
    bool finite = false;
    if (coin(rng, 0.35)) {
      body = loopBody(rng, calc, chans, y, opts.nbar);
    } else {
      body = randomStmt(rng, calc, chans, pools, opts.maxDepth - 1, opts.nbar, false);
      for (int attempt = 0; attempt < 32 && !isGuarded(body); ++attempt)
        body = randomStmt(rng, calc, chans, pools, opts.maxDepth - 1, opts.nbar, false);
      if (!isGuarded(body))
        body = Statement::seq(
            Statement::act(randomAction(rng, calc, chans, opts.nbar)), body);
      finite = usesOnly(body, finiteSet);
    }
    p.decls.emplace(y, body);
    pools.any.push_back(y);
    if (finite) {
      pools.finite.push_back(y);
      finiteSet.insert(y);
    }
  }
  p.main = randomStmt(rng, calc, chans, pools, opts.maxDepth, opts.nbar, false);
  validateStatement(p.main, p);
  for (const auto& [y, body] : p.decls) validateStatement(body, p);
  return p;
}

InteractionSet randomInteractionSet(Rng& rng, std::size_t maxSize,
                                    std::size_t maxJoint) {
  auto randomParId = [&rng] {
    Identifier id = Identifier::hole();
    const std::size_t depth = 1 + pick(rng, 3);
    for (std::size_t i = 0; i < depth; ++i)
      id = coin(rng) ? id.extendParLeft() : id.extendParRight();
    return id;
  };
  InteractionSet u;
  const std::size_t count = 2 + pick(rng, maxSize - 1);
  if (coin(rng)) {
    // balanced draw: one send per receive, dealt round robin, so roughly
    // half the generated sets admit a full matching
    const std::size_t pairs = 1 + pick(rng, maxJoint);
    std::vector<SyncAction> items;
    for (std::size_t i = 0; i < pairs; ++i) {
      const ChannelName c = channelPool()[pick(rng, channelPool().size())];
      items.push_back(SyncAction{SyncAction::In, c});
      items.push_back(SyncAction{SyncAction::Out, c});
    }
    std::shuffle(items.begin(), items.end(), rng);
    std::vector<std::vector<SyncAction>> hands(count);
    for (std::size_t i = 0; i < items.size(); ++i) hands[i % count].push_back(items[i]);
    for (auto& hand : hands) {
      if (hand.empty()) continue;
      u.emplace(Action::jointPrefix(std::move(hand)), randomParId());
    }
  } else {
    for (std::size_t i = 0; i < count; ++i) {
      const std::size_t arity = 1 + pick(rng, maxJoint);
      std::vector<SyncAction> items;
      for (std::size_t j = 0; j < arity; ++j)
        items.push_back(SyncAction{coin(rng) ? SyncAction::In : SyncAction::Out,
                                   channelPool()[pick(rng, channelPool().size())]});
      Identifier id = randomParId();
      if (coin(rng, 0.25))
        id = id.extendRestrict(channelPool()[pick(rng, channelPool().size())]);
      u.emplace(Action::jointPrefix(std::move(items)), id);
    }
  }
  return u;
}

std::vector<std::pair<Statement, Resumption>> harvestResumptions(
    const Program& p, std::size_t limit) {
  std::vector<std::pair<Statement, Resumption>> out;
  std::set<std::pair<Statement, Resumption>> seen;
  std::deque<std::pair<Statement, Resumption>> frontier;
  frontier.emplace_back(p.main, initialResumption());
  while (!frontier.empty() && out.size() < limit) {
    auto cur = frontier.front();
    frontier.pop_front();
    if (!seen.insert(cur).second) continue;
    out.push_back(cur);
    for (auto& nxt : rewrites(cur.first, cur.second, p))
      frontier.push_back(std::move(nxt));
  }
  return out;
}

}  // namespace ccsn
