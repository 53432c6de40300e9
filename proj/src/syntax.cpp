#include "ccsn/syntax.hpp"

#include <algorithm>
#include <cassert>

#include "ccsn/errors.hpp"

namespace ccsn {

namespace {

StmtNode binaryNode(StmtNode::Op op, Statement x1, Statement x2) {
  StmtNode n;
  n.op = op;
  n.action = Action::stop();
  n.kids = {std::move(x1), std::move(x2)};
  return n;
}

}  // namespace

Statement Statement::act(Action a) {
  StmtNode n;
  n.op = StmtNode::Act;
  n.action = std::move(a);
  return Statement(std::make_shared<const StmtNode>(std::move(n)));
}

Statement Statement::var(std::string y) {
  StmtNode n;
  n.op = StmtNode::Var;
  n.action = Action::stop();
  n.var = std::move(y);
  return Statement(std::make_shared<const StmtNode>(std::move(n)));
}

Statement Statement::hole() {
  StmtNode n;
  n.op = StmtNode::Hole;
  n.action = Action::stop();
  return Statement(std::make_shared<const StmtNode>(std::move(n)));
}

Statement Statement::restricted(Statement x, ChannelName c) {
  StmtNode n;
  n.op = StmtNode::Restrict;
  n.action = Action::stop();
  n.chan = std::move(c);
  n.kids = {std::move(x)};
  return Statement(std::make_shared<const StmtNode>(std::move(n)));
}

Statement Statement::seq(Statement x1, Statement x2) {
  return Statement(std::make_shared<const StmtNode>(
      binaryNode(StmtNode::Seq, std::move(x1), std::move(x2))));
}
Statement Statement::choice(Statement x1, Statement x2) {
  return Statement(std::make_shared<const StmtNode>(
      binaryNode(StmtNode::Choice, std::move(x1), std::move(x2))));
}
Statement Statement::merge(Statement x1, Statement x2) {
  return Statement(std::make_shared<const StmtNode>(
      binaryNode(StmtNode::Merge, std::move(x1), std::move(x2))));
}
Statement Statement::syncMerge(Statement x1, Statement x2) {
  return Statement(std::make_shared<const StmtNode>(
      binaryNode(StmtNode::SyncMerge, std::move(x1), std::move(x2))));
}
Statement Statement::leftMerge(Statement x1, Statement x2) {
  return Statement(std::make_shared<const StmtNode>(
      binaryNode(StmtNode::LeftMerge, std::move(x1), std::move(x2))));
}
Statement Statement::leftSyncMerge(Statement x1, Statement x2) {
  return Statement(std::make_shared<const StmtNode>(
      binaryNode(StmtNode::LeftSyncMerge, std::move(x1), std::move(x2))));
}

bool operator==(const Statement& a, const Statement& b) {
  return (a <=> b) == 0;
}

std::strong_ordering operator<=>(const Statement& a, const Statement& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (!a.node_) return std::strong_ordering::less;
  if (!b.node_) return std::strong_ordering::greater;
  const StmtNode& na = *a.node_;
  const StmtNode& nb = *b.node_;
  if (auto c = na.op <=> nb.op; c != 0) return c;
  if (auto c = na.action <=> nb.action; c != 0) return c;
  if (auto c = na.var <=> nb.var; c != 0) return c;
  if (auto c = na.chan <=> nb.chan; c != 0) return c;
  if (auto c = na.kids.size() <=> nb.kids.size(); c != 0) return c;
  for (std::size_t i = 0; i < na.kids.size(); ++i)
    if (auto c = na.kids[i] <=> nb.kids[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

bool isGuarded(const Statement& g) {
  switch (g.op()) {
    case StmtNode::Act:
      return true;
    case StmtNode::Var:
    case StmtNode::Hole:
      return false;
    case StmtNode::Restrict:
      return isGuarded(g.child(0));
    case StmtNode::Seq:
    case StmtNode::LeftMerge:
      return isGuarded(g.child(0));
    case StmtNode::Choice:
    case StmtNode::Merge:
    case StmtNode::SyncMerge:
    case StmtNode::LeftSyncMerge:
      return isGuarded(g.child(0)) && isGuarded(g.child(1));
  }
  return false;
}

namespace {

std::int64_t weightRec(const Statement& x, const Program& p,
                       std::map<std::string, std::int64_t>& memo,
                       std::set<std::string>& inProgress) {
  switch (x.op()) {
    case StmtNode::Act:
      return 1;
    case StmtNode::Hole:
      return 1;  // contexts only; holes weigh like an action
    case StmtNode::Var: {
      const std::string& y = x.varName();
      if (auto it = memo.find(y); it != memo.end()) return it->second;
      if (inProgress.contains(y)) throw UnguardedRecursionError(y);
      auto it = p.decls.find(y);
      if (it == p.decls.end()) throw UnboundVariableError(y);
      inProgress.insert(y);
      std::int64_t w = 1 + weightRec(it->second, p, memo, inProgress);
      inProgress.erase(y);
      memo.emplace(y, w);
      return w;
    }
    case StmtNode::Restrict:
    case StmtNode::Seq:
    case StmtNode::LeftMerge:
      return 1 + weightRec(x.child(0), p, memo, inProgress);
    case StmtNode::Choice:
    case StmtNode::Merge:
    case StmtNode::SyncMerge:
    case StmtNode::LeftSyncMerge:
      return 1 + std::max(weightRec(x.child(0), p, memo, inProgress),
                          weightRec(x.child(1), p, memo, inProgress));
  }
  return 1;
}

}  // namespace

std::int64_t weight(const Statement& x, const Program& p) {
  std::map<std::string, std::int64_t> memo;
  std::set<std::string> inProgress;
  return weightRec(x, p, memo, inProgress);
}

bool containsHole(const Statement& s) {
  if (s.op() == StmtNode::Hole) return true;
  for (std::size_t i = 0; i < s.arity(); ++i)
    if (containsHole(s.child(i))) return true;
  return false;
}

Statement fillContext(const Statement& context, const Statement& x) {
  switch (context.op()) {
    case StmtNode::Hole:
      return x;
    case StmtNode::Act:
    case StmtNode::Var:
      return context;
    case StmtNode::Restrict:
      return Statement::restricted(fillContext(context.child(0), x), context.channel());
    case StmtNode::Seq:
      return Statement::seq(fillContext(context.child(0), x),
                            fillContext(context.child(1), x));
    case StmtNode::Choice:
      return Statement::choice(fillContext(context.child(0), x),
                               fillContext(context.child(1), x));
    case StmtNode::Merge:
      return Statement::merge(fillContext(context.child(0), x),
                              fillContext(context.child(1), x));
    case StmtNode::SyncMerge:
      return Statement::syncMerge(fillContext(context.child(0), x),
                                  fillContext(context.child(1), x));
    case StmtNode::LeftMerge:
      return Statement::leftMerge(fillContext(context.child(0), x),
                                  fillContext(context.child(1), x));
    case StmtNode::LeftSyncMerge:
      return Statement::leftSyncMerge(fillContext(context.child(0), x),
                                      fillContext(context.child(1), x));
  }
  return context;
}

void validateStatement(const Statement& x, const Program& p) {
  switch (x.op()) {
    case StmtNode::Act: {
      const Action& a = x.action();
      switch (a.kind) {
        case Action::Internal:
        case Action::Stop:
          break;
        case Action::Output:
        case Action::JointInput: {
          if (p.calculus != Calculus::CCSN)
            throw WrongCalculusConstructError(
                "outputs and joint inputs belong to the base calculus");
          if (a.kind == Action::JointInput &&
              a.inputs.size() > static_cast<std::size_t>(p.nbar))
            throw JointTooLongError(a.inputs.size(), p.nbar);
          break;
        }
        case Action::JointPrefix: {
          if (p.calculus != Calculus::CCSNPLUS)
            throw WrongCalculusConstructError(
                "joint prefixes belong to the extended calculus");
          if (a.items.size() > static_cast<std::size_t>(p.nbar))
            throw JointTooLongError(a.items.size(), p.nbar);
          break;
        }
      }
      return;
    }
    case StmtNode::Var:
      if (!p.decls.contains(x.varName())) throw UnboundVariableError(x.varName());
      return;
    case StmtNode::Hole:
      return;
    default:
      for (std::size_t i = 0; i < x.arity(); ++i) validateStatement(x.child(i), p);
      return;
  }
}

namespace {

// Precedence, loosest to tightest: choice (1), parallel family (2),
// sequencing (3), restriction (4), atoms (5).
int precedenceOf(StmtNode::Op op) {
  switch (op) {
    case StmtNode::Choice:
      return 1;
    case StmtNode::Merge:
    case StmtNode::SyncMerge:
    case StmtNode::LeftMerge:
    case StmtNode::LeftSyncMerge:
      return 2;
    case StmtNode::Seq:
      return 3;
    case StmtNode::Restrict:
      return 4;
    default:
      return 5;
  }
}

bool isParallel(StmtNode::Op op) {
  return op == StmtNode::Merge || op == StmtNode::SyncMerge ||
         op == StmtNode::LeftMerge || op == StmtNode::LeftSyncMerge;
}

const char* parallelSymbol(StmtNode::Op op) {
  switch (op) {
    case StmtNode::Merge:
      return "||";
    case StmtNode::SyncMerge:
      return "|";
    case StmtNode::LeftMerge:
      return "||-";
    default:
      return "|-";
  }
}

std::string renderRec(const Statement& x, int minPrec) {
  int prec = precedenceOf(x.op());
  std::string out;
  switch (x.op()) {
    case StmtNode::Act:
      out = renderAction(x.action());
      break;
    case StmtNode::Var:
      out = x.varName();
      break;
    case StmtNode::Hole:
      out = "@";
      break;
    case StmtNode::Restrict:
      out = renderRec(x.child(0), 4) + "\\" + x.channel().value;
      break;
    case StmtNode::Seq:
      out = renderRec(x.child(0), 4) + "; " + renderRec(x.child(1), 3);
      break;
    case StmtNode::Choice:
      out = renderRec(x.child(0), 1) + " + " + renderRec(x.child(1), 2);
      break;
    default: {
      // Parallel level: left-associative chains of the same operator render
      // flat; a differing parallel operator on the left gets parentheses to
      // honor the no-mixing rule.
      std::string lhs = renderRec(x.child(0), 2);
      if (isParallel(x.child(0).op()) && x.child(0).op() != x.op())
        lhs = "(" + lhs + ")";
      out = lhs + " " + parallelSymbol(x.op()) + " " + renderRec(x.child(1), 3);
      break;
    }
  }
  if (prec < minPrec) out = "(" + out + ")";
  return out;
}

}  // namespace

std::string renderAction(const Action& a) {
  switch (a.kind) {
    case Action::Internal:
      return a.name.value;
    case Action::Output:
      return "~" + a.channel.value;
    case Action::Stop:
      return "stop";
    case Action::JointInput: {
      std::string out;
      for (std::size_t i = 0; i < a.inputs.size(); ++i) {
        if (i) out += "&";
        out += a.inputs[i].value;
      }
      return out;
    }
    case Action::JointPrefix: {
      std::string out;
      for (std::size_t i = 0; i < a.items.size(); ++i) {
        if (i) out += "&";
        if (a.items[i].polarity == SyncAction::Out) out += "~";
        out += a.items[i].channel.value;
      }
      return out;
    }
  }
  return "stop";
}

std::string renderStatement(const Statement& x) { return renderRec(x, 1); }

std::string renderProgram(const Program& p) {
  std::string out;
  if (!p.channels.empty()) {
    out += "chan";
    for (const auto& c : p.channels) out += " " + c.value;
    out += ";\n";
  }
  for (const auto& [y, body] : p.decls)
    out += "let " + y + " = " + renderStatement(body) + ";\n";
  out += "run " + renderStatement(p.main) + "\n";
  return out;
}

}  // namespace ccsn
