#pragma once

// Statement syntax shared by both calculi, plus guardedness, the wgt
// termination measure, syntactic contexts and concrete rendering.
//
// One statement type serves both calculi; which action forms are legal is a
// per-program property (validated by the parser and validateStatement).
// Contexts are statements that may contain hole leaves.

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ccsn/names.hpp"

namespace ccsn {

enum class Calculus { CCSN, CCSNPLUS };

struct SyncAction {
  enum Polarity { In, Out };
  Polarity polarity;
  ChannelName channel;

  auto operator<=>(const SyncAction&) const = default;
};

struct Action {
  enum Kind { Internal, Output, JointInput, JointPrefix, Stop };

  Kind kind;
  Token name;                       // Internal
  ChannelName channel;              // Output
  std::vector<ChannelName> inputs;  // JointInput
  std::vector<SyncAction> items;    // JointPrefix

  static Action internal(Token b) { return {Internal, std::move(b), {}, {}, {}}; }
  static Action output(ChannelName c) { return {Output, {}, std::move(c), {}, {}}; }
  static Action jointInput(std::vector<ChannelName> cs) {
    return {JointInput, {}, {}, std::move(cs), {}};
  }
  static Action jointPrefix(std::vector<SyncAction> ls) {
    return {JointPrefix, {}, {}, {}, std::move(ls)};
  }
  static Action stop() { return {Stop, {}, {}, {}, {}}; }

  auto operator<=>(const Action&) const = default;
};

class Statement;
using StatementList = std::vector<Statement>;

struct StmtNode {
  enum Op {
    Act,
    Var,
    Hole,  // context hole, never part of a runnable program
    Restrict,
    Seq,
    Choice,
    Merge,          // x1 || x2
    SyncMerge,      // x1 |  x2
    LeftMerge,      // x1 ||- x2
    LeftSyncMerge,  // x1 |-  x2
  };

  Op op;
  Action action;     // Act
  std::string var;   // Var
  ChannelName chan;  // Restrict
  StatementList kids;
};

class Statement {
 public:
  Statement() = default;

  static Statement act(Action a);
  static Statement var(std::string y);
  static Statement hole();
  static Statement restricted(Statement x, ChannelName c);
  static Statement seq(Statement x1, Statement x2);
  static Statement choice(Statement x1, Statement x2);
  static Statement merge(Statement x1, Statement x2);
  static Statement syncMerge(Statement x1, Statement x2);
  static Statement leftMerge(Statement x1, Statement x2);
  static Statement leftSyncMerge(Statement x1, Statement x2);

  StmtNode::Op op() const { return node_->op; }
  const Action& action() const { return node_->action; }
  const std::string& varName() const { return node_->var; }
  const ChannelName& channel() const { return node_->chan; }
  const Statement& child(std::size_t i) const { return node_->kids[i]; }
  std::size_t arity() const { return node_->kids.size(); }
  bool valid() const { return node_ != nullptr; }

  friend bool operator==(const Statement& a, const Statement& b);
  friend std::strong_ordering operator<=>(const Statement& a, const Statement& b);

 private:
  explicit Statement(std::shared_ptr<const StmtNode> n) : node_(std::move(n)) {}
  std::shared_ptr<const StmtNode> node_;
};

struct Program {
  Calculus calculus = Calculus::CCSN;
  std::set<ChannelName> channels;
  std::map<std::string, Statement> decls;
  Statement main = Statement::act(Action::stop());
  int nbar = 2;
};

// Guarded statements: an action guards every execution path; variables are
// never guarded. Right operands of Seq and LeftMerge are unconstrained.
bool isGuarded(const Statement& g);

// The wgt measure; per-variable memoization keeps it linear. Throws
// UnguardedRecursionError on a variable cycle with no guard in between.
std::int64_t weight(const Statement& x, const Program& p);

// Context support.
bool containsHole(const Statement& s);
Statement fillContext(const Statement& context, const Statement& x);

// Checks action forms against the program's calculus and joint lengths
// against nbar, and that every variable is declared. Throws on violation.
void validateStatement(const Statement& x, const Program& p);

// Concrete syntax, parseable back by parseProgram (round trip).
std::string renderStatement(const Statement& x);
std::string renderAction(const Action& a);
std::string renderProgram(const Program& p);

}  // namespace ccsn
