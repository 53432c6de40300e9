#include "ccsn/parser.hpp"

#include <cctype>
#include <vector>

#include "ccsn/errors.hpp"

namespace ccsn {

namespace {

struct Lexeme {
  enum Kind { Ident, Sym, End };
  Kind kind;
  std::string text;
  std::size_t pos;
};

bool isIdentStart(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool isIdentChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

std::vector<Lexeme> lex(const std::string& text) {
  std::vector<Lexeme> out;
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '#') {
      while (i < n && text[i] != '\n') ++i;
      continue;
    }
    if (isIdentStart(c)) {
      std::size_t start = i;
      while (i < n && isIdentChar(text[i])) ++i;
      out.push_back({Lexeme::Ident, text.substr(start, i - start), start});
      continue;
    }
    if (c == '|') {
      if (text.compare(i, 3, "||-") == 0) {
        out.push_back({Lexeme::Sym, "||-", i});
        i += 3;
      } else if (text.compare(i, 2, "||") == 0) {
        out.push_back({Lexeme::Sym, "||", i});
        i += 2;
      } else if (text.compare(i, 2, "|-") == 0) {
        out.push_back({Lexeme::Sym, "|-", i});
        i += 2;
      } else {
        out.push_back({Lexeme::Sym, "|", i});
        i += 1;
      }
      continue;
    }
    switch (c) {
      case '(':
      case ')':
      case ';':
      case '+':
      case '&':
      case '~':
      case '\\':
      case '@':
      case '=':
        out.push_back({Lexeme::Sym, std::string(1, c), i});
        ++i;
        break;
      default:
        throw SyntaxError(i, std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Lexeme::End, "", n});
  return out;
}

const std::set<std::string> kReserved = {"chan", "let", "run", "stop", "tau"};

class Parser {
 public:
  Parser(const std::string& text, Calculus calculus, int nbar)
      : lexemes_(lex(text)), calculus_(calculus) {
    program_.calculus = calculus;
    program_.nbar = nbar;
  }

  Program run() {
    parseChanGroups();
    parseDecls();
    expectKeyword("run");
    program_.main = parseStmt();
    if (peek().kind != Lexeme::End)
      throw SyntaxError(peek().pos, "expected end of input after run statement");
    resolveAll();
    for (const auto& [y, body] : program_.decls) {
      if (!isGuarded(body)) throw UnguardedRecursionError(y);
      validateStatement(body, program_);
    }
    validateStatement(program_.main, program_);
    return program_;
  }

 private:
  const Lexeme& peek(std::size_t ahead = 0) const {
    std::size_t i = index_ + ahead;
    return i < lexemes_.size() ? lexemes_[i] : lexemes_.back();
  }
  const Lexeme& get() { return lexemes_[index_ < lexemes_.size() - 1 ? index_++ : index_]; }

  bool peekSym(const std::string& s, std::size_t ahead = 0) const {
    return peek(ahead).kind == Lexeme::Sym && peek(ahead).text == s;
  }
  bool peekKeyword(const std::string& k) const {
    return peek().kind == Lexeme::Ident && peek().text == k;
  }
  void expectSym(const std::string& s) {
    if (!peekSym(s)) throw SyntaxError(peek().pos, "expected '" + s + "'");
    get();
  }
  void expectKeyword(const std::string& k) {
    if (!peekKeyword(k)) throw SyntaxError(peek().pos, "expected '" + k + "'");
    get();
  }
  std::string expectName() {
    if (peek().kind != Lexeme::Ident) throw SyntaxError(peek().pos, "expected identifier");
    if (kReserved.contains(peek().text))
      throw SyntaxError(peek().pos, "'" + peek().text + "' is reserved");
    return get().text;
  }

  void parseChanGroups() {
    while (peekKeyword("chan")) {
      get();
      bool any = false;
      while (peek().kind == Lexeme::Ident && !kReserved.contains(peek().text)) {
        std::size_t pos = peek().pos;
        ChannelName c{expectName()};
        if (!program_.channels.insert(c).second)
          throw SyntaxError(pos, "channel '" + c.value + "' declared twice");
        any = true;
      }
      if (!any) throw SyntaxError(peek().pos, "expected channel name");
      expectSym(";");
    }
  }

  void parseDecls() {
    while (peekKeyword("let")) {
      get();
      std::size_t pos = peek().pos;
      std::string y = expectName();
      if (program_.channels.contains(ChannelName{y}))
        throw SyntaxError(pos, "'" + y + "' is already a channel");
      if (program_.decls.contains(y))
        throw SyntaxError(pos, "'" + y + "' is declared twice");
      expectSym("=");
      Statement body = parseStmt();
      expectSym(";");
      program_.decls.emplace(y, body);
      // Early guardedness check against names known so far; names that later
      // resolve to variables are re-checked after resolution.
      if (!guardedOptimistic(body)) throw UnguardedRecursionError(y);
    }
  }

  bool guardedOptimistic(const Statement& g) const {
    switch (g.op()) {
      case StmtNode::Act:
        return true;
      case StmtNode::Hole:
        return false;
      case StmtNode::Var:
        return !program_.decls.contains(g.varName());
      case StmtNode::Restrict:
      case StmtNode::Seq:
      case StmtNode::LeftMerge:
        return guardedOptimistic(g.child(0));
      default:
        return guardedOptimistic(g.child(0)) && guardedOptimistic(g.child(1));
    }
  }

  bool startsStatement(const Lexeme& l) const {
    if (l.kind == Lexeme::Ident)
      return l.text == "stop" || l.text == "tau" || !kReserved.contains(l.text);
    if (l.kind != Lexeme::Sym) return false;
    return l.text == "(" || l.text == "@" || l.text == "~";
  }

  Statement parseStmt() { return parseChoice(); }

  Statement parseChoice() {
    Statement lhs = parseParallel();
    while (peekSym("+")) {
      get();
      lhs = Statement::choice(lhs, parseParallel());
    }
    return lhs;
  }

  static bool parallelOp(const Lexeme& l) {
    return l.kind == Lexeme::Sym &&
           (l.text == "||" || l.text == "|" || l.text == "||-" || l.text == "|-");
  }

  Statement parseParallel() {
    Statement lhs = parseSeq();
    if (!parallelOp(peek())) return lhs;
    std::string op = peek().text;
    while (parallelOp(peek())) {
      if (peek().text != op) throw MixedParallelOpsError(peek().pos);
      get();
      Statement rhs = parseSeq();
      if (op == "||")
        lhs = Statement::merge(lhs, rhs);
      else if (op == "|")
        lhs = Statement::syncMerge(lhs, rhs);
      else if (op == "||-")
        lhs = Statement::leftMerge(lhs, rhs);
      else
        lhs = Statement::leftSyncMerge(lhs, rhs);
    }
    return lhs;
  }

  Statement parseSeq() {
    Statement lhs = parseRestrict();
    // `;` doubles as the declaration terminator; it only continues a
    // sequence when a statement follows.
    if (peekSym(";") && startsStatement(peek(1))) {
      get();
      return Statement::seq(lhs, parseSeq());
    }
    return lhs;
  }

  Statement parseRestrict() {
    Statement x = parseAtom();
    while (peekSym("\\")) {
      get();
      ChannelName c{expectName()};
      if (!program_.channels.contains(c)) throw UnboundVariableError(c.value);
      x = Statement::restricted(x, c);
    }
    return x;
  }

  Statement parseAtom() {
    if (peekSym("(")) {
      get();
      Statement x = parseStmt();
      expectSym(")");
      return x;
    }
    if (peekSym("@")) {
      get();
      return Statement::hole();
    }
    if (peekKeyword("stop")) {
      get();
      return Statement::act(Action::stop());
    }
    return parseJointOrAction();
  }

  struct Item {
    bool out;
    std::string name;
    std::size_t pos;
  };

  Statement parseJointOrAction() {
    std::vector<Item> items;
    items.push_back(parseItem());
    while (peekSym("&")) {
      get();
      items.push_back(parseItem());
    }
    if (static_cast<int>(items.size()) > program_.nbar)
      throw JointTooLongError(items.size(), program_.nbar);

    if (calculus_ == Calculus::CCSN) return resolveItemsCCSN(items);
    return resolveItemsCCSNPlus(items);
  }

  Item parseItem() {
    if (peekSym("~")) {
      std::size_t pos = get().pos;
      if (peek().kind != Lexeme::Ident)
        throw SyntaxError(peek().pos, "expected channel name after '~'");
      return {true, get().text, pos};
    }
    if (peek().kind != Lexeme::Ident || (kReserved.contains(peek().text) && peek().text != "tau"))
      throw SyntaxError(peek().pos, "expected statement");
    std::size_t pos = peek().pos;
    return {false, get().text, pos};
  }

  bool isChannel(const std::string& name) const {
    return program_.channels.contains(ChannelName{name});
  }

  Statement resolveItemsCCSN(const std::vector<Item>& items) {
    if (items.size() == 1) {
      const Item& it = items.front();
      if (it.out) {
        if (!isChannel(it.name)) throw UnboundVariableError(it.name);
        return Statement::act(Action::output(ChannelName{it.name}));
      }
      if (isChannel(it.name))
        return Statement::act(Action::jointInput({ChannelName{it.name}}));
      return bareName(it.name);
    }
    std::vector<ChannelName> names;
    for (const Item& it : items) {
      if (it.out)
        throw WrongCalculusConstructError(
            "'~' inside a joint input: outputs cannot be joined in the base calculus");
      if (!isChannel(it.name)) throw UnboundVariableError(it.name);
      names.push_back(ChannelName{it.name});
    }
    return Statement::act(Action::jointInput(std::move(names)));
  }

  Statement resolveItemsCCSNPlus(const std::vector<Item>& items) {
    if (items.size() == 1 && !items.front().out && !isChannel(items.front().name))
      return bareName(items.front().name);
    std::vector<SyncAction> sas;
    for (const Item& it : items) {
      if (!isChannel(it.name)) throw UnboundVariableError(it.name);
      sas.push_back({it.out ? SyncAction::Out : SyncAction::In, ChannelName{it.name}});
    }
    return Statement::act(Action::jointPrefix(std::move(sas)));
  }

  // A bare non-channel name: process variable or internal action, settled
  // once all declarations are known.
  Statement bareName(const std::string& name) {
    if (name == "tau") return Statement::act(Action::internal(tauToken()));
    return Statement::var(name);
  }

  void resolveAll() {
    std::map<std::string, Statement> resolved;
    for (const auto& [y, body] : program_.decls) resolved.emplace(y, resolveStmt(body));
    program_.decls = std::move(resolved);
    program_.main = resolveStmt(program_.main);
  }

  Statement resolveStmt(const Statement& x) {
    switch (x.op()) {
      case StmtNode::Var:
        if (program_.decls.contains(x.varName())) return x;
        return Statement::act(Action::internal(Token{x.varName()}));
      case StmtNode::Act:
      case StmtNode::Hole:
        return x;
      case StmtNode::Restrict:
        return Statement::restricted(resolveStmt(x.child(0)), x.channel());
      case StmtNode::Seq:
        return Statement::seq(resolveStmt(x.child(0)), resolveStmt(x.child(1)));
      case StmtNode::Choice:
        return Statement::choice(resolveStmt(x.child(0)), resolveStmt(x.child(1)));
      case StmtNode::Merge:
        return Statement::merge(resolveStmt(x.child(0)), resolveStmt(x.child(1)));
      case StmtNode::SyncMerge:
        return Statement::syncMerge(resolveStmt(x.child(0)), resolveStmt(x.child(1)));
      case StmtNode::LeftMerge:
        return Statement::leftMerge(resolveStmt(x.child(0)), resolveStmt(x.child(1)));
      case StmtNode::LeftSyncMerge:
        return Statement::leftSyncMerge(resolveStmt(x.child(0)), resolveStmt(x.child(1)));
    }
    return x;
  }

  std::vector<Lexeme> lexemes_;
  std::size_t index_ = 0;
  Calculus calculus_;
  Program program_;
};

}  // namespace

Program parseProgram(const std::string& text, Calculus calculus, int nbar) {
  if (nbar < 1) throw LangError("config", "nbar must be at least 1");
  Parser p(text, calculus, nbar);
  return p.run();
}

}  // namespace ccsn
