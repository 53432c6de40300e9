#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ccsn {

// Base for all input-level failures; `code` feeds the CLI's JSON error field.
class LangError : public std::runtime_error {
 public:
  LangError(std::string code, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

class SyntaxError : public LangError {
 public:
  SyntaxError(std::size_t position, const std::string& what)
      : LangError("syntax", what + " (at offset " + std::to_string(position) + ")"),
        position(position) {}
  std::size_t position;
};

class MixedParallelOpsError : public LangError {
 public:
  explicit MixedParallelOpsError(std::size_t position)
      : LangError("mixed-parallel-ops",
                  "mixing parallel operators at one level requires parentheses (at offset " +
                      std::to_string(position) + ")"),
        position(position) {}
  std::size_t position;
};

class UnboundVariableError : public LangError {
 public:
  explicit UnboundVariableError(const std::string& name)
      : LangError("unbound-variable", "unbound name: " + name), name(name) {}
  std::string name;
};

class UnguardedRecursionError : public LangError {
 public:
  explicit UnguardedRecursionError(const std::string& name)
      : LangError("unguarded-recursion", "declaration body of " + name + " is not guarded"),
        name(name) {}
  std::string name;
};

class JointTooLongError : public LangError {
 public:
  JointTooLongError(std::size_t m, std::size_t nbar)
      : LangError("joint-too-long", "joint construct of length " + std::to_string(m) +
                                        " exceeds nbar=" + std::to_string(nbar)),
        m(m),
        nbar(nbar) {}
  std::size_t m;
  std::size_t nbar;
};

class WrongCalculusConstructError : public LangError {
 public:
  explicit WrongCalculusConstructError(const std::string& what)
      : LangError("wrong-calculus-construct", what) {}
};

class AmbiguousRestrictionError : public LangError {
 public:
  explicit AmbiguousRestrictionError(const std::string& what)
      : LangError("ambiguous-restriction", what) {}
};

class GuardViolationError : public LangError {
 public:
  explicit GuardViolationError(const std::string& what)
      : LangError("guard-violation", what) {}
};

class IllFormedResumptionError : public LangError {
 public:
  explicit IllFormedResumptionError(const std::string& what)
      : LangError("ill-formed-resumption", what) {}
};

}  // namespace ccsn
