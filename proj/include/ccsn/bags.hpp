#pragma once

// Identifier-indexed store with an explicit domain set and a default value
// read off-table. The semantics only ever uses two defaults: the terminated
// resumption (operational) and the empty denotation (denotational).

#include <map>
#include <utility>

#include "ccsn/identifiers.hpp"

namespace ccsn {

template <typename X>
class Bag {
 public:
  explicit Bag(X dflt) : default_(std::move(dflt)) {}

  const IdSet& domain() const { return domain_; }

  const X& lookup(const Identifier& a) const {
    auto it = table_.find(a);
    return it == table_.end() ? default_ : it->second;
  }

  Bag bind(const Identifier& a, X x) const {
    Bag out = *this;
    out.domain_.insert(a);
    out.table_.insert_or_assign(a, std::move(x));
    return out;
  }

  const std::map<Identifier, X>& table() const { return table_; }
  const X& defaultValue() const { return default_; }

  // Domain-preserving value translation, used to lift operational bags into
  // denotational ones.
  template <typename F>
  auto mapValues(F&& f) const {
    using Y = decltype(f(default_));
    Bag<Y> out(f(default_));
    out.domain_ = domain_;
    for (const auto& [k, v] : table_) out.table_.emplace(k, f(v));
    return out;
  }

  friend bool operator==(const Bag& a, const Bag& b) {
    return a.domain_ == b.domain_ && a.table_ == b.table_ &&
           a.default_ == b.default_;
  }
  friend auto operator<=>(const Bag& a, const Bag& b) {
    if (auto c = a.domain_ <=> b.domain_; c != 0) return c;
    if (auto c = a.table_ <=> b.table_; c != 0) return c;
    return a.default_ <=> b.default_;
  }

 private:
  template <typename Y>
  friend class Bag;

  IdSet domain_;
  std::map<Identifier, X> table_;
  X default_;
};

}  // namespace ccsn
