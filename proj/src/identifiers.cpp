#include "ccsn/identifiers.hpp"

#include <algorithm>

namespace ccsn {

Identifier Identifier::seqLeft(Identifier child) {
  Identifier out;
  out.spine_.reserve(child.spine_.size() + 1);
  out.spine_.push_back({IdWrap::SeqLeft, {}});
  out.spine_.insert(out.spine_.end(), child.spine_.begin(), child.spine_.end());
  out.leaf_ = child.leaf_;
  return out;
}

Identifier Identifier::restricted(Identifier child, ChannelName c) {
  Identifier out;
  out.spine_.reserve(child.spine_.size() + 1);
  out.spine_.push_back({IdWrap::Restrict, std::move(c)});
  out.spine_.insert(out.spine_.end(), child.spine_.begin(), child.spine_.end());
  out.leaf_ = child.leaf_;
  return out;
}

Identifier Identifier::parLeft(Identifier child) {
  Identifier out;
  out.spine_.reserve(child.spine_.size() + 1);
  out.spine_.push_back({IdWrap::ParLeft, {}});
  out.spine_.insert(out.spine_.end(), child.spine_.begin(), child.spine_.end());
  out.leaf_ = child.leaf_;
  return out;
}

Identifier Identifier::parRight(Identifier child) {
  Identifier out;
  out.spine_.reserve(child.spine_.size() + 1);
  out.spine_.push_back({IdWrap::ParRight, {}});
  out.spine_.insert(out.spine_.end(), child.spine_.begin(), child.spine_.end());
  out.leaf_ = child.leaf_;
  return out;
}

Identifier Identifier::extendSeqLeft() const {
  return substitute(*this, seqLeft(hole()));
}
Identifier Identifier::extendSeqMark() const {
  return substitute(*this, seqMark());
}
Identifier Identifier::extendRestrict(const ChannelName& c) const {
  return substitute(*this, restricted(hole(), c));
}
Identifier Identifier::extendParLeft() const {
  return substitute(*this, parLeft(hole()));
}
Identifier Identifier::extendParRight() const {
  return substitute(*this, parRight(hole()));
}

std::optional<IdWrap> Identifier::innermost() const {
  if (spine_.empty()) return std::nullopt;
  return spine_.back();
}

Identifier Identifier::parent() const {
  Identifier out = *this;
  if (!out.spine_.empty()) out.spine_.pop_back();
  return out;
}

Identifier substitute(const Identifier& outer, const Identifier& inner) {
  if (outer.leaf_ == IdLeaf::SeqMark) return outer;
  Identifier out;
  out.spine_.reserve(outer.spine_.size() + inner.spine_.size());
  out.spine_ = outer.spine_;
  out.spine_.insert(out.spine_.end(), inner.spine_.begin(), inner.spine_.end());
  out.leaf_ = inner.leaf_;
  return out;
}

bool matches(const Identifier& a, const Identifier& b) {
  const auto& sa = a.spine();
  const auto& sb = b.spine();
  if (sa.size() > sb.size()) return false;
  if (!std::equal(sa.begin(), sa.end(), sb.begin())) return false;
  if (a.leaf() == IdLeaf::Hole) return true;
  // Marker leaf: only the marker itself matches.
  return sa.size() == sb.size() && b.leaf() == IdLeaf::SeqMark;
}

Identifier glb(const Identifier& a, const Identifier& b) {
  if (a == b) return a;
  const auto& sa = a.spine_;
  const auto& sb = b.spine_;
  std::size_t n = std::min(sa.size(), sb.size());
  std::size_t i = 0;
  while (i < n && sa[i] == sb[i]) ++i;
  Identifier out;
  out.spine_.assign(sa.begin(), sa.begin() + i);
  out.leaf_ = IdLeaf::Hole;
  return out;
}

std::optional<Identifier> subtract(const Identifier& big, const Identifier& small) {
  const auto& sb = big.spine_;
  const auto& ss = small.spine_;
  if (ss.size() > sb.size()) return std::nullopt;
  if (!std::equal(ss.begin(), ss.end(), sb.begin())) return std::nullopt;
  if (small.leaf_ == IdLeaf::Hole) {
    Identifier out;
    out.spine_.assign(sb.begin() + ss.size(), sb.end());
    out.leaf_ = big.leaf_;
    return out;
  }
  // Marker leaf subtracts only from itself, leaving the trivial position.
  if (sb.size() == ss.size() && big.leaf_ == IdLeaf::SeqMark)
    return Identifier::hole();
  return std::nullopt;
}

bool occursRestricted(const ChannelName& c, const Identifier& a) {
  for (const auto& w : a.spine())
    if (w.kind == IdWrap::Restrict && w.chan == c) return true;
  return false;
}

bool binaryInteract(const ChannelName& c1, const Identifier& a1,
                    const ChannelName& c2, const Identifier& a2) {
  if (a1 == a2 || c1 != c2) return false;
  Identifier g = glb(a1, a2);
  auto r1 = subtract(a1, g);
  auto r2 = subtract(a2, g);
  if (!r1 || !r2) return false;  // unreachable: glb is a lower bound
  return !occursRestricted(c1, *r1) && !occursRestricted(c2, *r2);
}

IdSet filterBelow(const IdSet& pi, const Identifier& a) {
  IdSet out;
  for (const auto& b : pi)
    if (matches(a, b)) out.insert(b);
  return out;
}

std::optional<ChannelName> restrictedNameAt(const Identifier& a, const Identifier& b) {
  const auto& sa = a.spine();
  const auto& sb = b.spine();
  std::size_t n = std::min(sa.size(), sb.size());
  std::size_t i = 0;
  while (i < n && sa[i] == sb[i]) ++i;
  if (i < sa.size() || a.leaf() != IdLeaf::Hole) return std::nullopt;
  if (i < sb.size() && sb[i].kind == IdWrap::Restrict) return sb[i].chan;
  return std::nullopt;
}

std::set<ChannelName> restrictedNamesBelow(const IdSet& pi, const Identifier& a) {
  std::set<ChannelName> out;
  for (const auto& b : pi)
    if (auto c = restrictedNameAt(a, b)) out.insert(*c);
  return out;
}

std::string Identifier::toString() const {
  std::string inner = leaf_ == IdLeaf::Hole ? "*" : "(;*)";
  for (auto it = spine_.rbegin(); it != spine_.rend(); ++it) {
    switch (it->kind) {
      case IdWrap::SeqLeft:
        inner = "<" + inner + ";";
        break;
      case IdWrap::Restrict:
        inner = "(" + inner + ")\\" + it->chan.value;
        break;
      case IdWrap::ParLeft:
        inner = "<" + inner + "|";
        break;
      case IdWrap::ParRight:
        inner = "|" + inner + ">";
        break;
    }
  }
  return inner;
}

}  // namespace ccsn
