#include "ccsn/interaction.hpp"

#include <algorithm>
#include <cassert>

namespace ccsn {

InteractionResult interactN(const InteractionSet& u, int nbar) {
  assert(u.size() <= static_cast<std::size_t>(nbar) + 1);
  (void)nbar;
  if (u.empty()) return std::nullopt;
  if (u.size() == 1) {
    const Action& a = u.begin()->first;
    return a.kind == Action::Internal ? InteractionResult(a.name) : std::nullopt;
  }
  const LocatedAction* joint = nullptr;
  std::vector<LocatedChannel> outputs;
  for (const auto& member : u) {
    switch (member.first.kind) {
      case Action::JointInput:
        if (joint) return std::nullopt;  // two joint inputs never interact
        joint = &member;
        break;
      case Action::Output:
        outputs.emplace_back(member.first.channel, member.second);
        break;
      default:
        return std::nullopt;
    }
  }
  if (!joint || outputs.size() != joint->first.inputs.size()) return std::nullopt;

  // The joint input's name occurrences are interchangeable (same holder
  // position), so a bijection exists iff the channel multisets coincide and
  // every output can talk to the holder.
  std::multiset<ChannelName> wanted(joint->first.inputs.begin(), joint->first.inputs.end());
  std::multiset<ChannelName> offered;
  for (const auto& [c, id] : outputs) offered.insert(c);
  if (wanted != offered) return std::nullopt;
  for (const auto& [c, id] : outputs)
    if (!binaryInteract(c, id, c, joint->second)) return std::nullopt;
  return tauToken();
}

std::vector<LocatedChannel> splitReceives(const Action& joint, const Identifier& a) {
  assert(joint.kind == Action::JointPrefix);
  std::vector<LocatedChannel> out;
  for (const auto& item : joint.items)
    if (item.polarity == SyncAction::In) out.emplace_back(item.channel, a);
  return out;
}

std::vector<LocatedChannel> splitSends(const Action& joint, const Identifier& a) {
  assert(joint.kind == Action::JointPrefix);
  std::vector<LocatedChannel> out;
  for (const auto& item : joint.items)
    if (item.polarity == SyncAction::Out) out.emplace_back(item.channel, a);
  return out;
}

bool matchSequences(const std::vector<LocatedChannel>& recv,
                    const std::vector<LocatedChannel>& send) {
  if (recv.size() != send.size()) return false;
  for (std::size_t i = 0; i < recv.size(); ++i)
    if (!binaryInteract(recv[i].first, recv[i].second, send[i].first, send[i].second))
      return false;
  return true;
}

namespace {

// Perfect bipartite matching by augmenting paths; adjacency indexed
// receiver -> senders.
bool augment(std::size_t r, const std::vector<std::vector<std::size_t>>& adj,
             std::vector<bool>& visited, std::vector<int>& ownerOf) {
  for (std::size_t s : adj[r]) {
    if (visited[s]) continue;
    visited[s] = true;
    if (ownerOf[s] < 0 ||
        augment(static_cast<std::size_t>(ownerOf[s]), adj, visited, ownerOf)) {
      ownerOf[s] = static_cast<int>(r);
      return true;
    }
  }
  return false;
}

bool perfectMatching(const std::vector<LocatedChannel>& recv,
                     const std::vector<LocatedChannel>& send) {
  std::vector<std::vector<std::size_t>> adj(recv.size());
  for (std::size_t r = 0; r < recv.size(); ++r)
    for (std::size_t s = 0; s < send.size(); ++s)
      if (binaryInteract(recv[r].first, recv[r].second, send[s].first, send[s].second))
        adj[r].push_back(s);
  std::vector<int> ownerOf(send.size(), -1);
  for (std::size_t r = 0; r < recv.size(); ++r) {
    std::vector<bool> visited(send.size(), false);
    if (!augment(r, adj, visited, ownerOf)) return false;
  }
  return true;
}

}  // namespace

InteractionResult interactNPlus(const InteractionSet& u, int nbar) {
  assert(u.size() <= static_cast<std::size_t>(nbar) + 1);
  (void)nbar;
  if (u.empty()) return std::nullopt;
  if (u.size() == 1) {
    const Action& a = u.begin()->first;
    return a.kind == Action::Internal ? InteractionResult(a.name) : std::nullopt;
  }
  std::vector<LocatedChannel> wr;
  std::vector<LocatedChannel> ws;
  for (const auto& [a, id] : u) {
    if (a.kind != Action::JointPrefix) return std::nullopt;
    auto r = splitReceives(a, id);
    auto s = splitSends(a, id);
    wr.insert(wr.end(), r.begin(), r.end());
    ws.insert(ws.end(), s.begin(), s.end());
  }
  if (wr.size() != ws.size()) return std::nullopt;
  // Some permutation pair matches pointwise iff a perfect matching exists in
  // the compatibility graph.
  if (!perfectMatching(wr, ws)) return std::nullopt;
  return tauToken();
}

InteractionResult interact(const InteractionSet& u, const Program& p) {
  return p.calculus == Calculus::CCSN ? interactN(u, p.nbar) : interactNPlus(u, p.nbar);
}

}  // namespace ccsn
