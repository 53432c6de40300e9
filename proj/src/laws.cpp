#include "ccsn/laws.hpp"

#include <functional>
#include <optional>

#include "ccsn/gen.hpp"
#include "ccsn/identifiers.hpp"
#include "ccsn/traces.hpp"

namespace ccsn {

namespace {

using MergeFn = TraceSet (*)(std::size_t, const TraceSet&, const TraceSet&,
                             std::size_t);

bool startsTaus(const Trace& q, std::size_t k) {
  if (q.symbols.size() < k) return false;
  for (std::size_t i = 0; i < k; ++i)
    if (q.symbols[i] != tauToken()) return false;
  return true;
}

// Broken on purpose: keeps the settled shared deadlock, so the absorption
// law fails on any set with a surviving alternative.
TraceSet mutantChoiceMerge(std::size_t i, const TraceSet& p1, const TraceSet& p2,
                           std::size_t nbar) {
  const std::size_t k = nbar - i;
  TraceSet survivors;
  for (const TraceSet* p : {&p1, &p2})
    for (const Trace& q : *p)
      if (startsTaus(q, k)) survivors.insert(q);
  if (survivors.empty()) {
    Trace dead;
    dead.symbols.assign(k, tauToken());
    survivors.insert(dead);
  }
  return survivors;
}

using Check = std::function<std::optional<std::string>(Rng&)>;

LawReport runLaw(std::string name, std::size_t count, Rng& rng, const Check& one) {
  LawReport r;
  r.name = std::move(name);
  for (std::size_t i = 0; i < count; ++i) {
    ++r.checked;
    if (auto bad = one(rng)) {
      ++r.failed;
      if (r.firstCounterexample.empty()) r.firstCounterexample = *bad;
    }
  }
  return r;
}

std::size_t pick(Rng& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

Identifier wrapRandom(Rng& rng, Identifier id, int maxWrappers) {
  static const std::vector<ChannelName> pool{ChannelName{"c1"}, ChannelName{"c2"},
                                             ChannelName{"c3"}};
  const std::size_t n = pick(rng, static_cast<std::size_t>(maxWrappers) + 1);
  for (std::size_t i = 0; i < n; ++i) {
    switch (pick(rng, 4)) {
      case 0:
        id = id.extendSeqLeft();
        break;
      case 1:
        id = id.extendRestrict(pool[pick(rng, pool.size())]);
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

Identifier randomHoleId(Rng& rng) { return wrapRandom(rng, Identifier::hole(), 5); }

Identifier randomMarkId(Rng& rng) {
  return wrapRandom(rng, Identifier::seqMark(), 5);
}

std::string showSets(std::initializer_list<std::pair<const char*, const TraceSet*>> sets) {
  std::string out;
  for (const auto& [label, p] : sets) {
    if (!out.empty()) out += "  ";
    out += label;
    out += "=";
    out += renderTraceSet(*p);
  }
  return out;
}

}  // namespace

std::vector<LawReport> runLawSuites(const LawsOptions& opts) {
  std::vector<LawReport> out;
  Rng rng(opts.seed);
  const std::size_t nbar = static_cast<std::size_t>(opts.nbar);
  const MergeFn merge = opts.mutateChoiceMerge ? mutantChoiceMerge : choiceMerge;

  auto set = [](Rng& r) { return randomTraceSet(r, 5, 6, false); };

  for (std::size_t i = 0; i <= nbar; ++i) {
    const std::string at = "@" + std::to_string(i);
    out.push_back(runLaw("choice-assoc" + at, opts.count, rng, [&, i](Rng& r) -> std::optional<std::string> {
      const TraceSet p1 = set(r), p2 = set(r), p3 = set(r);
      const TraceSet lhs = merge(i, p1, merge(i, p2, p3, nbar), nbar);
      const TraceSet rhs = merge(i, merge(i, p1, p2, nbar), p3, nbar);
      if (lhs == rhs) return std::nullopt;
      return showSets({{"p1", &p1}, {"p2", &p2}, {"p3", &p3}, {"lhs", &lhs}, {"rhs", &rhs}});
    }));
    out.push_back(runLaw("choice-comm" + at, opts.count, rng, [&, i](Rng& r) -> std::optional<std::string> {
      const TraceSet p1 = set(r), p2 = set(r);
      const TraceSet lhs = merge(i, p1, p2, nbar);
      const TraceSet rhs = merge(i, p2, p1, nbar);
      if (lhs == rhs) return std::nullopt;
      return showSets({{"p1", &p1}, {"p2", &p2}, {"lhs", &lhs}, {"rhs", &rhs}});
    }));
    out.push_back(runLaw("choice-idem" + at, opts.count, rng, [&, i](Rng& r) -> std::optional<std::string> {
      const TraceSet p = set(r);
      const TraceSet lhs = merge(i, p, p, nbar);
      const TraceSet rhs = merge(i, p, {}, nbar);
      if (lhs == rhs) return std::nullopt;
      return showSets({{"p", &p}, {"lhs", &lhs}, {"rhs", &rhs}});
    }));
    out.push_back(runLaw("choice-absorb" + at, opts.count, rng, [&, i](Rng& r) -> std::optional<std::string> {
      const TraceSet p = set(r);
      Trace dead;
      dead.symbols.assign(nbar - i, tauToken());
      const TraceSet lhs = merge(i, {dead}, p, nbar);
      const TraceSet rhs = merge(i, {}, p, nbar);
      if (lhs == rhs) return std::nullopt;
      return showSets({{"p", &p}, {"lhs", &lhs}, {"rhs", &rhs}});
    }));
    out.push_back(runLaw("choice-deadlock-unit" + at, 1, rng, [&, i](Rng&) -> std::optional<std::string> {
      Trace dead;
      dead.symbols.assign(nbar - i, tauToken());
      const TraceSet got = merge(i, {}, {}, nbar);
      if (got == TraceSet{dead}) return std::nullopt;
      return showSets({{"got", &got}});
    }));
  }

  out.push_back(runLaw("id-reflexive", opts.count, rng, [](Rng& r) -> std::optional<std::string> {
    const Identifier a = randomIdentifier(r);
    if (matches(a, a)) return std::nullopt;
    return a.toString();
  }));
  out.push_back(runLaw("id-transitive", opts.count, rng, [](Rng& r) -> std::optional<std::string> {
    const Identifier a = randomIdentifier(r);
    const Identifier b = substitute(a, randomIdentifier(r));
    const Identifier c = substitute(b, randomIdentifier(r));
    if (!matches(a, b) || !matches(b, c)) return std::nullopt;
    if (matches(a, c)) return std::nullopt;
    return a.toString() + " ; " + b.toString() + " ; " + c.toString();
  }));
  out.push_back(runLaw("id-antisymmetric", opts.count, rng, [](Rng& r) -> std::optional<std::string> {
    Identifier a = randomIdentifier(r);
    Identifier b = pick(r, 3) == 0 ? a : substitute(a, randomIdentifier(r));
    if (!matches(a, b) || !matches(b, a) || a == b) return std::nullopt;
    return a.toString() + " vs " + b.toString();
  }));
  out.push_back(runLaw("id-glb-lower", opts.count, rng, [](Rng& r) -> std::optional<std::string> {
    const Identifier a = randomIdentifier(r);
    const Identifier b = randomIdentifier(r);
    const Identifier w = glb(a, b);
    if (matches(w, a) && matches(w, b)) return std::nullopt;
    return "glb(" + a.toString() + ", " + b.toString() + ") = " + w.toString();
  }));
  out.push_back(runLaw("id-glb-greatest", opts.count, rng, [](Rng& r) -> std::optional<std::string> {
    const Identifier w = randomHoleId(r);
    const Identifier a = substitute(w, randomIdentifier(r));
    const Identifier b = substitute(w, randomIdentifier(r));
    if (!matches(w, a) || !matches(w, b))
      return "substitution left " + w.toString() + " unmatched";
    if (matches(w, glb(a, b))) return std::nullopt;
    return "w=" + w.toString() + " a=" + a.toString() + " b=" + b.toString() +
           " glb=" + glb(a, b).toString();
  }));
  out.push_back(runLaw("id-subtract-inverts-substitute", opts.count, rng, [](Rng& r) -> std::optional<std::string> {
    const Identifier w = randomHoleId(r);
    const Identifier e = randomIdentifier(r);
    const Identifier big = substitute(w, e);
    const auto back = subtract(big, w);
    if (back && *back == e) return std::nullopt;
    return "w=" + w.toString() + " e=" + e.toString() + " big=" + big.toString();
  }));
  out.push_back(runLaw("id-substitute-restores", opts.count, rng, [](Rng& r) -> std::optional<std::string> {
    const Identifier w = randomHoleId(r);
    const Identifier big = substitute(w, randomIdentifier(r));
    const auto diff = subtract(big, w);
    if (!diff) return "subtract failed below " + w.toString();
    if (substitute(w, *diff) == big) return std::nullopt;
    return "w=" + w.toString() + " big=" + big.toString() + " diff=" + diff->toString();
  }));
  out.push_back(runLaw("id-marker-absorbs", opts.count, rng, [](Rng& r) -> std::optional<std::string> {
    const Identifier s = randomMarkId(r);
    const Identifier e = randomIdentifier(r);
    if (substitute(s, e) == s) return std::nullopt;
    return "s=" + s.toString() + " e=" + e.toString();
  }));
  out.push_back(runLaw("interact-symmetric", opts.count, rng, [](Rng& r) -> std::optional<std::string> {
    static const std::vector<ChannelName> pool{ChannelName{"c1"}, ChannelName{"c2"}};
    const ChannelName c1 = pool[pick(r, pool.size())];
    const ChannelName c2 = pool[pick(r, pool.size())];
    const Identifier a1 = randomIdentifier(r);
    const Identifier a2 = randomIdentifier(r);
    if (binaryInteract(c1, a1, c2, a2) == binaryInteract(c2, a2, c1, a1))
      return std::nullopt;
    return c1.value + "@" + a1.toString() + " vs " + c2.value + "@" + a2.toString();
  }));
  out.push_back(runLaw("interact-irreflexive", opts.count, rng, [](Rng& r) -> std::optional<std::string> {
    static const std::vector<ChannelName> pool{ChannelName{"c1"}, ChannelName{"c2"}};
    const ChannelName c = pool[pick(r, pool.size())];
    const Identifier a = randomIdentifier(r);
    if (!binaryInteract(c, a, c, a)) return std::nullopt;
    return c.value + "@" + a.toString();
  }));

  return out;
}

bool allPassed(const std::vector<LawReport>& reports) {
  for (const LawReport& r : reports)
    if (r.failed != 0) return false;
  return true;
}

}  // namespace ccsn
