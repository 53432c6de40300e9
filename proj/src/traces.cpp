#include "ccsn/traces.hpp"

#include <algorithm>

#include "ccsn/errors.hpp"

namespace ccsn {

std::string Trace::toString() const {
  if (symbols.empty())
    return end == Terminator::Eps     ? "eps"
           : end == Terminator::Delta ? "delta"
                                      : "cut";
  std::string out;
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    if (i) out += ".";
    out += symbols[i].value;
  }
  if (end == Terminator::Delta) out += ".delta";
  if (end == Terminator::Cut) out += ".cut";
  return out;
}

TraceSet prefixAction(const Token& b, const TraceSet& p) {
  TraceSet out;
  for (const Trace& q : p) {
    Trace t;
    t.symbols.reserve(q.symbols.size() + 1);
    t.symbols.push_back(b);
    t.symbols.insert(t.symbols.end(), q.symbols.begin(), q.symbols.end());
    t.end = q.end;
    out.insert(std::move(t));
  }
  return out;
}

TraceSet tauPow(std::size_t i, const TraceSet& p) {
  TraceSet out;
  for (const Trace& q : p) {
    Trace t;
    t.symbols.assign(i, tauToken());
    t.symbols.insert(t.symbols.end(), q.symbols.begin(), q.symbols.end());
    t.end = q.end;
    out.insert(std::move(t));
  }
  return out;
}

namespace {

bool startsWithTaus(const Trace& q, std::size_t k) {
  if (q.symbols.size() < k) return false;
  for (std::size_t i = 0; i < k; ++i)
    if (q.symbols[i] != tauToken()) return false;
  return true;
}

}  // namespace

TraceSet choiceMerge(std::size_t i, const TraceSet& p1, const TraceSet& p2,
                     std::size_t nbar) {
  if (i > nbar) throw LangError("bad-level", "choice level exceeds nbar");
  const std::size_t k = nbar - i;
  TraceSet survivors;
  for (const TraceSet* p : {&p1, &p2}) {
    for (const Trace& q : *p) {
      if (!startsWithTaus(q, k)) {
        // A cut inside the shared silent prefix is still undetermined; it
        // must survive, or a tight budget would fabricate a deadlock verdict.
        if (q.end == Terminator::Cut && q.symbols.size() < k &&
            startsWithTaus(q, q.symbols.size()))
          survivors.insert(q);
        continue;
      }
      // Drop the settled deadlock; keep everything with a residue, including
      // the undetermined cut right at the boundary.
      if (q.symbols.size() == k && q.end == Terminator::Eps) continue;
      survivors.insert(q);
    }
  }
  if (survivors.empty()) {
    Trace dead;
    dead.symbols.assign(k, tauToken());
    survivors.insert(std::move(dead));
  }
  return survivors;
}

Trace xiTrace(const Trace& q, std::size_t nbar) {
  Trace out;
  for (const Token& b : q.symbols) {
    out.symbols.insert(out.symbols.end(), nbar, tauToken());
    out.symbols.push_back(b);
  }
  switch (q.end) {
    case Terminator::Eps:
      out.end = Terminator::Eps;
      break;
    case Terminator::Delta:
      out.symbols.insert(out.symbols.end(), nbar, tauToken());
      out.end = Terminator::Eps;
      break;
    case Terminator::Cut:
      out.end = Terminator::Cut;
      break;
  }
  return out;
}

TraceSet xiSet(const TraceSet& p, std::size_t nbar) {
  TraceSet out;
  for (const Trace& q : p) out.insert(xiTrace(q, nbar));
  return out;
}

TraceSet truncateSet(const TraceSet& p, std::size_t m) {
  TraceSet out;
  for (const Trace& q : p) {
    if (q.symbols.size() <= m) {
      out.insert(q);
      continue;
    }
    Trace t;
    t.symbols.assign(q.symbols.begin(), q.symbols.begin() + m);
    t.end = Terminator::Cut;
    out.insert(std::move(t));
  }
  return out;
}

std::string renderTraceSet(const TraceSet& p) {
  std::string out = "{";
  bool first = true;
  for (const Trace& q : p) {
    if (!first) out += ", ";
    first = false;
    out += q.toString();
  }
  out += "}";
  return out;
}

}  // namespace ccsn
