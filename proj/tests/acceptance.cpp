// Acceptance gate: one line per criterion, nonzero exit on any failure.
// Each criterion re-derives its expectations locally so a regression in the
// library cannot hide behind a shared helper.

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <exception>
#include <iostream>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ccsn/abstraction.hpp"
#include "ccsn/denotational.hpp"
#include "ccsn/gen.hpp"
#include "ccsn/interaction.hpp"
#include "ccsn/laws.hpp"
#include "ccsn/operational.hpp"
#include "ccsn/parser.hpp"
#include "ccsn/syntax.hpp"
#include "ccsn/traces.hpp"

using namespace ccsn;

namespace {

using Clock = std::chrono::steady_clock;

double secondsSince(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Gate {
  bool allPass = true;

  void report(int n, bool ok, const std::string& text, double secs) {
    allPass = allPass && ok;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << n << ": " << text
              << " (" << secs << " s)" << std::endl;
  }
};

const Token tau{"tau"};
const Token b1{"b1"};
const Token b2{"b2"};
const Token b3{"b3"};

Trace tr(std::vector<Token> symbols, Terminator end) {
  return Trace{std::move(symbols), end};
}

Trace trEps(std::vector<Token> symbols) {
  return tr(std::move(symbols), Terminator::Eps);
}

struct Example {
  Program program;
  TraceSet expectedO;
  TraceSet expectedD;
};

std::vector<Example> paperExamples() {
  std::vector<Example> out;

  Example x1;
  x1.program = parseProgram("run (b1 || b2); stop", Calculus::CCSN, 2);
  x1.expectedO = {tr({b1, b2}, Terminator::Delta), tr({b2, b1}, Terminator::Delta)};
  x1.expectedD = {trEps({tau, tau, b1, tau, tau, b2, tau, tau}),
                  trEps({tau, tau, b2, tau, tau, b1, tau, tau})};
  out.push_back(std::move(x1));

  Example x2;
  x2.program = parseProgram(
      "chan c1 c2;\nrun (((b1; c1&c2) || ~c1)\\c1 || ~c2); (b2 + b3)",
      Calculus::CCSN, 2);
  x2.expectedO = {trEps({b1, tau, b2}), trEps({b1, tau, b3})};
  x2.expectedD = {trEps({tau, tau, b1, tau, tau, tau, tau, tau, b2}),
                  trEps({tau, tau, b1, tau, tau, tau, tau, tau, b3})};
  out.push_back(std::move(x2));

  Example x3;
  x3.program = parseProgram("chan c1 c2;\nrun ((c1&c2 || ~c1)\\c1) || ~c2",
                            Calculus::CCSN, 2);
  x3.expectedO = {trEps({tau})};
  x3.expectedD = {trEps({tau, tau, tau})};
  out.push_back(std::move(x3));

  return out;
}

Example plusExample() {
  Example x4;
  x4.program = parseProgram(
      "chan c1 c2 c3;\nrun ((~c1&c2; b1) || c1&~c3)\\c1 || (~c2&c3; b2)",
      Calculus::CCSNPLUS, 2);
  x4.expectedO = {trEps({tau, b1, b2}), trEps({tau, b2, b1})};
  x4.expectedD = {trEps({tau, tau, tau, tau, tau, b1, tau, tau, b2}),
                  trEps({tau, tau, tau, tau, tau, b2, tau, tau, b1})};
  return x4;
}

bool exactExample(const Example& e) {
  auto t0 = Clock::now();
  TraceSet o = denO(e.program.main, e.program, 48);
  TraceSet d = denD(e.program.main, e.program, 48);
  double secs = secondsSince(t0);
  return o == e.expectedO && d == e.expectedD && secs < 1.0;
}

// Brute-force synchronizability: some ordering of the pooled sends matches
// the pooled receives pointwise. Ground truth for the matching search.
bool matchableByBijection(const InteractionSet& u) {
  std::vector<LocatedChannel> recv;
  std::vector<LocatedChannel> send;
  for (const auto& [a, pos] : u) {
    auto r = splitReceives(a, pos);
    auto s = splitSends(a, pos);
    recv.insert(recv.end(), r.begin(), r.end());
    send.insert(send.end(), s.begin(), s.end());
  }
  if (recv.size() != send.size()) return false;
  std::vector<std::size_t> order(send.size());
  std::iota(order.begin(), order.end(), 0);
  do {
    std::vector<LocatedChannel> arranged;
    arranged.reserve(order.size());
    for (std::size_t i : order) arranged.push_back(send[i]);
    if (matchSequences(recv, arranged)) return true;
  } while (std::next_permutation(order.begin(), order.end()));
  return false;
}

struct CorpusEntry {
  Program program;
};

}  // namespace

int main() {
  Gate gate;

  // 1. Base-calculus paper examples, exact O and D.
  try {
    auto t0 = Clock::now();
    bool ok = true;
    for (const Example& e : paperExamples()) ok = exactExample(e) && ok;
    gate.report(1, ok, "x1..x3 operational and denotational sets exact, each run < 1 s",
                secondsSince(t0));
  } catch (const std::exception& e) {
    gate.report(1, false, std::string("exception: ") + e.what(), 0.0);
  }

  // 2. Joint-prefix example, exact O and D.
  try {
    auto t0 = Clock::now();
    bool ok = exactExample(plusExample());
    gate.report(2, ok, "x4 operational and denotational sets exact, run < 1 s",
                secondsSince(t0));
  } catch (const std::exception& e) {
    gate.report(2, false, std::string("exception: ") + e.what(), 0.0);
  }

  // The corpus is shared by criteria 3, 7 and 8.
  std::vector<CorpusEntry> corpus;

  // 3. Abstraction equality on 200 random programs per calculus at m = 48.
  try {
    auto t0 = Clock::now();
    resetOpaDefensiveHits();
    std::size_t equal = 0;
    std::size_t total = 0;
    for (Calculus calc : {Calculus::CCSN, Calculus::CCSNPLUS}) {
      Rng rng(calc == Calculus::CCSN ? 9001 : 9002);
      for (int i = 0; i < 200; ++i) {
        Program p = randomProgram(rng, calc);
        XiVerdict v = checkXi(p.main, p, 48);
        equal += v.equal ? 1 : 0;
        ++total;
        corpus.push_back({std::move(p)});
      }
    }
    double secs = secondsSince(t0);
    bool ok = equal == total && total == 400 && secs < 60.0;
    gate.report(3, ok,
                "xi-image equality on " + std::to_string(total) +
                    " random programs at m=48, < 60 s",
                secs);
  } catch (const std::exception& e) {
    gate.report(3, false, std::string("exception: ") + e.what(), 0.0);
  }

  // 4. Operator-law suites at 1000 cases per law.
  try {
    auto t0 = Clock::now();
    LawsOptions opts;
    opts.seed = 2024;
    opts.count = 1000;
    auto reports = runLawSuites(opts);
    double secs = secondsSince(t0);
    std::size_t checked = 0;
    for (const auto& r : reports) checked += r.checked;
    bool ok = allPassed(reports) && !reports.empty() && secs < 30.0;
    gate.report(4, ok,
                std::to_string(reports.size()) + " law suites, " +
                    std::to_string(checked) + " checks, all pass, < 30 s",
                secs);
  } catch (const std::exception& e) {
    gate.report(4, false, std::string("exception: ") + e.what(), 0.0);
  }

  // 5. Matching search agrees with bijection enumeration on 500 sets.
  try {
    auto t0 = Clock::now();
    Rng rng(7321);
    std::size_t agree = 0;
    std::size_t matchable = 0;
    const std::size_t total = 500;
    for (std::size_t i = 0; i < total; ++i) {
      InteractionSet u = randomInteractionSet(rng, 4, 3);
      bool oracle = matchableByBijection(u);
      bool engine = interactNPlus(u, 4).has_value();
      agree += oracle == engine ? 1 : 0;
      matchable += oracle ? 1 : 0;
    }
    bool ok = agree == total && matchable > 0 && matchable < total;
    gate.report(5, ok,
                "matching vs bijection oracle on " + std::to_string(total) +
                    " interaction sets (" + std::to_string(matchable) +
                    " synchronizable)",
                secondsSince(t0));
  } catch (const std::exception& e) {
    gate.report(5, false, std::string("exception: ") + e.what(), 0.0);
  }

  // 6. Transformer invariance on harvested resumption/statement pairs.
  try {
    auto t0 = Clock::now();
    std::size_t pairs = 0;
    std::size_t hold = 0;
    for (Calculus calc : {Calculus::CCSN, Calculus::CCSNPLUS}) {
      Rng rng(calc == Calculus::CCSN ? 4401 : 4402);
      for (int i = 0; i < 20 && pairs < 150; ++i) {
        Program p = randomProgram(rng, calc);
        for (const auto& [x, rho] : harvestResumptions(p, 8)) {
          hold += checkInvariance(rho, x, p) ? 1 : 0;
          ++pairs;
        }
      }
    }
    bool ok = pairs >= 100 && hold == pairs;
    gate.report(6, ok,
                "transformer squares commute on " + std::to_string(pairs) +
                    " resumption/statement pairs",
                secondsSince(t0));
  } catch (const std::exception& e) {
    gate.report(6, false, std::string("exception: ") + e.what(), 0.0);
  }

  // 7. Structural invariants along full corpus runs; defensive branch idle.
  try {
    auto t0 = Clock::now();
    std::size_t inspected = 0;
    bool ok = true;
    for (const CorpusEntry& entry : corpus) {
      const Program& p = entry.program;
      for (const auto& [x, rho] : harvestResumptions(p, 40)) {
        ok = ok && rho.ids.size() == rho.sync.size() + 1 && wellFormed(rho, p.nbar);
        ++inspected;
      }
      std::vector<Configuration> frontier = {
          Configuration::running(p.main, initialResumption())};
      std::set<Configuration> seen(frontier.begin(), frontier.end());
      while (!frontier.empty() && seen.size() < 120) {
        Configuration t = frontier.back();
        frontier.pop_back();
        for (const auto& succ : step(t, p)) {
          const Configuration& next = succ.second;
          if (!seen.insert(next).second) continue;
          if (next.kind == Configuration::Running) {
            ok = ok && next.rho.ids.size() == next.rho.sync.size() + 1 &&
                 wellFormed(next.rho, p.nbar);
            ++inspected;
            frontier.push_back(next);
          }
        }
      }
      if (!ok) break;
    }
    ok = ok && inspected > 0 && opaDefensiveHits() == 0;
    gate.report(7, ok,
                "well-formedness at " + std::to_string(inspected) +
                    " intermediate resumptions, defensive branch hit " +
                    std::to_string(opaDefensiveHits()) + " times",
                secondsSince(t0));
  } catch (const std::exception& e) {
    gate.report(7, false, std::string("exception: ") + e.what(), 0.0);
  }

  // 8. Budget coherence for 50 corpus programs at m in {4, 8, 16, 32}.
  try {
    auto t0 = Clock::now();
    bool ok = corpus.size() >= 400;
    std::size_t programs = 0;
    for (std::size_t i = 0; i < corpus.size() && programs < 50; i += 8, ++programs) {
      const Program& p = corpus[i].program;
      TraceSet wideD = denD(p.main, p, 32);
      TraceSet wideO = denO(p.main, p, 32);
      for (std::size_t m : {4u, 8u, 16u, 32u}) {
        ok = ok && truncateSet(wideD, m) == truncateSet(denD(p.main, p, m), m);
        ok = ok && truncateSet(wideO, m) == truncateSet(denO(p.main, p, m), m);
      }
    }
    ok = ok && programs == 50;
    gate.report(8, ok,
                "budget truncation coherence on 50 programs at m in {4,8,16,32}",
                secondsSince(t0));
  } catch (const std::exception& e) {
    gate.report(8, false, std::string("exception: ") + e.what(), 0.0);
  }

  // 9. Discrimination smoke tests.
  try {
    auto t0 = Clock::now();
    bool ok = true;

    Program plain = parseProgram("run stop", Calculus::CCSN, 2);
    auto t1 = Clock::now();
    DiscriminationResult found = discriminate(
        Statement::act(Action::internal(b1)),
        Statement::act(Action::internal(b2)), plain, 1, 8);
    ok = ok && found.context.has_value() &&
         *found.context == Statement::hole() && secondsSince(t1) < 5.0;

    Program seqp = parseProgram("run b1; b2", Calculus::CCSN, 2);
    auto t2 = Clock::now();
    DiscriminationResult self = discriminate(seqp.main, seqp.main, seqp, 1, 8);
    ok = ok && !self.context.has_value() && secondsSince(t2) < 5.0;

    Program twoChan = parseProgram("chan c1 c2;\nrun stop", Calculus::CCSN, 2);
    Statement joint = parseProgram("chan c1 c2;\nrun c1&c2", Calculus::CCSN, 2).main;
    Statement seqd = parseProgram("chan c1 c2;\nrun c1; c2", Calculus::CCSN, 2).main;
    auto t3 = Clock::now();
    DiscriminationResult split = discriminate(joint, seqd, twoChan, 2, 12);
    ok = ok && split.context.has_value() && secondsSince(t3) < 5.0;
    if (split.context.has_value()) {
      TraceSet l = denO(fillContext(*split.context, joint), twoChan, 12);
      TraceSet r = denO(fillContext(*split.context, seqd), twoChan, 12);
      ok = ok && l != r;
    }

    gate.report(9, ok,
                "hole separates b1/b2, self never separated, joint vs "
                "sequenced found at depth <= 2, each < 5 s",
                secondsSince(t0));
  } catch (const std::exception& e) {
    gate.report(9, false, std::string("exception: ") + e.what(), 0.0);
  }

  std::cout << (gate.allPass ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL") << "\n";
  return gate.allPass ? 0 : 1;
}
