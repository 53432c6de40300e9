#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ccsn/errors.hpp"
#include "ccsn/gen.hpp"
#include "ccsn/operational.hpp"
#include "ccsn/parser.hpp"

using namespace ccsn;

namespace {

const ChannelName c1{"c1"};
const ChannelName c2{"c2"};
const Token b1{"b1"};
const Token b2{"b2"};

Statement internal(const char* b) {
  return Statement::act(Action::internal(Token{b}));
}

Trace tr(std::vector<Token> symbols, Terminator end = Terminator::Eps) {
  return Trace{std::move(symbols), end};
}

Program ccsn2(const std::string& text) {
  return parseProgram(text, Calculus::CCSN, 2);
}

}  // namespace

TEST_CASE("the initial resumption is the axiom") {
  const Resumption r0 = initialResumption();
  CHECK(r0.sync.empty());
  CHECK(r0.iset.empty());
  CHECK(r0.ids == std::vector<Identifier>{Identifier::hole()});
  CHECK(r0.kbag.domain().empty());
  CHECK(r0.kbag.defaultValue() == RRes::terminated());
  CHECK(wellFormed(r0, 2));
  CHECK(measure(r0) == std::pair<std::size_t, std::size_t>{0, 1});
}

TEST_CASE("collapse rebuilds structure from bound positions") {
  const Identifier h = Identifier::hole();
  const Bag<RRes> empty{RRes::terminated()};
  CHECK(collapseK(h, empty) == RRes::terminated());

  const Statement x = internal("b1");
  const Statement y = internal("b2");
  CHECK(collapseK(h, empty.bind(h, RRes::of(x))) == RRes::of(x));

  // restriction is rebuilt around pending work and dissolves otherwise
  CHECK(collapseK(h, empty.bind(h.extendRestrict(c1), RRes::of(x))) ==
        RRes::of(Statement::restricted(x, c1)));
  CHECK(collapseK(h, empty.bind(h.extendRestrict(c1), RRes::terminated())) ==
        RRes::terminated());

  // sequencing: a terminated side dissolves into the other
  const Bag<RRes> seq = empty.bind(h.extendSeqLeft(), RRes::of(x))
                            .bind(h.extendSeqMark(), RRes::of(y));
  CHECK(collapseK(h, seq) == RRes::of(Statement::seq(x, y)));
  CHECK(collapseK(h, empty.bind(h.extendSeqLeft(), RRes::terminated())
                            .bind(h.extendSeqMark(), RRes::of(y))) == RRes::of(y));
  CHECK(collapseK(h, empty.bind(h.extendSeqLeft(), RRes::of(x))
                            .bind(h.extendSeqMark(), RRes::terminated())) ==
        RRes::of(x));

  // parallel: both sides pending rebuild the merge
  const Bag<RRes> par = empty.bind(h.extendParLeft(), RRes::of(x))
                            .bind(h.extendParRight(), RRes::of(y));
  CHECK(collapseK(h, par) == RRes::of(Statement::merge(x, y)));
  CHECK(collapseK(h, empty.bind(h.extendParLeft(), RRes::terminated())
                            .bind(h.extendParRight(), RRes::of(y))) == RRes::of(y));

  // nesting composes
  const Bag<RRes> nested =
      empty.bind(h.extendParLeft().extendRestrict(c2), RRes::of(x))
          .bind(h.extendParRight(), RRes::of(y));
  CHECK(collapseK(h, nested) ==
        RRes::of(Statement::merge(Statement::restricted(x, c2), y)));

  CHECK_THROWS_AS(collapseK(h, empty.bind(h.extendRestrict(c1), RRes::of(x))
                                     .bind(h.extendRestrict(c2), RRes::of(y))),
                  AmbiguousRestrictionError);
}

TEST_CASE("step fires emission candidates and finishes outcomes") {
  const Program p = ccsn2("run b1; b2");
  CHECK(step(Configuration::finalOf(RRes::terminated()), p).empty());

  const SuccessorSet s1 = step(Configuration::running(p.main, initialResumption()), p);
  REQUIRE(s1.size() == 1);
  CHECK(s1.begin()->first == b1);
  CHECK(s1.begin()->second == Configuration::finalOf(RRes::of(internal("b2"))));

  const SuccessorSet s2 = step(Configuration::finalOf(RRes::of(internal("b2"))), p);
  REQUIRE(s2.size() == 1);
  CHECK(s2.begin()->first == b2);
  CHECK(s2.begin()->second == Configuration::finalOf(RRes::terminated()));

  const Program q = ccsn2("run b1 + b2");
  const SuccessorSet sc = step(Configuration::running(q.main, initialResumption()), q);
  CHECK(sc.size() == 2);
}

TEST_CASE("trace sets of the worked examples") {
  CHECK(denO(ccsn2("run (b1 || b2); stop").main, ccsn2("run (b1 || b2); stop"), 16) ==
        TraceSet{tr({b1, b2}, Terminator::Delta), tr({b2, b1}, Terminator::Delta)});

  const Program x2 =
      ccsn2("chan c1 c2;\nrun (((b1; c1&c2) || ~c1)\\c1 || ~c2); (b2 + b3)");
  CHECK(denO(x2.main, x2, 16) ==
        TraceSet{tr({b1, tauToken(), b2}), tr({b1, tauToken(), Token{"b3"}})});

  const Program x3 = ccsn2("chan c1 c2;\nrun ((c1&c2 || ~c1)\\c1) || ~c2");
  CHECK(denO(x3.main, x3, 16) == TraceSet{tr({tauToken()})});

  const Program x4 = parseProgram(
      "chan c1 c2 c3;\nrun ((~c1&c2; b1) || c1&~c3)\\c1 || (~c2&c3; b2)",
      Calculus::CCSNPLUS, 2);
  CHECK(denO(x4.main, x4, 16) ==
        TraceSet{tr({tauToken(), b1, b2}), tr({tauToken(), b2, b1})});
}

TEST_CASE("termination, deadlock, and recursion under a budget") {
  const Program stop = ccsn2("run stop");
  CHECK(denO(stop.main, stop, 4) == TraceSet{deltaTrace()});

  const Program one = ccsn2("run b1");
  CHECK(denO(one.main, one, 4) == TraceSet{tr({b1})});

  const Program loop = ccsn2("let y = b1; y;\nrun y");
  CHECK(denO(loop.main, loop, 3) == TraceSet{tr({b1, b1, b1}, Terminator::Cut)});
  CHECK(denO(loop.main, loop, 0) == TraceSet{cutTrace()});

  // blocking wins over the exhausted budget: the verdict is settled
  CHECK(denO(stop.main, stop, 0) == TraceSet{deltaTrace()});
  const Program done = ccsn2("run (b1 || b2); stop");
  CHECK(denO(done.main, done, 0) == TraceSet{cutTrace()});
}

TEST_CASE("restriction blocks unmatched channel work") {
  const Program p = ccsn2("chan c1;\nrun (c1)\\c1");
  CHECK(denO(p.main, p, 4) == TraceSet{deltaTrace()});
  const Program q = ccsn2("chan c1;\nrun (c1 || ~c1)\\c1");
  CHECK(denO(q.main, q, 4) == TraceSet{tr({tauToken()})});
  // an unrestricted lone input simply has nobody to talk to
  const Program r = ccsn2("chan c1;\nrun c1");
  CHECK(denO(r.main, r, 4) == TraceSet{deltaTrace()});
}

TEST_CASE("left variants restrict who moves first") {
  const Program lm = ccsn2("run b1 ||- b2");
  CHECK(denO(lm.main, lm, 8) == TraceSet{tr({b1, b2})});

  // the synchronous left merge insists on a joint step
  const Program ls = ccsn2("chan c1;\nrun c1 |- ~c1");
  CHECK(denO(ls.main, ls, 8) == TraceSet{tr({tauToken()})});
  const Program lsBlock = ccsn2("run b1 |- b2");
  CHECK(denO(lsBlock.main, lsBlock, 8) == TraceSet{deltaTrace()});

  const Program sm = ccsn2("chan c1;\nrun c1 | ~c1");
  CHECK(denO(sm.main, sm, 8) == TraceSet{tr({tauToken()})});
}

TEST_CASE("harvested resumptions are well formed, mutants are not") {
  const std::vector<std::string> sources{
      "run (b1 || b2); stop",
      "chan c1 c2;\nrun (((b1; c1&c2) || ~c1)\\c1 || ~c2); (b2 + b3)",
      "chan c1;\nrun (c1 || ~c1)\\c1 + b1",
      "let y = b1; y;\nrun y || b2",
  };
  for (const std::string& text : sources) {
    const Program p = ccsn2(text);
    const auto pairs = harvestResumptions(p, 200);
    CHECK(pairs.size() > 1);
    for (const auto& [x, rho] : pairs) {
      CAPTURE(text);
      CAPTURE(renderStatement(x));
      CHECK(wellFormed(rho, p.nbar));
      CHECK(rho.ids.size() == rho.sync.size() + 1);
    }
  }

  // hand-built shapes the formation rules cannot reach
  Resumption r = initialResumption();
  r.ids[0] = Identifier::seqMark();
  CHECK_FALSE(wellFormed(r, 2));

  r = initialResumption();
  r.sync.push_back(internal("b1"));
  CHECK_FALSE(wellFormed(r, 2));  // one position too few

  r = initialResumption();
  r.sync.push_back(internal("b1"));
  r.ids.push_back(Identifier::hole());
  CHECK_FALSE(wellFormed(r, 2));  // second position is no sibling

  r = initialResumption();
  r.kbag = Bag<RRes>(RRes::of(internal("b1")));
  CHECK_FALSE(wellFormed(r, 2));  // default must be terminated

  r = initialResumption();
  for (const char* t : {"u1", "u2", "u3"})
    r.iset.emplace(Action::internal(Token{t}), Identifier::hole());
  CHECK_FALSE(wellFormed(r, 2));  // offered set exceeds nbar
}

TEST_CASE("unguarded recursion is rejected when reached") {
  Program bad;
  bad.decls.emplace("y", Statement::merge(Statement::var("y"), internal("b1")));
  bad.main = Statement::var("y");
  CHECK_THROWS_AS(denO(bad.main, bad, 4), UnguardedRecursionError);
}

TEST_CASE("budgets agree after truncation on random programs") {
  Rng rng(77);
  for (int i = 0; i < 40; ++i) {
    const Calculus calc = i % 2 ? Calculus::CCSNPLUS : Calculus::CCSN;
    const Program p = randomProgram(rng, calc);
    const TraceSet wide = denO(p.main, p, 16);
    for (const std::size_t m : {0u, 1u, 2u, 3u, 5u, 8u}) {
      CAPTURE(renderProgram(p));
      CAPTURE(m);
      CHECK(truncateSet(wide, m) == truncateSet(denO(p.main, p, m), m));
    }
  }
}
