#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ccsn/denotational.hpp"
#include "ccsn/errors.hpp"
#include "ccsn/gen.hpp"
#include "ccsn/parser.hpp"

using namespace ccsn;

namespace {

const ChannelName c1{"c1"};
const Token tau = tauToken();
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

TEST_CASE("denotation terms compare structurally") {
  const DenTerm a = DenTerm::ofStmt(internal("b1"));
  CHECK(a == DenTerm::ofStmt(internal("b1")));
  CHECK(a != DenTerm::ofStmt(internal("b2")));
  CHECK(DenTerm::restrictT(a, c1) == DenTerm::restrictT(a, c1));
  CHECK(DenTerm::restrictT(a, c1) != DenTerm::restrictT(a, ChannelName{"c2"}));
  CHECK(DenTerm::seqT(a, a) != DenTerm::choiceT(a, a));
  CHECK(DenTerm::mergeT(a, DenTerm::ofStmt(internal("b2"))) ==
        DenTerm::mergeT(a, DenTerm::ofStmt(internal("b2"))));
  CHECK(Denotation::empty() != Denotation::of(a));
  CHECK(Denotation::of(a) == Denotation::of(a));
}

TEST_CASE("the initial continuation is the lifted axiom") {
  const Continuation g = gamma0();
  CHECK(g.sync.empty());
  CHECK(g.iset.empty());
  CHECK(g.ids == std::vector<Identifier>{Identifier::hole()});
  CHECK(g.kbag.domain().empty());
  CHECK(g.kbag.defaultValue() == Denotation::empty());
  CHECK(cardU(g) == 0);
  CHECK(cardGamma(g, 2));
}

TEST_CASE("continuation transformers reshape positions and bindings") {
  const Identifier h = Identifier::hole();
  const DenTerm d = DenTerm::ofStmt(internal("b2"));

  const Continuation gr = contTransform(ContTransform::restrictChan(c1), gamma0(), 2);
  CHECK(gr.ids.front() == h.extendRestrict(c1));
  CHECK(gr.kbag == gamma0().kbag);

  const Continuation gs = contTransform(ContTransform::addSeq(d), gamma0(), 2);
  CHECK(gs.ids.front() == h.extendSeqLeft());
  CHECK(gs.kbag.lookup(h.extendSeqMark()) == Denotation::of(d));
  CHECK(gs.kbag.domain().size() == 1);

  const Continuation gm = contTransform(ContTransform::addLeftMerge(d), gamma0(), 2);
  CHECK(gm.ids.front() == h.extendParLeft());
  CHECK(gm.kbag.lookup(h.extendParRight()) == Denotation::of(d));
  CHECK(gm.sync.empty());

  const Continuation gp = contTransform(ContTransform::addLeftSync(d), gamma0(), 2);
  CHECK(gp.sync == std::vector<DenTerm>{d});
  CHECK(gp.ids == std::vector<Identifier>{h.extendParLeft(), h.extendParRight()});
  CHECK(gp.kbag == gamma0().kbag);

  // capacity: nbar=2 admits one more synchronous push, then none
  const Continuation gpp = contTransform(ContTransform::addLeftSync(d), gp, 2);
  CHECK(gpp.sync.size() == 2);
  CHECK_FALSE(cardGamma(gpp, 2));
  CHECK_THROWS_AS(contTransform(ContTransform::addLeftSync(d), gpp, 2),
                  GuardViolationError);
}

TEST_CASE("bag collapse mirrors the operational one") {
  const Identifier h = Identifier::hole();
  const Bag<Denotation> empty{Denotation::empty()};
  CHECK(collapseKD(h, empty) == Denotation::empty());

  const DenTerm x = DenTerm::ofStmt(internal("b1"));
  const DenTerm y = DenTerm::ofStmt(internal("b2"));
  CHECK(collapseKD(h, empty.bind(h, Denotation::of(x))) == Denotation::of(x));
  CHECK(collapseKD(h, empty.bind(h.extendRestrict(c1), Denotation::of(x))) ==
        Denotation::of(DenTerm::restrictT(x, c1)));
  CHECK(collapseKD(h, empty.bind(h.extendSeqLeft(), Denotation::of(x))
                            .bind(h.extendSeqMark(), Denotation::of(y))) ==
        Denotation::of(DenTerm::seqT(x, y)));
  CHECK(collapseKD(h, empty.bind(h.extendSeqLeft(), Denotation::empty())
                            .bind(h.extendSeqMark(), Denotation::of(y))) ==
        Denotation::of(y));
  CHECK(collapseKD(h, empty.bind(h.extendParLeft(), Denotation::of(x))
                            .bind(h.extendParRight(), Denotation::of(y))) ==
        Denotation::of(DenTerm::mergeT(x, y)));
  CHECK_THROWS_AS(collapseKD(h, empty.bind(h.extendRestrict(c1), Denotation::of(x))
                                      .bind(h.extendRestrict(ChannelName{"c2"}),
                                            Denotation::of(y))),
                  AmbiguousRestrictionError);
}

TEST_CASE("single actions pad with the owed silent steps") {
  const Program p = ccsn2("run b1");
  CHECK(denD(p.main, p, 8) == TraceSet{tr({tau, tau, b1})});

  const Program stop = ccsn2("run stop");
  CHECK(denD(stop.main, stop, 8) == TraceSet{tr({tau, tau})});

  const Program blocked = ccsn2("chan c1;\nrun c1");
  CHECK(denD(blocked.main, blocked, 8) == TraceSet{tr({tau, tau})});
}

TEST_CASE("trace sets of the worked examples") {
  const Program x1 = ccsn2("run (b1 || b2); stop");
  CHECK(denD(x1.main, x1, 32) ==
        TraceSet{tr({tau, tau, b1, tau, tau, b2, tau, tau}),
                 tr({tau, tau, b2, tau, tau, b1, tau, tau})});

  const Program x2 =
      ccsn2("chan c1 c2;\nrun (((b1; c1&c2) || ~c1)\\c1 || ~c2); (b2 + b3)");
  CHECK(denD(x2.main, x2, 32) ==
        TraceSet{tr({tau, tau, b1, tau, tau, tau, tau, tau, b2}),
                 tr({tau, tau, b1, tau, tau, tau, tau, tau, Token{"b3"}})});

  const Program x3 = ccsn2("chan c1 c2;\nrun ((c1&c2 || ~c1)\\c1) || ~c2");
  CHECK(denD(x3.main, x3, 32) == TraceSet{tr({tau, tau, tau})});

  const Program x4 = parseProgram(
      "chan c1 c2 c3;\nrun ((~c1&c2; b1) || c1&~c3)\\c1 || (~c2&c3; b2)",
      Calculus::CCSNPLUS, 2);
  CHECK(denD(x4.main, x4, 32) ==
        TraceSet{tr({tau, tau, tau, tau, tau, b1, tau, tau, b2}),
                 tr({tau, tau, tau, tau, tau, b2, tau, tau, b1})});
}

TEST_CASE("budgets cut mid prelude and mid trace") {
  const Program x1 = ccsn2("run (b1 || b2); stop");
  CHECK(denD(x1.main, x1, 0) == TraceSet{cutTrace()});
  CHECK(denD(x1.main, x1, 1) == TraceSet{tr({tau}, Terminator::Cut)});
  CHECK(denD(x1.main, x1, 3) == TraceSet{tr({tau, tau, b1}, Terminator::Cut),
                                         tr({tau, tau, b2}, Terminator::Cut)});

  const Program loop = ccsn2("let y = b1; y;\nrun y");
  CHECK(denD(loop.main, loop, 6) == TraceSet{tr({tau, tau, b1, tau, tau, b1},
                                                Terminator::Cut)});
}

TEST_CASE("budgets agree after truncation on random programs") {
  Rng rng(78);
  for (int i = 0; i < 30; ++i) {
    const Calculus calc = i % 2 ? Calculus::CCSNPLUS : Calculus::CCSN;
    const Program p = randomProgram(rng, calc);
    const TraceSet wide = denD(p.main, p, 24);
    for (const std::size_t m : {0u, 1u, 2u, 4u, 7u, 12u}) {
      CAPTURE(renderProgram(p));
      CAPTURE(m);
      CHECK(truncateSet(wide, m) == truncateSet(denD(p.main, p, m), m));
    }
  }
  CHECK(opaDefensiveHits() == 0);
}
