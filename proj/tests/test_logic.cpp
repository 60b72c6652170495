#include <doctest.h>

#include <algorithm>
#include <random>

#include "support.hpp"
#include "unrel/errors.hpp"
#include "unrel/parser.hpp"
#include "unrel/partition.hpp"
#include "unrel/qformula.hpp"

using namespace unrel;

TEST_CASE("parse: grammar examples") {
  const Formula a = atom("a"), b = atom("b");
  CHECK(parse_ltlf("G(a -> N(b))") == always(lor(lnot(a), next(b))));
  CHECK(parse_ltlf("a U b") == until(a, b));
  CHECK(parse_ltlf("X a") == wnext(a));
  CHECK(parse_ltlf("a R b") == release(a, b));
  CHECK(parse_ltlf("true & !false") == land(tt(), lnot(ff())));
}

TEST_CASE("parse: precedence and associativity") {
  const Formula a = atom("a"), b = atom("b"), c = atom("c");
  CHECK(parse_ltlf("a | b & c") == lor(a, land(b, c)));
  CHECK(parse_ltlf("a & b U c") == land(a, until(b, c)));
  CHECK(parse_ltlf("a U b U c") == until(a, until(b, c)));
  CHECK(parse_ltlf("a -> b -> c") == implies(a, implies(b, c)));
  CHECK(parse_ltlf("a <-> b <-> c") == iff(iff(a, b), c));
  CHECK(parse_ltlf("a -> b <-> c") == iff(implies(a, b), c));
  CHECK(parse_ltlf("!a U b") == until(lnot(a), b));
  CHECK(parse_ltlf("G F a") == always(eventually(a)));
  CHECK(parse_ltlf("N_x & XX") == land(atom("N_x"), atom("XX")));
}

TEST_CASE("parse: errors carry columns") {
  try {
    parse_ltlf("F(");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.column() == 3);
  }
  try {
    parse_ltlf("a & $");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.column() == 5);
    CHECK(std::string(e.what()).find("unknown token") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_ltlf(""), ParseError);
  CHECK_THROWS_AS(parse_ltlf("   "), ParseError);
  CHECK_THROWS_AS(parse_ltlf("(a"), ParseError);
  CHECK_THROWS_AS(parse_ltlf("a b"), ParseError);
  CHECK_THROWS_AS(parse_ltlf("a &"), ParseError);
}

TEST_CASE("parse: print round trip") {
  std::mt19937 rng(7);
  const std::vector<std::string> props{"a", "b", "c"};
  for (int i = 0; i < 500; ++i) {
    const Formula f = testsupport::random_formula(rng, props, 5);
    const Formula g = parse_ltlf(to_string(f));
    CHECK(g == f);
    CHECK(parse_ltlf(to_string(g)) == g);
  }
}

TEST_CASE("partition: sections") {
  const Partition p = parse_partition(".inputs: a b c\n.outputs: x\n.unobservables: b c");
  CHECK(p.outputs == std::vector<std::string>{"x"});
  CHECK(p.reliable == std::vector<std::string>{"a"});
  CHECK(p.unreliable == std::vector<std::string>{"b", "c"});
  CHECK(p.alphabet().names() == std::vector<std::string>{"x", "a", "b", "c"});
  CHECK(p.unreliable_mask() == 0b1100);
  CHECK(p.output_mask() == 0b0001);

  const Partition q = parse_partition(".inputs: a\n.outputs: x");
  CHECK(q.reliable == std::vector<std::string>{"a"});
  CHECK(q.unreliable.empty());

  CHECK_THROWS_AS(parse_partition(".inputs: a\n.outputs: x\n.unobservables: q"), InvalidInput);
  CHECK_THROWS_AS(parse_partition(".inputs: a x\n.outputs: x"), InvalidInput);
  CHECK_THROWS_AS(parse_partition(".inputs: a"), InvalidInput);
  CHECK(parse_partition(to_part_text(p)) == p);
}

TEST_CASE("ltlf file: two lines") {
  const GoalPair g = parse_ltlf_file("F a\r\n\r\nG b\r\n");
  CHECK(g.main == eventually(atom("a")));
  CHECK(g.backup == always(atom("b")));
  CHECK_THROWS_AS(parse_ltlf_file("F a\n"), InvalidInput);
  CHECK_THROWS_AS(parse_ltlf_file("F a\nG b\nc\n"), InvalidInput);
  try {
    parse_ltlf_file("a\nb &");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
}

TEST_CASE("eval_trace: definition examples") {
  const Alphabet ab({"a", "b"});
  CHECK_FALSE(eval_trace(ab, make_trace(ab, {{"a"}}), 1, next(atom("a"))));
  CHECK(eval_trace(ab, make_trace(ab, {{"a"}}), 1, wnext(atom("a"))));
  CHECK(eval_trace(ab, make_trace(ab, {{"a"}, {"b"}}), 1, until(atom("a"), atom("b"))));
  CHECK(eval_trace(ab, make_trace(ab, {{}, {}}), 1, always(lnot(atom("a")))));
  CHECK_FALSE(eval_trace(ab, make_trace(ab, {{"a"}, {}}), 1, until(atom("a"), atom("b"))));
  CHECK(eval_trace(ab, make_trace(ab, {{}, {"a"}}), 2, atom("a")));
  CHECK_THROWS_AS(eval_trace(ab, make_trace(ab, {{}}), 2, atom("a")), InvalidInput);
  CHECK_THROWS_AS(eval_trace(ab, make_trace(ab, {{}}), 0, atom("a")), InvalidInput);
  CHECK_THROWS_AS(eval_trace(ab, Trace{4}, 1, atom("a")), InvalidInput);
}

TEST_CASE("eval_trace: derived operators match their expansions") {
  const Alphabet abc({"a", "b", "c"});
  std::mt19937 rng(11);
  std::vector<Formula> corpus;
  for (int i = 0; i < 60; ++i) corpus.push_back(testsupport::random_formula(rng, abc.names(), 3));
  std::size_t mismatches = 0;
  for (const Formula& f : corpus) {
    const TraceEvaluator direct(f, abc);
    const TraceEvaluator expanded(expand_derived(f), abc);
    testsupport::for_each_trace_upto(3, 4, [&](const Trace& t) {
      for (std::size_t i = 1; i <= t.length(); ++i)
        if (direct.evaluate(t, i) != expanded.evaluate(t, i)) ++mismatches;
    });
  }
  CHECK(mismatches == 0);
}

TEST_CASE("expand_unreliable") {
  const Alphabet ua({"u", "a"});
  auto r = expand_unreliable(ua, make_trace(ua, {{"u", "a"}}), {"u"});
  std::sort(r.begin(), r.end());
  CHECK(r == std::vector<Trace>{make_trace(ua, {{"a"}}), make_trace(ua, {{"u", "a"}})});
  CHECK(expand_unreliable(ua, make_trace(ua, {{"a"}}), {}) == std::vector<Trace>{make_trace(ua, {{"a"}})});
  CHECK(expand_unreliable(ua, make_trace(ua, {{}, {}}), {"u"}).size() == 4);
  CHECK_THROWS_AS(expand_unreliable(Trace(std::vector<Letter>(21, 0)), 1), ResourceError);
}

TEST_CASE("expand_unreliable: an equivalence relation") {
  const Letter mask = 0b101;
  testsupport::for_each_trace_upto(3, 2, [&](const Trace& t) {
    const auto cls = expand_unreliable(t, mask);
    CHECK(std::find(cls.begin(), cls.end(), t) != cls.end());
    for (const Trace& u : cls) {
      const auto back = expand_unreliable(u, mask);
      CHECK(std::find(back.begin(), back.end(), t) != back.end());
    }
    unrel::for_each_trace(3, t.length(), [&](const Trace& u) {
      const bool related = std::find(cls.begin(), cls.end(), u) != cls.end();
      bool agree = true;
      for (std::size_t i = 0; i < t.length(); ++i) agree = agree && ((t.letters[i] ^ u.letters[i]) & ~mask) == 0;
      CHECK(related == agree);
    });
  });
}

TEST_CASE("eval_qltlf: examples") {
  const Alphabet a({"a"});
  const Formula u = atom("u");
  CHECK(eval_qltlf(a, Trace{0}, 1, QFormula{{{Quantifier::Exists, "u"}}, u}));
  CHECK_FALSE(eval_qltlf(a, Trace{0}, 1, QFormula{{{Quantifier::Forall, "u"}}, u}));
  CHECK(eval_qltlf(a, Trace{1}, 1, QFormula{{{Quantifier::Forall, "u"}}, atom("a")}));
  const QFormula copy{{{Quantifier::Exists, "u"}}, always(iff(u, atom("a")))};
  testsupport::for_each_trace_upto(1, 3, [&](const Trace& t) { CHECK(eval_qltlf(a, t, 1, copy)); });
  const QFormula big{{{Quantifier::Exists, "u"}, {Quantifier::Forall, "v"}}, tt()};
  CHECK_THROWS_AS(eval_qltlf(a, Trace(std::vector<Letter>(11, 0)), 1, big), ResourceError);
  CHECK_THROWS_AS((QFormula{{{Quantifier::Exists, "u"}, {Quantifier::Forall, "u"}}, tt()}.validate()), InvalidInput);
}

TEST_CASE("alternation_count") {
  using Q = Quantifier;
  CHECK(alternation_count(std::vector<QuantifiedVar>{}) == 0);
  CHECK(alternation_count({{Q::Forall, "a"}, {Q::Forall, "b"}}) == 0);
  CHECK(alternation_count({{Q::Forall, "a"}, {Q::Exists, "b"}, {Q::Forall, "c"}}) == 2);
}

TEST_CASE("to_pnf: examples") {
  const Formula m = eventually(atom("a"));
  const Formula b = always(lor(atom("u1"), atom("u2")));
  const QExpr e = QExpr::conjunction(QExpr::leaf(m), QExpr::forall("u1", QExpr::forall("u2", QExpr::leaf(b))));
  const QFormula q = to_pnf(e);
  CHECK(q.prefix == std::vector<QuantifiedVar>{{Quantifier::Forall, "u1"}, {Quantifier::Forall, "u2"}});
  CHECK(q.matrix == land(m, b));
  CHECK(alternation_count(q) == 0);

  const QFormula already{{{Quantifier::Exists, "u"}, {Quantifier::Forall, "v"}}, until(atom("u"), atom("v"))};
  CHECK(to_pnf(already) == already);

  const QFormula neg = to_pnf(QExpr::negation(QExpr::exists("u", QExpr::leaf(atom("u")))));
  CHECK(neg.prefix == std::vector<QuantifiedVar>{{Quantifier::Forall, "u"}});
  CHECK(neg.matrix == lnot(atom("u")));

  CHECK_THROWS_AS(to_pnf(QExpr::temporal(Op::Eventually, {QExpr::exists("u", QExpr::leaf(atom("u")))})),
                  InvalidInput);
}

TEST_CASE("to_pnf: renames captured variables") {
  // u is free on the left and bound on the right.
  const QExpr e =
      QExpr::conjunction(QExpr::leaf(atom("u")), QExpr::forall("u", QExpr::leaf(always(atom("u")))));
  const QFormula q = to_pnf(e);
  REQUIRE(q.prefix.size() == 1);
  CHECK(q.prefix[0].name == "u_1");
  CHECK(q.matrix == land(atom("u"), always(atom("u_1"))));
}

namespace {

QExpr random_qexpr(std::mt19937& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, 5);
  const std::vector<std::string> props{"a", "u", "v"};
  if (depth == 0) return QExpr::leaf(testsupport::random_formula(rng, props, 2));
  const std::vector<std::string> vars{"u", "v"};
  std::uniform_int_distribution<int> var(0, 1);
  switch (pick(rng)) {
    case 0: return QExpr::negation(random_qexpr(rng, depth - 1));
    case 1: return QExpr::conjunction(random_qexpr(rng, depth - 1), random_qexpr(rng, depth - 1));
    case 2: return QExpr::disjunction(random_qexpr(rng, depth - 1), random_qexpr(rng, depth - 1));
    case 3: return QExpr::exists(vars[var(rng)], random_qexpr(rng, depth - 1));
    case 4: return QExpr::forall(vars[var(rng)], random_qexpr(rng, depth - 1));
    default: return QExpr::leaf(testsupport::random_formula(rng, props, 2));
  }
}

std::size_t bound_count(const QExpr& e) {
  std::size_t n = e.kind() == QExpr::Kind::Exists || e.kind() == QExpr::Kind::Forall;
  for (const auto& c : e.children()) n += bound_count(c);
  return n;
}

}  // namespace

TEST_CASE("to_pnf: soundness against nested semantics") {
  std::mt19937 rng(23);
  const Alphabet auv({"a", "u", "v"});
  int checked = 0;
  for (int i = 0; i < 150; ++i) {
    const QExpr e = random_qexpr(rng, 3);
    if (bound_count(e) > 4) continue;
    const QFormula q = to_pnf(e);
    ++checked;
    testsupport::for_each_trace_upto(3, 2, [&](const Trace& t) {
      CHECK(eval_qltlf(auv, t, 1, e, 20) == eval_qltlf(auv, t, 1, q, 20));
    });
  }
  CHECK(checked > 50);
}
