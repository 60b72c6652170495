#include <doctest.h>

#include <random>

#include "properties.hpp"
#include "support.hpp"
#include "unrel/errors.hpp"
#include "unrel/parser.hpp"
#include "unrel/progression.hpp"
#include "unrel/qltlf.hpp"

using namespace unrel;

namespace {

QFormula dual(const QFormula& q) {
  QFormula d = q;
  for (auto& v : d.prefix) v.quantifier = v.quantifier == Quantifier::Exists ? Quantifier::Forall : Quantifier::Exists;
  d.matrix = lnot(q.matrix);
  return d;
}

}  // namespace

TEST_CASE("quantifier blocks") {
  using Q = Quantifier;
  const auto b = quantifier_blocks({{Q::Forall, "a"}, {Q::Forall, "b"}, {Q::Exists, "c"}});
  REQUIRE(b.size() == 2);
  CHECK(b[0].variables == std::vector<std::string>{"a", "b"});
  CHECK(b[1].kind == Q::Exists);
}

TEST_CASE("qltlf_to_dfa: examples") {
  const Alphabet au({"a", "u"});
  const Formula a = atom("a"), u = atom("u");
  CHECK(equivalent(qltlf_to_dfa(QFormula{{}, until(a, u)}, au), ltlf_to_dfa(until(a, u), au)));
  CHECK(equivalent(qltlf_to_dfa(QFormula{{{Quantifier::Forall, "u"}}, a}, au), ltlf_to_dfa(a, au)));

  const Dfa copy = qltlf_to_dfa(QFormula{{{Quantifier::Exists, "u"}}, always(iff(u, a))}, au);
  testsupport::for_each_trace_upto(2, 3, [&](const Trace& t) { CHECK(copy.accepts(t)); });

  const Dfa none = qltlf_to_dfa(QFormula{{{Quantifier::Forall, "u"}}, always(lnot(u))}, au);
  CHECK_FALSE(shortest_accepted(none));

  CHECK_THROWS_AS(qltlf_to_dfa(QFormula{{{Quantifier::Forall, "w"}}, a}, au), InvalidInput);
}

TEST_CASE("qltlf_to_dfa: agrees with the brute-force semantics") {
  const auto tally = testsupport::check_qltlf_agreement(77, 300);
  CHECK(tally.checks > 10000);
  CHECK(tally.mismatches == 0);
}

TEST_CASE("qltlf_to_dfa: quantified variables are irrelevant") {
  std::mt19937 rng(5);
  const Alphabet al({"a", "u", "v"});
  for (int i = 0; i < 60; ++i) {
    QFormula qf{{{Quantifier::Forall, "u"}, {Quantifier::Exists, "v"}},
                testsupport::random_formula(rng, al.names(), 3)};
    const Dfa d = qltlf_to_dfa(qf, al);
    testsupport::for_each_trace_upto(3, 3, [&](const Trace& t) {
      const bool base = d.accepts(t);
      for_each_rewriting(t, 0b110, [&](const Trace& r) {
        CHECK(d.accepts(r) == base);
        return true;
      });
    });
    CHECK_NOTHROW(restrict_alphabet(d, Alphabet({"a"})));
  }
}

TEST_CASE("qltlf_to_dfa: universal blocks match the dual route") {
  std::mt19937 rng(8);
  const Alphabet al({"a", "b", "u", "v"});
  for (int i = 0; i < 60; ++i) {
    QFormula qf{{{Quantifier::Forall, "u"}}, testsupport::random_formula(rng, al.names(), 3)};
    if (i % 3 == 1) qf.prefix.push_back({Quantifier::Forall, "v"});
    if (i % 3 == 2) qf.prefix.push_back({Quantifier::Exists, "v"});
    CHECK(equivalent(qltlf_to_dfa(qf, al), complement(qltlf_to_dfa(dual(qf), al))));
  }
}

TEST_CASE("mso_export: translation clauses") {
  const Formula a = atom("a"), b = atom("b");
  const std::string atom_text = mso_export(QFormula{{}, a});
  CHECK(atom_text.find("x in A") != std::string::npos);
  CHECK(atom_text.find("var2 A;") != std::string::npos);
  CHECK(atom_text.find("all2") == std::string::npos);

  const std::string next_text = mso_export(QFormula{{}, next(a)});
  CHECK(next_text.find("ex1 y1: y1 = x + 1 & y1 <= last & y1 in A") != std::string::npos);

  const std::string until_text = mso_export(QFormula{{}, until(a, b)});
  CHECK(until_text.find("ex1 y1: x <= y1 & y1 <= last & y1 in B") != std::string::npos);
  CHECK(until_text.find("(all1 z2: (x <= z2 & z2 < y1) => z2 in A)") != std::string::npos);

  const std::string q = mso_export(QFormula{{{Quantifier::Exists, "u"}, {Quantifier::Forall, "v"}}, land(atom("u"), lnot(atom("v")))});
  CHECK(q.find("ex2 U: all2 V: ") != std::string::npos);
  CHECK(q.find("~(x in V)") != std::string::npos);
  CHECK(q.find("var2") == std::string::npos);

  const std::string text = mso_export(QFormula{{}, always(implies(a, next(b)))}, {"b", "a"});
  CHECK(text.find("var2 B, A;") != std::string::npos);
  CHECK(text == mso_export(QFormula{{}, always(implies(a, next(b)))}, {"b", "a"}));
}

TEST_CASE("mona names") {
  CHECK(mona_names({"a", "A", "poison"}) == std::vector<std::string>{"A", "A_1", "POISON"});
}
