#include <doctest.h>

#include <random>

#include "properties.hpp"
#include "support.hpp"
#include "unrel/errors.hpp"
#include "unrel/progression.hpp"

using namespace unrel;

namespace {

// States: 0 = no a yet, 1 = seen a.
Dfa contains_a(const Alphabet& al) {
  Dfa d(al, 2, 0);
  const Letter a = al.bit("a");
  for (Letter l = 0; l < al.letter_count(); ++l) {
    d.set_next(0, l, (l & a) ? 1 : 0);
    d.set_next(1, l, 1);
  }
  d.set_final(1, true);
  return d;
}

Dfa universal(const Alphabet& al) {
  Dfa d(al, 1, 0);
  d.set_final(0, true);
  return d;
}

bool same_language_upto(const Dfa& x, const Dfa& y, std::size_t len) {
  bool same = true;
  testsupport::for_each_trace_upto(x.width(), len, [&](const Trace& t) { same = same && x.accepts(t) == y.accepts(t); });
  return same;
}

}  // namespace

TEST_CASE("accepts: basics") {
  const Alphabet al({"a"});
  const Dfa d = contains_a(al);
  CHECK_FALSE(d.accepts(Trace{}));
  CHECK_FALSE(universal(al).accepts(Trace{}));
  CHECK(d.accepts(Trace{0, 1}));
  CHECK_FALSE(d.accepts(Trace{0, 0}));
  CHECK_THROWS_AS(d.accepts(Trace{2}), InvalidInput);

  Nfa n(al);
  n.add_state(false);
  n.push_successors({});
  n.push_successors({});
  n.add_state(true);
  n.push_successors({});
  n.push_successors({});
  n.add_initial(0);
  testsupport::for_each_trace_upto(1, 3, [&](const Trace& t) { CHECK_FALSE(n.accepts(t)); });
}

TEST_CASE("determinize: examples") {
  const Alphabet al({"a"});
  // Guess-and-check NFA for "some letter contains a".
  Nfa n(al);
  n.add_state(false);
  n.push_successors({0});
  n.push_successors({0, 1});
  n.add_state(true);
  n.push_successors({1});
  n.push_successors({1});
  n.add_initial(0);
  const Dfa d = determinize(n);
  CHECK(d.state_count() == 2);
  CHECK(same_language_upto(d, contains_a(al), 3));

  const Dfa again = determinize(to_nfa(contains_a(al)));
  CHECK(again.state_count() == 2);
  CHECK(equivalent(again, contains_a(al)));

  Nfa empty(al);
  empty.add_state(false);
  empty.push_successors({});
  empty.push_successors({});
  empty.add_initial(0);
  const Dfa e = determinize(empty);
  CHECK(e.final_count() == 0);
  CHECK_FALSE(shortest_accepted(e));
}

TEST_CASE("determinize: subset cap") {
  std::mt19937 rng(3);
  const Alphabet al({"p", "q"});
  const Nfa n = testsupport::random_nfa(rng, al, 12, 0.5);
  Limits tight;
  tight.max_subsets = 4;
  CHECK_THROWS_AS(determinize(n, tight), ResourceError);
}

TEST_CASE("complement: examples") {
  const Alphabet al({"a"});
  const Dfa d = contains_a(al);
  CHECK(complement(complement(d)) == d);
  CHECK(complement(universal(al)).final_count() == 0);
  CHECK(complement(d).accepts(Trace{0}));
  CHECK_FALSE(complement(d).accepts(Trace{1}));
}

TEST_CASE("product: examples") {
  const Alphabet al({"a"});
  const Dfa d = contains_a(al);
  CHECK(equivalent(product(d, universal(al)), d));
  CHECK_FALSE(shortest_accepted(product(d, complement(d))));

  Dfa first_a(al, 3, 0);  // 0 start, 1 accepting sink, 2 rejecting sink
  for (Letter l = 0; l < 2; ++l) {
    first_a.set_next(0, l, l ? 1 : 2);
    first_a.set_next(1, l, 1);
    first_a.set_next(2, l, 2);
  }
  first_a.set_final(1, true);
  Dfa len2(al, 3, 0);
  for (Letter l = 0; l < 2; ++l) {
    len2.set_next(0, l, 1);
    len2.set_next(1, l, 2);
    len2.set_next(2, l, 2);
  }
  len2.set_final(2, true);
  const Dfa p = product(first_a, len2);
  CHECK(p.accepts(Trace{1, 0}));
  CHECK_FALSE(p.accepts(Trace{1}));
  CHECK_FALSE(p.accepts(Trace{0, 1}));
  CHECK(p.accepts(Trace{1, 1, 0}));

  CHECK_THROWS_AS(product(d, universal(Alphabet({"b"}))), InvalidInput);
}

TEST_CASE("exist_abstract: examples") {
  const Alphabet al({"y", "u"});
  Nfa n(al);
  n.add_state(false);
  for (Letter l = 0; l < 4; ++l) n.push_successors(l == 0b11 ? std::vector<State>{1} : std::vector<State>{});
  n.add_state(true);
  for (Letter l = 0; l < 4; ++l) n.push_successors({});
  n.add_initial(0);

  const Nfa abs = exist_abstract(n, std::vector<std::string>{"u"});
  CHECK(abs.accepts(Trace{al.letter({"y"})}));
  CHECK(abs.accepts(Trace{al.letter({"y", "u"})}));
  CHECK_FALSE(abs.accepts(Trace{al.letter({"u"})}));
  CHECK_FALSE(n.accepts(Trace{al.letter({"y"})}));

  const Nfa same = exist_abstract(n, Letter{0});
  for (State s = 0; s < 2; ++s)
    for (Letter l = 0; l < 4; ++l)
      CHECK(std::vector<State>(same.begin(s, l), same.end(s, l)) == std::vector<State>(n.begin(s, l), n.end(s, l)));

  // u is never read: abstraction keeps the language.
  const Dfa yfirst = ltlf_to_dfa(eventually(atom("y")), al);
  const Dfa kept = determinize(exist_abstract(yfirst, al.bit("u")));
  CHECK(equivalent(kept, yfirst));

  CHECK_THROWS_AS(exist_abstract(n, std::vector<std::string>{"zz"}), InvalidInput);
}

TEST_CASE("appendix lemmas: exhaustive property checks") {
  const auto ea = testsupport::check_existential_abstraction(101, 150);
  CHECK(ea.checks > 1000);
  CHECK(ea.mismatches == 0);
  const auto ca = testsupport::check_complement_abstraction(102, 150);
  CHECK(ca.mismatches == 0);
  const auto bc = testsupport::check_belief_characterization(103, 150);
  CHECK(bc.mismatches == 0);
  const auto pi = testsupport::check_product_intersection(104, 150);
  CHECK(pi.mismatches == 0);
  const auto dl = testsupport::check_determinize_language(105, 150);
  CHECK(dl.mismatches == 0);
}

TEST_CASE("minimize: language preserved, never larger") {
  std::mt19937 rng(9);
  const Alphabet al({"p", "q"});
  for (int i = 0; i < 100; ++i) {
    const Dfa d = testsupport::random_dfa(rng, al, 6);
    const Dfa m = minimize(d);
    CHECK(m.state_count() <= trim(d).state_count());
    CHECK(equivalent(m, d));
    CHECK(minimize(m).state_count() == m.state_count());
  }
}

TEST_CASE("distinguishing_trace: shortest witness") {
  const Alphabet al({"a"});
  const auto w = distinguishing_trace(contains_a(al), universal(al));
  REQUIRE(w);
  CHECK(*w == Trace{0});
  CHECK_FALSE(distinguishing_trace(contains_a(al), contains_a(al)));
}

TEST_CASE("restrict and extend alphabet") {
  const Alphabet small({"a"});
  const Alphabet big({"u", "a", "v"});
  const Dfa d = contains_a(small);
  const Dfa e = extend_alphabet(d, big);
  CHECK(e.accepts(Trace{big.letter({"u"}), big.letter({"a", "v"})}));
  CHECK_FALSE(e.accepts(Trace{big.letter({"u", "v"})}));
  const Dfa back = restrict_alphabet(e, small);
  CHECK(back.alphabet() == small);
  CHECK(equivalent(back, d));
  CHECK_THROWS_AS(restrict_alphabet(e, Alphabet({"u"})), InvalidInput);
}

TEST_CASE("totality: every produced table is complete") {
  std::mt19937 rng(5);
  const Alphabet al({"p", "q"});
  for (int i = 0; i < 30; ++i) {
    const Nfa n = testsupport::random_nfa(rng, al, 4);
    for (const Dfa& d : {determinize(n), belief_construct(determinize(n), 1), minimize(determinize(n))})
      for (State s = 0; s < d.state_count(); ++s)
        for (Letter l = 0; l < d.letter_count(); ++l) CHECK(d.next(s, l) < d.state_count());
  }
}

TEST_CASE("dot export") {
  const Alphabet al({"a", "b"});
  const std::string dot = to_dot(ltlf_to_dfa(until(atom("a"), atom("b")), al));
  CHECK(dot.find("digraph") == 0);
  CHECK(dot.find("doublecircle") != std::string::npos);
  CHECK(letters_label(al, {0, 1, 2, 3}) == "true");
  CHECK(letters_label(al, {1, 3}) == "a");
  CHECK(letters_label(al, {0}) == "!a&!b");
}
