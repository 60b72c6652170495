#include "support.hpp"

#include <unordered_set>

namespace testsupport {

Formula random_formula(std::mt19937& rng, const std::vector<std::string>& props, int depth) {
  std::uniform_int_distribution<int> leaf(0, static_cast<int>(props.size()) + 1);
  if (depth <= 0) {
    const int k = leaf(rng);
    if (k == 0) return unrel::tt();
    if (k == 1) return unrel::ff();
    return unrel::atom(props[static_cast<std::size_t>(k - 2)]);
  }
  std::uniform_int_distribution<int> pick(0, 11);
  const int k = pick(rng);
  auto sub = [&] { return random_formula(rng, props, depth - 1); };
  switch (k) {
    case 0:
    case 1: {
      std::uniform_int_distribution<int> d(0, depth - 1);
      return random_formula(rng, props, d(rng) == 0 ? 0 : depth - 1);
    }
    case 2: return unrel::lnot(sub());
    case 3: return unrel::land(sub(), sub());
    case 4: return unrel::lor(sub(), sub());
    case 5: return unrel::next(sub());
    case 6: return unrel::wnext(sub());
    case 7: return unrel::until(sub(), sub());
    case 8: return unrel::release(sub(), sub());
    case 9: return unrel::eventually(sub());
    case 10: return unrel::always(sub());
    default: return unrel::implies(sub(), sub());
  }
}

Nfa random_nfa(std::mt19937& rng, const Alphabet& alphabet, std::size_t states, double density) {
  std::bernoulli_distribution edge(density);
  std::bernoulli_distribution fin(0.4);
  Nfa n(alphabet);
  for (std::size_t s = 0; s < states; ++s) {
    n.add_state(fin(rng));
    for (Letter a = 0; a < alphabet.letter_count(); ++a) {
      std::vector<unrel::State> succ;
      for (std::size_t t = 0; t < states; ++t)
        if (edge(rng)) succ.push_back(static_cast<unrel::State>(t));
      n.push_successors(std::move(succ));
    }
  }
  n.add_initial(0);
  return n;
}

Dfa random_dfa(std::mt19937& rng, const Alphabet& alphabet, std::size_t states) {
  std::uniform_int_distribution<unrel::State> tgt(0, static_cast<unrel::State>(states - 1));
  std::bernoulli_distribution fin(0.4);
  Dfa d(alphabet, states, 0);
  for (unrel::State s = 0; s < states; ++s) {
    d.set_final(s, fin(rng));
    for (Letter a = 0; a < alphabet.letter_count(); ++a) d.set_next(s, a, tgt(rng));
  }
  return d;
}

void for_each_trace_upto(std::size_t width, std::size_t max_length, const std::function<void(const Trace&)>& fn) {
  for (std::size_t len = 1; len <= max_length; ++len) unrel::for_each_trace(width, len, fn);
}

namespace {

void collect(const Formula& f, std::unordered_set<Formula>& seen, std::vector<Formula>& out) {
  if (!seen.insert(f).second) return;
  out.push_back(f);
  for (std::size_t i = 0; i < f.arity(); ++i) collect(f.child(i), seen, out);
}

}  // namespace

std::vector<Formula> subformulas(const Formula& f) {
  std::unordered_set<Formula> seen;
  std::vector<Formula> out;
  collect(f, seen, out);
  return out;
}

}  // namespace testsupport

namespace testsupport {

namespace {

bool good_prefix(const unrel::TraceEvaluator& main, const unrel::TraceEvaluator& backup, const Trace& t, Letter mask) {
  if (!main.evaluate(t, 1)) return false;
  bool ok = true;
  unrel::for_each_rewriting(t, mask, [&](const Trace& u) { return ok = backup.evaluate(u, 1); });
  return ok;
}

bool win_full(const unrel::TraceEvaluator& main, const unrel::TraceEvaluator& backup, const unrel::Partition& p,
              Trace& t, int depth) {
  const Letter ys = Letter{1} << p.output_count();
  const Letter xs = Letter{1} << p.input_count();
  for (Letter y = 0; y < ys; ++y) {
    bool all = true;
    for (Letter x = 0; x < xs && all; ++x) {
      t.letters.push_back(p.join(y, x));
      all = good_prefix(main, backup, t, p.unreliable_mask()) || (depth > 1 && win_full(main, backup, p, t, depth - 1));
      t.letters.pop_back();
    }
    if (all) return true;
  }
  return false;
}

bool win_unobserved(const unrel::TraceEvaluator& goal, const unrel::Partition& p, const std::vector<Trace>& belief,
                    int depth) {
  const Letter ys = Letter{1} << p.output_count();
  const std::size_t rel = p.reliable.size();
  const std::size_t ybits = p.output_count();
  for (Letter y = 0; y < ys; ++y) {
    bool all = true;
    for (Letter xr = 0; xr < (Letter{1} << rel) && all; ++xr) {
      std::vector<Trace> next;
      for (const Trace& t : belief)
        for (Letter xu = 0; xu < (Letter{1} << p.unreliable.size()); ++xu) {
          Trace u = t;
          u.letters.push_back(y | (xr << ybits) | (xu << (ybits + rel)));
          next.push_back(std::move(u));
        }
      bool stop = true;
      for (const Trace& t : next) stop = stop && goal.evaluate(t, 1);
      all = stop || (depth > 1 && win_unobserved(goal, p, next, depth - 1));
    }
    if (all) return true;
  }
  return false;
}

}  // namespace

bool bounded_realizable(const Formula& main, const Formula& backup, const unrel::Partition& p, int depth) {
  const Alphabet al = p.alphabet();
  const unrel::TraceEvaluator m(main, al), b(backup, al);
  Trace t;
  return win_full(m, b, p, t, depth);
}

bool bounded_realizable_unobserved(const Formula& goal, const unrel::Partition& p, int depth) {
  const unrel::TraceEvaluator g(goal, p.alphabet());
  return win_unobserved(g, p, {Trace{}}, depth);
}

}  // namespace testsupport
