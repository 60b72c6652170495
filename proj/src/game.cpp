#include "unrel/game.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_set>

#include "unrel/errors.hpp"
#include "unrel/progression.hpp"

namespace unrel {

std::size_t GameResult::winning_count() const {
  return static_cast<std::size_t>(std::count_if(rank.begin(), rank.end(), [](std::uint32_t r) { return r != kUnranked; }));
}

namespace {

void require_arena(const Dfa& arena, const Partition& p) {
  if (arena.alphabet() != p.alphabet())
    throw InvalidInput("arena alphabet (" + std::to_string(arena.width()) +
                       " propositions) does not match the partition");
}

// Visit order of output assignments: lexicographic on the bit string
// y_0 y_1 ... y_{n-1}, so the first output is the most significant.
std::vector<Letter> output_order(std::size_t outputs) {
  std::vector<Letter> order;
  const Letter count = Letter{1} << outputs;
  for (Letter k = 0; k < count; ++k) {
    Letter y = 0;
    for (std::size_t i = 0; i < outputs; ++i)
      if (k >> (outputs - 1 - i) & 1U) y |= Letter{1} << i;
    order.push_back(y);
  }
  return order;
}

// Worst rank over all inputs after playing y in s.
std::uint32_t worst_rank(const Dfa& arena, const std::vector<std::uint32_t>& rank, State s, Letter y,
                         std::size_t ybits, Letter xcount) {
  std::uint32_t worst = 0;
  const State* row = arena.row(s);
  for (Letter x = 0; x < xcount; ++x) {
    worst = std::max(worst, rank[row[y | (x << ybits)]]);
    if (worst == kUnranked) break;
  }
  return worst;
}

}  // namespace

GameResult solve_game(const Dfa& arena, const Partition& p, const Limits& limits) {
  require_arena(arena, p);
  const std::size_t n = arena.state_count();
  const std::size_t ybits = p.output_count();
  const Letter ycount = Letter{1} << ybits;
  const Letter xcount = Letter{1} << p.input_count();

  GameResult r;
  r.rank.assign(n, kUnranked);
  for (State s = 0; s < n; ++s)
    if (arena.is_final(s)) r.rank[s] = 0;

  std::vector<State> fresh;
  for (std::uint32_t round = 1;; ++round) {
    limits.check_deadline("game");
    fresh.clear();
    for (State s = 0; s < n; ++s) {
      if (r.rank[s] != kUnranked) continue;
      const State* row = arena.row(s);
      for (Letter y = 0; y < ycount; ++y) {
        bool forced = true;
        for (Letter x = 0; x < xcount && forced; ++x) forced = r.rank[row[y | (x << ybits)]] < round;
        if (forced) {
          fresh.push_back(s);
          break;
        }
      }
    }
    if (fresh.empty()) {
      r.rounds = round - 1;
      break;
    }
    for (State s : fresh) r.rank[s] = round;
  }

  for (Letter y = 0; y < ycount && !r.realizable; ++y)
    r.realizable = worst_rank(arena, r.rank, arena.initial(), y, ybits, xcount) != kUnranked;
  return r;
}

Strategy extract_strategy(const Dfa& arena, const GameResult& r, const Partition& p) {
  require_arena(arena, p);
  if (!r.realizable) throw InvalidInput("extract_strategy: game is not realizable");
  const std::size_t ybits = p.output_count();
  const Letter xcount = Letter{1} << p.input_count();
  const auto order = output_order(ybits);

  Strategy s;
  s.partition = p;
  std::map<State, State> id;
  std::vector<State> queue{arena.initial()};
  id.emplace(arena.initial(), 0);
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const State a = queue[i];
    Letter best = 0;
    std::uint32_t best_worst = kUnranked;
    for (Letter y : order) {
      const std::uint32_t w = worst_rank(arena, r.rank, a, y, ybits, xcount);
      if (w < best_worst) {
        best_worst = w;
        best = y;
      }
    }
    s.output.push_back(best);
    s.arena_state.push_back(a);
    s.stop.push_back(arena.is_final(a) ? 1 : 0);
    const bool expand = i == 0 || !arena.is_final(a);
    for (Letter x = 0; x < xcount; ++x) {
      if (!expand || best_worst == kUnranked) {
        s.step.push_back(kNoState);
        continue;
      }
      const State t = arena.next(a, best | (x << ybits));
      auto [it, inserted] = id.try_emplace(t, static_cast<State>(queue.size()));
      if (inserted) queue.push_back(t);
      s.step.push_back(it->second);
    }
  }
  return s;
}

std::vector<Letter> play(const Strategy& s, const std::vector<Letter>& inputs, std::size_t* stop_round) {
  std::vector<Letter> letters;
  State m = s.initial;
  if (stop_round) *stop_round = 0;
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    letters.push_back(s.partition.join(s.output[m], inputs[i]));
    m = s.next(m, inputs[i]);
    if (m == kNoState) throw InvalidInput("strategy has no move after round " + std::to_string(i + 1));
    if (s.stops(m)) {
      if (stop_round) *stop_round = i + 1;
      break;
    }
  }
  return letters;
}

namespace {

class ExhaustiveVerifier {
public:
  ExhaustiveVerifier(const Strategy& s, const Formula& main, const Formula& backup, const VerifyOptions& o)
      : s_(s),
        alphabet_(s.partition.alphabet()),
        main_(main, alphabet_),
        backup_(backup, alphabet_),
        options_(o),
        unreliable_(s.partition.unreliable_mask()) {}

  Verdict run() {
    verdict_.engine = VerifyEngine::Exhaustive;
    verdict_.passed = dfs(s_.initial);
    return verdict_;
  }

private:
  bool fail(std::string reason) {
    verdict_.counterexample = inputs_;
    verdict_.reason = std::move(reason);
    return false;
  }

  bool check_stop() {
    ++verdict_.explored;
    if (verdict_.explored > options_.max_plays)
      throw ResourceError("verify", "more than " + std::to_string(options_.max_plays) + " plays");
    const Trace t(letters_);
    if (!main_.evaluate(t, 1)) return fail("main goal violated at stop round " + std::to_string(t.length()));
    bool ok = true;
    Trace bad;
    for_each_rewriting(
        t, unreliable_,
        [&](const Trace& u) {
          ok = backup_.evaluate(u, 1);
          if (!ok) bad = u;
          return ok;
        },
        options_.enumeration_bits);
    if (!ok)
      return fail("backup goal violated at stop round " + std::to_string(t.length()) + " under a rewriting");
    return true;
  }

  bool dfs(State m) {
    const Letter xcount = static_cast<Letter>(s_.input_letters());
    for (Letter x = 0; x < xcount; ++x) {
      inputs_.push_back(x);
      letters_.push_back(s_.partition.join(s_.output[m], x));
      const State next = s_.next(m, x);
      bool ok;
      if (next == kNoState)
        ok = fail("strategy has no move at round " + std::to_string(inputs_.size()));
      else if (s_.stops(next))
        ok = check_stop();
      else if (inputs_.size() >= options_.horizon)
        ok = fail("play did not stop within horizon " + std::to_string(options_.horizon));
      else
        ok = dfs(next);
      inputs_.pop_back();
      letters_.pop_back();
      if (!ok) return false;
    }
    return true;
  }

  const Strategy& s_;
  Alphabet alphabet_;
  TraceEvaluator main_;
  TraceEvaluator backup_;
  VerifyOptions options_;
  Letter unreliable_;
  std::vector<Letter> inputs_;
  std::vector<Letter> letters_;
  Verdict verdict_;
};

class ResidualVerifier {
public:
  ResidualVerifier(const Strategy& s, const Formula& main, const Formula& backup, const VerifyOptions& o)
      : s_(s), prog_(s.partition.alphabet()), options_(o), unreliable_(s.partition.unreliable_mask()) {
    main_ = prog_.add(main);
    backup_ = prog_.add(backup);
  }

  Verdict run() {
    verdict_.engine = VerifyEngine::Residual;
    verdict_.passed = dfs(s_.initial, main_, {backup_});
    return verdict_;
  }

private:
  using R = Progression::Residual;

  struct KeyHash {
    std::size_t operator()(const std::vector<std::uint32_t>& v) const noexcept {
      std::size_t h = v.size();
      for (auto x : v) h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      return h;
    }
  };

  bool fail(std::string reason) {
    verdict_.counterexample = inputs_;
    verdict_.reason = std::move(reason);
    return false;
  }

  template <typename Fn>
  void for_each_variant(Letter l, Fn&& fn) {
    const Letter base = l & ~unreliable_;
    Letter v = 0;
    do {
      fn(base | v);
      v = (v - unreliable_) & unreliable_;
    } while (v != 0);
  }

  bool dfs(State m, R main, const std::vector<R>& backups) {
    std::vector<std::uint32_t> key{m, static_cast<std::uint32_t>(inputs_.size()), main};
    key.insert(key.end(), backups.begin(), backups.end());
    if (good_.count(key)) return true;
    ++verdict_.explored;

    const Letter xcount = static_cast<Letter>(s_.input_letters());
    for (Letter x = 0; x < xcount; ++x) {
      inputs_.push_back(x);
      const Letter l = s_.partition.join(s_.output[m], x);
      const State next = s_.next(m, x);
      bool ok = true;
      if (next == kNoState) {
        ok = fail("strategy has no move at round " + std::to_string(inputs_.size()));
      } else if (s_.stops(next)) {
        if (!prog_.last(main, l)) {
          ok = fail("main goal violated at stop round " + std::to_string(inputs_.size()));
        } else {
          for (R b : backups)
            for_each_variant(l, [&](Letter v) { ok = ok && prog_.last(b, v); });
          if (!ok)
            ok = fail("backup goal violated at stop round " + std::to_string(inputs_.size()) + " under a rewriting");
        }
      } else if (inputs_.size() >= options_.horizon) {
        ok = fail("play did not stop within horizon " + std::to_string(options_.horizon));
      } else {
        std::vector<R> nb;
        for (R b : backups) for_each_variant(l, [&](Letter v) { nb.push_back(prog_.more(b, v)); });
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
        ok = dfs(next, prog_.more(main, l), nb);
      }
      inputs_.pop_back();
      if (!ok) return false;
    }
    good_.insert(std::move(key));
    return true;
  }

  const Strategy& s_;
  Progression prog_;
  VerifyOptions options_;
  Letter unreliable_;
  R main_ = 0;
  R backup_ = 0;
  std::vector<Letter> inputs_;
  std::unordered_set<std::vector<std::uint32_t>, KeyHash> good_;
  Verdict verdict_;
};

}  // namespace

Verdict verify_strategy(const Strategy& s, const Formula& main, const Formula& backup, const VerifyOptions& options) {
  if (options.horizon == 0) throw InvalidInput("verify_strategy: horizon must be positive");
  VerifyEngine engine = options.engine;
  if (engine == VerifyEngine::Auto)
    engine = s.partition.input_count() * options.horizon <= options.enumeration_bits ? VerifyEngine::Exhaustive
                                                                                     : VerifyEngine::Residual;
  if (engine == VerifyEngine::Exhaustive) return ExhaustiveVerifier(s, main, backup, options).run();
  return ResidualVerifier(s, main, backup, options).run();
}

std::string strategy_to_dot(const Strategy& s, const std::string& name) {
  const Alphabet outs(s.partition.outputs);
  const Alphabet ins(s.partition.inputs());
  std::ostringstream out;
  out << "digraph " << name << " {\n  rankdir=LR;\n  node [shape=box];\n";
  out << "  init [shape=point];\n  init -> m" << s.initial << ";\n";
  for (State m = 0; m < s.size(); ++m) {
    out << "  m" << m << " [label=\"m" << m << "\\n" << letters_label(outs, {s.output[m]}) << "\"";
    if (s.stops(m)) out << ", peripheries=2";
    out << "];\n";
  }
  for (State m = 0; m < s.size(); ++m) {
    std::map<State, std::vector<Letter>> edges;
    for (Letter x = 0; x < s.input_letters(); ++x)
      if (s.next(m, x) != kNoState) edges[s.next(m, x)].push_back(x);
    for (const auto& [t, xs] : edges)
      out << "  m" << m << " -> m" << t << " [label=\"" << letters_label(ins, xs) << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace unrel
