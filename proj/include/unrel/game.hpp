#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "unrel/automata.hpp"
#include "unrel/formula.hpp"
#include "unrel/limits.hpp"
#include "unrel/partition.hpp"

namespace unrel {

inline constexpr std::uint32_t kUnranked = ~std::uint32_t{0};
inline constexpr State kNoState = ~State{0};

/// Solution of the reachability game in which, every round, the agent
/// picks the outputs first and the environment then picks the inputs.
struct GameResult {
  /// rank[s] = round of the fixpoint at which s joined the winning set
  /// (0 for final states), kUnranked outside it.
  std::vector<std::uint32_t> rank;
  bool realizable = false;
  /// Number of fixpoint rounds until stabilization.
  std::size_t rounds = 0;

  bool winning(State s) const { return rank[s] != kUnranked; }
  std::size_t winning_count() const;
};

/// Least fixpoint W = F ∪ Pre(W) with Pre(S) = {s | ∃y ∀x δ(s, y∪x) ∈ S}.
/// Realizable iff the initial state is in Pre(W): at least one round is
/// always played. The arena must be over p.alphabet().
GameResult solve_game(const Dfa& arena, const Partition& p, const Limits& limits = {});

/// Output-first finite-state strategy. Machine state m emits output[m]
/// (an assignment to the outputs, bit i = i-th output), reads the inputs x
/// (bit j = j-th input of Partition::inputs()) and moves to
/// step[m * 2^|X| + x]. Entering a state with stop set ends the play
/// successfully after that round.
struct Strategy {
  Partition partition;
  State initial = 0;
  std::vector<Letter> output;
  std::vector<State> step;
  std::vector<std::uint8_t> stop;
  /// Arena state each machine state tracks.
  std::vector<State> arena_state;

  std::size_t size() const noexcept { return output.size(); }
  std::size_t input_letters() const noexcept { return std::size_t{1} << partition.input_count(); }
  State next(State m, Letter x) const { return step[std::size_t{m} * input_letters() + x]; }
  bool stops(State m) const { return stop[m] != 0; }
};

/// Machine over the winning states reachable from the initial state. Each
/// state outputs the assignment minimizing the worst rank of the successor,
/// ties broken towards the lexicographically smallest output pattern read
/// from the first output onwards. Throws InvalidInput if `r` is not
/// realizable.
Strategy extract_strategy(const Dfa& arena, const GameResult& r, const Partition& p);

/// Agent letters produced when `inputs` (one input assignment per round) is
/// played against `s`, up to and including the stop round. Stops early at
/// the first stop; returns the stop round in `stop_round` (0 if none).
std::vector<Letter> play(const Strategy& s, const std::vector<Letter>& inputs, std::size_t* stop_round = nullptr);

enum class VerifyEngine {
  Auto,        // exhaustive when |X| * horizon fits the enumeration cap
  Exhaustive,  // enumerate plays, evaluate every rewriting with eval_trace
  Residual,    // memoized search over progression residuals
};

struct VerifyOptions {
  std::size_t horizon = 0;
  VerifyEngine engine = VerifyEngine::Auto;
  /// Exhaustive engine: cap on explored plays before giving up with a
  /// ResourceError.
  std::size_t max_plays = std::size_t{1} << 20;
  std::size_t enumeration_bits = 20;
};

struct Verdict {
  bool passed = false;
  /// Input assignments of the first failing play in lexicographic order.
  std::vector<Letter> counterexample;
  std::string reason;
  VerifyEngine engine = VerifyEngine::Auto;
  /// Plays (exhaustive) or search nodes (residual) visited.
  std::size_t explored = 0;
};

/// Checks every environment behaviour within `horizon` rounds: the play
/// must stop at some round k with the prefix t satisfying `main` and every
/// t' equal to t up to the unreliable inputs satisfying `backup`.
Verdict verify_strategy(const Strategy& s, const Formula& main, const Formula& backup, const VerifyOptions& options);

/// Graphviz rendering: outputs on nodes, input cubes on edges, stop states
/// double-circled.
std::string strategy_to_dot(const Strategy& s, const std::string& name = "strategy");

}  // namespace unrel
