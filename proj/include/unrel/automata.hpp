#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "unrel/limits.hpp"
#include "unrel/trace.hpp"

namespace unrel {

using State = std::uint32_t;

/// Complete DFA over 2^alphabet with a dense transition table.
///
/// Automata only read nonempty traces: the empty trace is never accepted,
/// so the acceptance flag of the initial state only matters once a letter
/// has led back into it.
class Dfa {
public:
  Dfa() = default;
  /// `states` states, every transition to state 0, nothing final.
  Dfa(Alphabet alphabet, std::size_t states, State initial = 0);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t width() const noexcept { return alphabet_.width(); }
  std::size_t letter_count() const noexcept { return letters_; }
  std::size_t state_count() const noexcept { return final_.size(); }
  State initial() const noexcept { return initial_; }
  void set_initial(State s) { initial_ = s; }

  State next(State s, Letter a) const noexcept { return table_[std::size_t{s} * letters_ + a]; }
  void set_next(State s, Letter a, State t) { table_[std::size_t{s} * letters_ + a] = t; }
  bool is_final(State s) const noexcept { return final_[s] != 0; }
  void set_final(State s, bool f) { final_[s] = f ? 1 : 0; }
  /// Appends a state whose transitions all point to itself.
  State add_state(bool final = false);

  /// Row of `letter_count()` successors of `s`.
  const State* row(State s) const noexcept { return table_.data() + std::size_t{s} * letters_; }

  bool accepts(const Trace& t) const;
  /// State after reading `t` from the initial state.
  State run(const Trace& t) const;

  std::size_t final_count() const noexcept;

  friend bool operator==(const Dfa&, const Dfa&) = default;

private:
  Alphabet alphabet_;
  std::size_t letters_ = 1;
  State initial_ = 0;
  std::vector<State> table_;
  std::vector<std::uint8_t> final_;
};

/// NFA with one initial state per entry of `initial` and successor sets in
/// CSR form, indexed by state * letter_count + letter.
class Nfa {
public:
  Nfa() = default;
  explicit Nfa(Alphabet alphabet);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t letter_count() const noexcept { return letters_; }
  std::size_t state_count() const noexcept { return final_.size(); }
  const std::vector<State>& initial() const noexcept { return initial_; }
  bool is_final(State s) const noexcept { return final_[s] != 0; }

  /// Successors as a sorted, duplicate-free range.
  const State* begin(State s, Letter a) const noexcept {
    return targets_.data() + offsets_[std::size_t{s} * letters_ + a];
  }
  const State* end(State s, Letter a) const noexcept {
    return targets_.data() + offsets_[std::size_t{s} * letters_ + a + 1];
  }

  std::size_t transition_count() const noexcept { return targets_.size(); }

  bool accepts(const Trace& t) const;

  /// Builder: states are added in order; each state's successor sets must
  /// be pushed letter by letter, 0 to letter_count() - 1.
  State add_state(bool final);
  void push_successors(std::vector<State> successors);
  void add_initial(State s) { initial_.push_back(s); }

private:
  Alphabet alphabet_;
  std::size_t letters_ = 1;
  std::vector<State> initial_;
  std::vector<std::uint32_t> offsets_{0};
  std::vector<State> targets_;
  std::vector<std::uint8_t> final_;
};

Nfa to_nfa(const Dfa& d);

/// Drops states unreachable from the initial state, renumbering in BFS
/// order (letters ascending).
Dfa trim(const Dfa& d);

/// Same transitions, acceptance flipped on every state.
Dfa complement(const Dfa& d);

/// Reachable synchronous product accepting the intersection. State ids are
/// assigned in BFS order; `pairs`, when given, receives each product state's
/// component pair.
Dfa product(const Dfa& a, const Dfa& b, const Limits& limits = {},
            std::vector<std::pair<State, State>>* pairs = nullptr, const char* stage = "product");

/// Projection with re-expansion: successors of (s, a) are the targets of
/// every letter agreeing with `a` outside `mask`. The accepted language is
/// exp(proj(L)).
Nfa exist_abstract(const Dfa& d, Letter mask);
Nfa exist_abstract(const Nfa& n, Letter mask);
/// Name-based form; throws InvalidInput for names outside the alphabet.
Nfa exist_abstract(const Nfa& n, const std::vector<std::string>& names);

enum class SubsetAcceptance {
  Any,  // some member final (ordinary determinization)
  All,  // every member final (belief states)
};

/// Reachable subset construction. The empty subset, if reachable, is a
/// rejecting sink. `subsets`, when given, receives each state's members.
Dfa determinize(const Nfa& n, const Limits& limits = {}, SubsetAcceptance acceptance = SubsetAcceptance::Any,
                std::vector<std::vector<State>>* subsets = nullptr, const char* stage = "determinize");

/// Belief-state automaton: subsets of `d` reachable when the bits in
/// `unreliable` are unknown; a belief is final when all its members are.
Dfa belief_construct(const Dfa& d, Letter unreliable, const Limits& limits = {},
                     std::vector<std::vector<State>>* beliefs = nullptr);

/// Minimal complete DFA for the same language on nonempty traces.
Dfa minimize(const Dfa& d);

/// Re-labels the automaton over a sub-alphabet (names must appear in the
/// original). Every dropped proposition must be irrelevant to the transition
/// function; otherwise InvalidInput is thrown.
Dfa restrict_alphabet(const Dfa& d, const Alphabet& sub);

/// Reorders or renames nothing: maps a DFA onto a super-alphabet containing
/// its propositions, ignoring the extra ones.
Dfa extend_alphabet(const Dfa& d, const Alphabet& super);

/// Shortest nonempty trace (lexicographically first among the shortest)
/// accepted by exactly one of the automata, or nullopt if none exists.
std::optional<Trace> distinguishing_trace(const Dfa& a, const Dfa& b);
inline bool equivalent(const Dfa& a, const Dfa& b) { return !distinguishing_trace(a, b); }

/// Shortest accepted nonempty trace.
std::optional<Trace> shortest_accepted(const Dfa& d);

/// Graphviz rendering. Letters sharing an edge are printed as cubes over the
/// alphabet ("a&!b", with "true" for the full set).
std::string to_dot(const Dfa& d, const std::string& name = "dfa");

/// Sum-of-cubes label for a set of letters, using the alphabet's names.
std::string letters_label(const Alphabet& alphabet, const std::vector<Letter>& letters);

}  // namespace unrel
