#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "unrel/automata.hpp"
#include "unrel/formula.hpp"
#include "unrel/trace.hpp"

namespace testsupport {

using unrel::Alphabet;
using unrel::Dfa;
using unrel::Formula;
using unrel::Letter;
using unrel::Nfa;
using unrel::Trace;

/// Random formula over `props` with depth at most `depth`, covering every
/// operator.
Formula random_formula(std::mt19937& rng, const std::vector<std::string>& props, int depth);

/// Random NFA with `states` states; each (state, letter) gets each target
/// with probability `density`.
Nfa random_nfa(std::mt19937& rng, const Alphabet& alphabet, std::size_t states, double density = 0.35);
Dfa random_dfa(std::mt19937& rng, const Alphabet& alphabet, std::size_t states);

/// Every nonempty trace up to `max_length`.
void for_each_trace_upto(std::size_t width, std::size_t max_length, const std::function<void(const Trace&)>& fn);

/// Subformulas of `f`, each once.
std::vector<Formula> subformulas(const Formula& f);

}  // namespace testsupport

#include "unrel/partition.hpp"

namespace testsupport {

/// Does some agent decision tree of depth at most `depth` win? The agent
/// sees every input reading, picks outputs first each round, and may stop
/// after any round at which the prefix t satisfies `main` and every
/// rewriting of t over the unreliable inputs satisfies `backup`.
bool bounded_realizable(const Formula& main, const Formula& backup, const unrel::Partition& p, int depth);

/// Partial observation: the agent's choices depend on reliable inputs only,
/// and it may stop once every trace consistent with its observations
/// satisfies `goal`.
bool bounded_realizable_unobserved(const Formula& goal, const unrel::Partition& p, int depth);

}  // namespace testsupport
