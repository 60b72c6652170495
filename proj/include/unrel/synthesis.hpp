#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "unrel/automata.hpp"
#include "unrel/game.hpp"
#include "unrel/limits.hpp"
#include "unrel/partition.hpp"
#include "unrel/qformula.hpp"

namespace unrel {

/// Main goal, backup goal and variable split.
struct SynthInstance {
  Formula main;
  Formula backup;
  Partition partition;

  /// Throws InvalidInput when a goal mentions an undeclared proposition.
  void validate() const;
};

SynthInstance load_instance(const std::string& ltlf_path, const std::string& part_path);

enum class Mode { Direct, Belief, Qltlf };

inline constexpr Mode kAllModes[] = {Mode::Direct, Mode::Belief, Mode::Qltlf};

std::string_view to_string(Mode m) noexcept;
/// Accepts "direct", "belief", "qltlf" (or its alias "mso"); throws InvalidInput otherwise.
Mode parse_mode(std::string_view text);

struct StageStat {
  std::string stage;
  std::size_t states = 0;
  double ms = 0;
};

struct SynthOptions {
  Limits limits;
  /// Minimize factor automata before taking products.
  bool minimize = false;
  /// Precomputed DFA of the main goal over the partition alphabet, shared
  /// between modes.
  const Dfa* main_dfa = nullptr;
  /// Called with each stage's automaton as soon as it is built.
  std::function<void(const std::string& stage, const Dfa& automaton)> on_stage;
};

/// product(A(main), complement(determinize(exist_abstract(A(!backup), X_unr)))).
Dfa build_direct_arena(const SynthInstance& inst, const SynthOptions& options = {},
                       std::vector<StageStat>* stages = nullptr);
/// product(A(main), belief_construct(A(backup), X_unr)).
Dfa build_belief_arena(const SynthInstance& inst, const SynthOptions& options = {},
                       std::vector<StageStat>* stages = nullptr);
/// qltlf_to_dfa(main & forall X_unr. backup), with bound copies of X_unr
/// renamed apart from the free ones in main and projected away afterwards.
Dfa build_qltlf_arena(const SynthInstance& inst, const SynthOptions& options = {},
                      std::vector<StageStat>* stages = nullptr);
Dfa build_arena(const SynthInstance& inst, Mode mode, const SynthOptions& options = {},
                std::vector<StageStat>* stages = nullptr);

Dfa belief_construct(const Dfa& d, const Partition& p, const Limits& limits = {});

/// Prenex main & forall U1..Un. backup, renaming bound variables that also
/// occur free in main.
QFormula qltlf_reduction(const SynthInstance& inst);

struct SynthResult {
  Mode mode = Mode::Direct;
  bool realizable = false;
  std::optional<Strategy> strategy;
  GameResult game;
  std::size_t arena_states = 0;
  std::vector<StageStat> stages;
  double construct_ms = 0;
  double game_ms = 0;
};

/// Builds the mode's arena, solves the game and extracts a strategy when
/// realizable. Resource errors name the failing stage: dfa-main,
/// dfa-backup, abstraction, determinize, belief, product, qltlf or game.
SynthResult synth(const SynthInstance& inst, Mode mode, const SynthOptions& options = {});

}  // namespace unrel
