#include "unrel/synthesis.hpp"

#include <chrono>

#include "unrel/errors.hpp"
#include "unrel/progression.hpp"
#include "unrel/qltlf.hpp"

namespace unrel {

void SynthInstance::validate() const {
  partition.validate();
  const Alphabet al = partition.alphabet();
  for (const Formula* f : {&main, &backup})
    for (const auto& a : atoms(*f))
      if (!al.find(a)) throw InvalidInput("variable '" + a + "' is not declared in the partition");
}

SynthInstance load_instance(const std::string& ltlf_path, const std::string& part_path) {
  const GoalPair goals = parse_ltlf_file(read_file(ltlf_path));
  SynthInstance inst{goals.main, goals.backup, parse_partition(read_file(part_path))};
  inst.validate();
  return inst;
}

std::string_view to_string(Mode m) noexcept {
  switch (m) {
    case Mode::Direct: return "direct";
    case Mode::Belief: return "belief";
    case Mode::Qltlf: return "qltlf";
  }
  return "?";
}

Mode parse_mode(std::string_view text) {
  for (Mode m : kAllModes)
    if (to_string(m) == text) return m;
  if (text == "mso") return Mode::Qltlf;
  throw InvalidInput("unknown mode '" + std::string(text) + "' (expected direct, belief or qltlf)");
}

namespace {

using Clock = std::chrono::steady_clock;

class Stages {
public:
  Stages(const SynthOptions& o, std::vector<StageStat>* out) : options_(o), out_(out) {}

  template <typename Fn>
  auto run(const char* name, Fn&& fn) {
    const auto start = Clock::now();
    try {
      options_.limits.check_deadline(name);
      auto result = fn();
      const double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
      record(name, state_count(result), ms);
      if constexpr (std::is_same_v<decltype(result), Dfa>)
        if (options_.on_stage) options_.on_stage(name, result);
      return result;
    } catch (const Timeout&) {
      throw Timeout(name);
    } catch (const ResourceError& e) {
      if (e.stage() == name) throw;
      throw ResourceError(name, e.what());
    }
  }

  void record(const char* name, std::size_t states, double ms) {
    if (out_) out_->push_back({name, states, ms});
  }

  Dfa maybe_minimize(Dfa d) const { return options_.minimize ? minimize(d) : d; }

private:
  static std::size_t state_count(const Dfa& d) { return d.state_count(); }
  static std::size_t state_count(const Nfa& n) { return n.state_count(); }

  const SynthOptions& options_;
  std::vector<StageStat>* out_;
};

Dfa main_factor(const SynthInstance& inst, const SynthOptions& options, Stages& st) {
  if (options.main_dfa) {
    if (options.main_dfa->alphabet() != inst.partition.alphabet())
      throw InvalidInput("shared main DFA is over a different alphabet");
    st.record("dfa-main", options.main_dfa->state_count(), 0);
    return *options.main_dfa;
  }
  return st.run("dfa-main", [&] {
    return st.maybe_minimize(ltlf_to_dfa(inst.main, inst.partition.alphabet(), options.limits));
  });
}

}  // namespace

Dfa belief_construct(const Dfa& d, const Partition& p, const Limits& limits) {
  if (d.alphabet() != p.alphabet()) throw InvalidInput("belief_construct: alphabet does not match the partition");
  return belief_construct(d, p.unreliable_mask(), limits);
}

Dfa build_direct_arena(const SynthInstance& inst, const SynthOptions& options, std::vector<StageStat>* stages) {
  inst.validate();
  const Alphabet al = inst.partition.alphabet();
  options.limits.check_width(al.width(), "dfa-main");
  Stages st(options, stages);
  const Dfa main = main_factor(inst, options, st);
  const Dfa neg = st.run("dfa-backup", [&] { return st.maybe_minimize(ltlf_to_dfa(lnot(inst.backup), al, options.limits)); });
  const Nfa abs = st.run("abstraction", [&] { return exist_abstract(neg, inst.partition.unreliable_mask()); });
  const Dfa safe = st.run("determinize", [&] {
    return st.maybe_minimize(complement(determinize(abs, options.limits, SubsetAcceptance::Any, nullptr, "determinize")));
  });
  return st.run("product", [&] { return product(main, safe, options.limits, nullptr, "product"); });
}

Dfa build_belief_arena(const SynthInstance& inst, const SynthOptions& options, std::vector<StageStat>* stages) {
  inst.validate();
  const Alphabet al = inst.partition.alphabet();
  options.limits.check_width(al.width(), "dfa-main");
  Stages st(options, stages);
  const Dfa main = main_factor(inst, options, st);
  const Dfa backup = st.run("dfa-backup", [&] { return st.maybe_minimize(ltlf_to_dfa(inst.backup, al, options.limits)); });
  const Dfa belief = st.run("belief", [&] { return st.maybe_minimize(belief_construct(backup, inst.partition, options.limits)); });
  return st.run("product", [&] { return product(main, belief, options.limits, nullptr, "product"); });
}

QFormula qltlf_reduction(const SynthInstance& inst) {
  QExpr body = QExpr::leaf(inst.backup);
  const auto& u = inst.partition.unreliable;
  for (auto it = u.rbegin(); it != u.rend(); ++it) body = QExpr::forall(*it, body);
  return to_pnf(QExpr::conjunction(QExpr::leaf(inst.main), body));
}

Dfa build_qltlf_arena(const SynthInstance& inst, const SynthOptions& options, std::vector<StageStat>* stages) {
  inst.validate();
  const Alphabet al = inst.partition.alphabet();
  const QFormula qf = qltlf_reduction(inst);
  std::vector<std::string> names = al.names();
  for (const auto& v : qf.prefix)
    if (!al.find(v.name)) names.push_back(v.name);
  const Alphabet extended(names);
  options.limits.check_width(extended.width(), "qltlf");
  Stages st(options, stages);
  const Dfa arena = st.run("qltlf", [&] { return qltlf_to_dfa(qf, extended, options.limits); });
  return st.run("restrict", [&] { return st.maybe_minimize(restrict_alphabet(arena, al)); });
}

Dfa build_arena(const SynthInstance& inst, Mode mode, const SynthOptions& options, std::vector<StageStat>* stages) {
  switch (mode) {
    case Mode::Direct: return build_direct_arena(inst, options, stages);
    case Mode::Belief: return build_belief_arena(inst, options, stages);
    case Mode::Qltlf: return build_qltlf_arena(inst, options, stages);
  }
  throw InvalidInput("unknown mode");
}

SynthResult synth(const SynthInstance& inst, Mode mode, const SynthOptions& options) {
  SynthResult r;
  r.mode = mode;
  const auto t0 = Clock::now();
  const Dfa arena = build_arena(inst, mode, options, &r.stages);
  const auto t1 = Clock::now();
  r.arena_states = arena.state_count();
  try {
    r.game = solve_game(arena, inst.partition, options.limits);
    r.realizable = r.game.realizable;
    if (r.realizable) r.strategy = extract_strategy(arena, r.game, inst.partition);
  } catch (const Timeout&) {
    throw Timeout("game");
  } catch (const ResourceError& e) {
    throw ResourceError("game", e.what());
  }
  const auto t2 = Clock::now();
  r.construct_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  r.game_ms = std::chrono::duration<double, std::milli>(t2 - t1).count();
  r.stages.push_back({"game", r.game.winning_count(), r.game_ms});
  return r;
}

}  // namespace unrel
