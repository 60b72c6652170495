#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "unrel/automata.hpp"
#include "unrel/formula.hpp"
#include "unrel/limits.hpp"
#include "unrel/trace.hpp"

namespace unrel {

/// Formula progression with canonical residuals.
///
/// A residual is a BDD whose variables are the atoms and temporal
/// subformulas of the registered formulas; two residuals that are
/// propositionally equivalent over those variables get the same id. Subformula
/// variables are hash-consed, so structurally equal subformulas of different
/// formulas share one variable.
///
/// Not thread-safe; use one instance per compilation.
class Progression {
public:
  using Residual = std::uint32_t;

  explicit Progression(Alphabet alphabet);

  const Alphabet& alphabet() const noexcept { return alphabet_; }

  /// Throws InvalidInput for atoms outside the alphabet.
  Residual add(const Formula& f);

  static constexpr Residual bottom() noexcept { return 0; }
  static constexpr Residual top() noexcept { return 1; }

  /// Obligation left after reading `a` when more letters follow.
  Residual more(Residual r, Letter a);
  /// Whether `r` holds when `a` is the final letter.
  bool last(Residual r, Letter a);

  Residual conj(Residual x, Residual y) { return ite(x, y, bottom()); }
  Residual disj(Residual x, Residual y) { return ite(x, top(), y); }
  Residual negate(Residual x) { return ite(x, bottom(), top()); }

  /// Alphabet bits that can influence more() and last().
  Letter support(Residual r) const noexcept { return nodes_[r].support; }
  Formula to_formula(Residual r) const;

  std::size_t node_count() const noexcept { return nodes_.size(); }
  std::size_t variable_count() const noexcept { return vars_.size(); }

private:
  static constexpr std::uint32_t terminal = ~std::uint32_t{0};

  struct Var {
    Op op;
    Formula formula;
    std::uint32_t bit = 0;   // atoms
    Residual lhs = 0;        // child, or left operand
    Residual rhs = 0;        // right operand of U / R
    Residual self = 0;       // the variable as a BDD
    Letter support = 0;
  };
  struct Node {
    std::uint32_t var;
    Residual lo, hi;
    Letter support;
  };
  struct Triple {
    std::uint32_t a, b, c;
    friend bool operator==(const Triple&, const Triple&) = default;
  };
  struct TripleHash {
    std::size_t operator()(const Triple& t) const noexcept {
      std::uint64_t h = t.a * 0x9e3779b97f4a7c15ULL;
      h ^= (h >> 29) + t.b * 0xbf58476d1ce4e5b9ULL;
      h ^= (h >> 31) + t.c * 0x94d049bb133111ebULL;
      return static_cast<std::size_t>(h ^ (h >> 32));
    }
  };

  Residual node(std::uint32_t var, Residual lo, Residual hi);
  Residual ite(Residual f, Residual g, Residual h);
  std::uint32_t top_var(Residual f, Residual g, Residual h) const noexcept;
  Residual cofactor(Residual f, std::uint32_t var, bool value) const noexcept;
  Residual more_var(std::uint32_t v, Letter a);
  bool last_var(std::uint32_t v, Letter a);
  std::uint32_t variable(const Formula& f);

  Alphabet alphabet_;
  std::vector<Var> vars_;
  std::unordered_map<Formula, std::uint32_t> var_of_;
  std::unordered_map<Formula, Residual> bdd_of_;
  std::vector<Node> nodes_;
  std::unordered_map<Triple, Residual, TripleHash> unique_;
  std::unordered_map<Triple, Residual, TripleHash> ite_cache_;
  std::unordered_map<std::uint64_t, Residual> more_cache_;
  std::unordered_map<std::uint64_t, Residual> more_var_cache_;
  std::unordered_map<std::uint64_t, bool> last_cache_;
  std::unordered_map<std::uint64_t, bool> last_var_cache_;
};

struct LtlfToDfaOptions {
  bool minimize = false;
};

/// DFA accepting exactly the nonempty traces over `alphabet` that satisfy
/// `f`. States are the (residual, accepted) pairs reachable from (f, false);
/// reading `a` from (r, _) leads to (more(r, a), last(r, a)).
/// Throws ResourceError past `limits.max_progression_states`.
Dfa ltlf_to_dfa(const Formula& f, const Alphabet& alphabet, const Limits& limits = {},
                LtlfToDfaOptions options = {});

/// Formula-level wrappers, for inspection and tests.
Formula progress_more(const Formula& f, const Alphabet& alphabet, Letter a);
bool progress_last(const Formula& f, const Alphabet& alphabet, Letter a);

}  // namespace unrel
