#pragma once

#include <string>
#include <vector>

#include "unrel/automata.hpp"
#include "unrel/limits.hpp"
#include "unrel/qformula.hpp"

namespace unrel {

/// Maximal run of equal quantifiers in a prefix.
struct QuantifierBlock {
  Quantifier kind;
  std::vector<std::string> variables;
};

std::vector<QuantifierBlock> quantifier_blocks(const std::vector<QuantifiedVar>& prefix);

/// DFA over `alphabet` for a prenex QLTLf formula, built innermost block
/// first: an existential block is determinize(exist_abstract(A)), a
/// universal one complement(determinize(exist_abstract(complement(A)))).
/// Quantified variables must belong to the alphabet; the result ignores them.
Dfa qltlf_to_dfa(const QFormula& qf, const Alphabet& alphabet, const Limits& limits = {});

/// Same construction, with `on_block` called after each block with the
/// automaton built so far (innermost first; the matrix DFA is reported with
/// an empty block).
Dfa qltlf_to_dfa(const QFormula& qf, const Alphabet& alphabet, const Limits& limits,
                 const std::function<void(const QuantifierBlock&, const Dfa&)>& on_block);

/// MONA (WS1S, m2l-str) program for a prenex formula. Propositions become
/// second-order variables with upper-cased names; free ones are declared in
/// `order` first, then alphabetically. The formula is instantiated at
/// position 0 and `last` is the final position.
std::string mso_export(const QFormula& qf, const std::vector<std::string>& order = {});

/// Upper-cased MONA identifiers for `names`, suffixed "_<n>" on collision.
std::vector<std::string> mona_names(const std::vector<std::string>& names);

}  // namespace unrel
