#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <set>
#include <string>
#include <string_view>

namespace unrel {

enum class Op : std::uint8_t {
  True,
  False,
  Atom,
  Not,
  And,
  Or,
  Next,      // strong next, surface syntax N
  WeakNext,  // surface syntax X
  Until,
  Release,
  Eventually,
  Always,
};

bool is_temporal(Op op) noexcept;
std::size_t arity(Op op) noexcept;

/// Immutable LTLf syntax tree with shared subtrees.
///
/// Copies are cheap (one shared pointer). Equality is structural; every node
/// caches its hash so comparing distinct trees usually costs O(1).
class Formula {
public:
  /// The constant `true`.
  Formula();

  static Formula top();
  static Formula bottom();
  static Formula atom(std::string name);
  static Formula make(Op op, Formula child);
  static Formula make(Op op, Formula lhs, Formula rhs);

  Op op() const noexcept;
  /// Atom name; empty for non-atoms.
  const std::string& name() const noexcept;
  std::size_t arity() const noexcept;
  /// i-th child, i < arity().
  const Formula& child(std::size_t i) const;
  std::size_t hash() const noexcept;

  bool is_atom() const noexcept { return op() == Op::Atom; }

  friend bool operator==(const Formula& a, const Formula& b) noexcept;
  friend bool operator!=(const Formula& a, const Formula& b) noexcept { return !(a == b); }

private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// Builders. Implication and equivalence have no node of their own.
Formula tt();
Formula ff();
Formula atom(std::string name);
Formula lnot(Formula f);
Formula land(Formula f, Formula g);
Formula lor(Formula f, Formula g);
Formula implies(Formula f, Formula g);
Formula iff(Formula f, Formula g);
Formula next(Formula f);
Formula wnext(Formula f);
Formula until(Formula f, Formula g);
Formula release(Formula f, Formula g);
Formula eventually(Formula f);
Formula always(Formula f);

/// `n` nested strong nexts; `n == 0` returns `f`.
Formula next_n(Formula f, std::size_t n);
Formula wnext_n(Formula f, std::size_t n);

inline Formula operator!(Formula f) { return lnot(std::move(f)); }
inline Formula operator&(Formula f, Formula g) { return land(std::move(f), std::move(g)); }
inline Formula operator|(Formula f, Formula g) { return lor(std::move(f), std::move(g)); }

/// Expands WeakNext, Eventually, Always and Release into the core
/// connectives {Atom, Not, And, Next, Until, True}. Or stays Or.
Formula expand_derived(const Formula& f);

std::set<std::string> atoms(const Formula& f);
std::size_t size(const Formula& f);
std::size_t depth(const Formula& f);

/// Renames atoms; names not in the map are kept.
Formula rename_atoms(const Formula& f, const std::function<std::string(const std::string&)>& rename);

/// Surface syntax accepted by parse_ltlf. Binary operators are always
/// parenthesized so that printing never depends on precedence.
std::string to_string(const Formula& f);

bool is_identifier(std::string_view name) noexcept;
/// Operator letters and literals that cannot name an atom.
bool is_keyword(std::string_view name) noexcept;

}  // namespace unrel

template <>
struct std::hash<unrel::Formula> {
  std::size_t operator()(const unrel::Formula& f) const noexcept { return f.hash(); }
};
