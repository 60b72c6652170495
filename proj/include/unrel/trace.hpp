#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "unrel/formula.hpp"

namespace unrel {

/// Truth assignment to an alphabet: bit i is proposition i.
using Letter = std::uint32_t;

/// Ordered proposition set. Position in the list is the bit position of the
/// proposition in every Letter over this alphabet.
class Alphabet {
public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> names);

  std::size_t width() const noexcept { return names_.size(); }
  std::size_t letter_count() const noexcept { return std::size_t{1} << names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }

  std::optional<std::size_t> find(std::string_view name) const noexcept;
  /// Throws InvalidInput for unknown names.
  std::size_t index(std::string_view name) const;
  Letter bit(std::string_view name) const { return Letter{1} << index(name); }
  Letter mask(const std::vector<std::string>& names) const;
  /// Letter in which exactly `true_props` hold.
  Letter letter(std::initializer_list<std::string_view> true_props) const;
  Letter full_mask() const noexcept { return static_cast<Letter>(letter_count() - 1); }

  /// "a=1 b=0 ..." in alphabet order.
  std::string describe(Letter a) const;

  friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.names_ == b.names_; }
  friend bool operator!=(const Alphabet& a, const Alphabet& b) { return !(a == b); }

private:
  std::vector<std::string> names_;
};

/// Finite sequence of letters. Formula semantics only accept nonempty traces;
/// automata reject the empty one.
struct Trace {
  std::vector<Letter> letters;

  Trace() = default;
  Trace(std::initializer_list<Letter> ls) : letters(ls) {}
  explicit Trace(std::vector<Letter> ls) : letters(std::move(ls)) {}

  std::size_t length() const noexcept { return letters.size(); }
  bool empty() const noexcept { return letters.empty(); }
  /// 1-based access, matching formula positions.
  Letter at(std::size_t position) const { return letters.at(position - 1); }

  friend bool operator==(const Trace& a, const Trace& b) { return a.letters == b.letters; }
  friend bool operator<(const Trace& a, const Trace& b) { return a.letters < b.letters; }
};

/// Builds a trace from per-instant lists of true propositions.
Trace make_trace(const Alphabet& alphabet,
                 std::initializer_list<std::initializer_list<std::string_view>> instants);

/// Reference semantics for LTLf over finite traces, evaluated clause by
/// clause (Until as "some j with i <= j <= last ..."). This is the oracle the
/// automaton constructions are tested against, so it deliberately avoids the
/// fixpoint unfoldings those constructions use.
///
/// The formula is compiled once; evaluate() can then be called on many traces.
class TraceEvaluator {
public:
  TraceEvaluator(const Formula& f, const Alphabet& alphabet);

  /// t, position |= f. Positions are 1-based. Throws InvalidInput when the
  /// position is out of range or a letter uses bits beyond the alphabet.
  bool evaluate(const Trace& t, std::size_t position = 1) const;

private:
  struct Node {
    Op op;
    std::uint32_t bit = 0;
    std::uint32_t lhs = 0;
    std::uint32_t rhs = 0;
  };
  std::uint32_t compile(const Formula& f, const Alphabet& alphabet);

  std::vector<Node> nodes_;  // children precede parents
  std::size_t width_;
};

bool eval_trace(const Alphabet& alphabet, const Trace& t, std::size_t position, const Formula& f);

/// Calls `fn` for every trace that agrees with `t` outside `rewrite_mask`,
/// in increasing order of the rewritten bits. Stops early when `fn` returns
/// false; returns whether it ran to completion. Throws ResourceError when
/// popcount(mask) * length exceeds `cap_bits`.
bool for_each_rewriting(const Trace& t, Letter rewrite_mask, const std::function<bool(const Trace&)>& fn,
                        std::size_t cap_bits = 20);

/// exp_V(proj_V(t)): all traces equal to `t` up to the propositions in V.
std::vector<Trace> expand_unreliable(const Trace& t, Letter rewrite_mask, std::size_t cap_bits = 20);
std::vector<Trace> expand_unreliable(const Alphabet& alphabet, const Trace& t,
                                     const std::vector<std::string>& names, std::size_t cap_bits = 20);

/// Every trace of exactly `length` letters over `width` bits, in
/// lexicographic order. Test and oracle helper.
void for_each_trace(std::size_t width, std::size_t length, const std::function<void(const Trace&)>& fn);

int popcount(Letter a) noexcept;

}  // namespace unrel
