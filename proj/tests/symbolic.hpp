#pragma once

// Sets of fixed-length traces as BDDs, for exhaustive oracle checks on
// formulas too wide to enumerate. Variable (i-1)*width + b is bit b of the
// letter at position i.

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "unrel/automata.hpp"
#include "unrel/formula.hpp"

namespace testsupport {

class TraceSets {
public:
  using Set = std::uint32_t;

  TraceSets(std::size_t width, std::size_t length);

  Set none() const { return 0; }
  Set all() const { return 1; }
  Set bit(std::size_t position, std::size_t b);
  Set neg(Set a) { return ite(a, 0, 1); }
  Set conj(Set a, Set b) { return ite(a, b, 0); }
  Set disj(Set a, Set b) { return ite(a, 1, b); }
  /// Letters at `position` that equal `a`.
  Set letter(std::size_t position, unrel::Letter a);

  /// {t | t, i |= f}, clause by clause from the finite-trace semantics.
  /// Atoms are looked up in `alphabet`.
  Set models(const unrel::Formula& f, const unrel::Alphabet& alphabet, std::size_t position = 1);
  /// Traces of exactly `length` letters accepted by `d`.
  Set language(const unrel::Dfa& d);

  bool contains(Set s, const unrel::Trace& t) const;
  std::size_t node_count() const { return nodes_.size(); }

private:
  struct Node {
    std::uint32_t var, lo, hi;
  };
  Set make(std::uint32_t var, Set lo, Set hi);
  Set ite(Set f, Set g, Set h);
  std::uint32_t top_var(Set s) const { return s <= 1 ? ~0U : nodes_[s].var; }
  Set cofactor(Set s, std::uint32_t var, bool value) const;

  std::size_t width_, length_;
  std::vector<Node> nodes_;
  std::unordered_map<std::uint64_t, Set> unique_;
  struct Key {
    std::uint32_t a, b, c;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept {
      return (std::uint64_t{k.a} * 0x9e3779b97f4a7c15ULL) ^ (std::uint64_t{k.b} << 21) ^ k.c;
    }
  };
  struct At {
    unrel::Formula f;
    std::size_t position;
    bool operator==(const At&) const = default;
  };
  struct AtHash {
    std::size_t operator()(const At& k) const noexcept { return k.f.hash() * 31 + k.position; }
  };
  std::unordered_map<Key, Set, KeyHash> ite_;
  std::unordered_map<At, Set, AtHash> models_;
};

}  // namespace testsupport
