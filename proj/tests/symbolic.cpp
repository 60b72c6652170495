#include "symbolic.hpp"

#include <stdexcept>

#include "unrel/errors.hpp"

namespace testsupport {

using unrel::Formula;
using unrel::Op;

TraceSets::TraceSets(std::size_t width, std::size_t length) : width_(width), length_(length) {
  nodes_.push_back({~0U, 0, 0});
  nodes_.push_back({~0U, 1, 1});
}

TraceSets::Set TraceSets::make(std::uint32_t var, Set lo, Set hi) {
  if (lo == hi) return lo;
  if (lo >= (1U << 24) || hi >= (1U << 24)) throw std::runtime_error("trace set too large");
  const std::uint64_t key = (std::uint64_t{var} << 48) | (std::uint64_t{lo} << 24) | hi;
  if (auto it = unique_.find(key); it != unique_.end()) return it->second;
  const Set id = static_cast<Set>(nodes_.size());
  nodes_.push_back({var, lo, hi});
  unique_.emplace(key, id);
  return id;
}

TraceSets::Set TraceSets::cofactor(Set s, std::uint32_t var, bool value) const {
  if (top_var(s) != var) return s;
  return value ? nodes_[s].hi : nodes_[s].lo;
}

TraceSets::Set TraceSets::ite(Set f, Set g, Set h) {
  if (f == 1) return g;
  if (f == 0) return h;
  if (g == h) return g;
  if (g == 1 && h == 0) return f;
  const Key key{f, g, h};
  if (auto it = ite_.find(key); it != ite_.end()) return it->second;
  const std::uint32_t v = std::min({top_var(f), top_var(g), top_var(h)});
  const Set hi = ite(cofactor(f, v, true), cofactor(g, v, true), cofactor(h, v, true));
  const Set lo = ite(cofactor(f, v, false), cofactor(g, v, false), cofactor(h, v, false));
  const Set out = make(v, lo, hi);
  ite_.emplace(key, out);
  return out;
}

TraceSets::Set TraceSets::bit(std::size_t position, std::size_t b) {
  return make(static_cast<std::uint32_t>((position - 1) * width_ + b), 0, 1);
}

TraceSets::Set TraceSets::letter(std::size_t position, unrel::Letter a) {
  Set out = 1;
  for (std::size_t b = width_; b-- > 0;) {
    const auto v = static_cast<std::uint32_t>((position - 1) * width_ + b);
    out = (a >> b & 1U) ? make(v, 0, out) : make(v, out, 0);
  }
  return out;
}

TraceSets::Set TraceSets::models(const Formula& f, const unrel::Alphabet& alphabet, std::size_t i) {
  const At key{f, i};
  if (auto it = models_.find(key); it != models_.end()) return it->second;
  auto sub = [&](std::size_t c, std::size_t j) { return models(f.child(c), alphabet, j); };
  Set out = 0;
  switch (f.op()) {
    case Op::True: out = 1; break;
    case Op::False: out = 0; break;
    case Op::Atom: out = bit(i, alphabet.index(f.name())); break;
    case Op::Not: out = neg(sub(0, i)); break;
    case Op::And: out = conj(sub(0, i), sub(1, i)); break;
    case Op::Or: out = disj(sub(0, i), sub(1, i)); break;
    case Op::Next: out = i < length_ ? sub(0, i + 1) : 0; break;
    case Op::WeakNext: out = i < length_ ? sub(0, i + 1) : 1; break;
    case Op::Until: {
      // some j >= i with rhs at j and lhs at every k in [i, j)
      Set prefix = 1;
      for (std::size_t j = i; j <= length_; ++j) {
        out = disj(out, conj(prefix, sub(1, j)));
        prefix = conj(prefix, sub(0, j));
      }
      break;
    }
    case Op::Release: {
      // every j >= i has rhs at j or lhs at some k in [i, j)
      Set seen = 0;
      out = 1;
      for (std::size_t j = i; j <= length_; ++j) {
        out = conj(out, disj(sub(1, j), seen));
        seen = disj(seen, sub(0, j));
      }
      break;
    }
    case Op::Eventually:
      for (std::size_t j = i; j <= length_; ++j) out = disj(out, sub(0, j));
      break;
    case Op::Always:
      out = 1;
      for (std::size_t j = i; j <= length_; ++j) out = conj(out, sub(0, j));
      break;
  }
  models_.emplace(key, out);
  return out;
}

TraceSets::Set TraceSets::language(const unrel::Dfa& d) {
  if (d.alphabet().width() != width_) throw unrel::InvalidInput("trace set width mismatch");
  const std::size_t letters = d.alphabet().letter_count();
  // accepted[q] = suffixes from position p accepted from q
  std::vector<Set> accepted(d.state_count());
  for (unrel::State q = 0; q < d.state_count(); ++q) accepted[q] = d.is_final(q) ? 1 : 0;
  for (std::size_t p = length_; p >= 1; --p) {
    std::vector<Set> letter_sets;
    for (unrel::Letter a = 0; a < letters; ++a) letter_sets.push_back(letter(p, a));
    std::vector<Set> next(d.state_count());
    for (unrel::State q = 0; q < d.state_count(); ++q) {
      std::unordered_map<unrel::State, Set> by_target;
      for (unrel::Letter a = 0; a < letters; ++a) {
        auto [it, fresh] = by_target.try_emplace(d.next(q, a), 0);
        it->second = disj(it->second, letter_sets[a]);
      }
      Set out = 0;
      for (const auto& [t, s] : by_target) out = disj(out, conj(s, accepted[t]));
      next[q] = out;
    }
    accepted = std::move(next);
  }
  return accepted[d.initial()];
}

bool TraceSets::contains(Set s, const unrel::Trace& t) const {
  while (s > 1) {
    const Node& n = nodes_[s];
    const bool v = (t.letters.at(n.var / width_) >> (n.var % width_)) & 1U;
    s = v ? n.hi : n.lo;
  }
  return s == 1;
}

}  // namespace testsupport
