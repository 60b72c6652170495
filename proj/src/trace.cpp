#include "unrel/trace.hpp"

#include <bit>
#include <unordered_map>

#include "unrel/errors.hpp"

namespace unrel {

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (names_[i] == names_[j]) throw InvalidInput("duplicate proposition '" + names_[i] + "'");
  if (names_.size() > 30) throw InvalidInput("alphabet wider than 30 propositions");
}

std::optional<std::size_t> Alphabet::find(std::string_view name) const noexcept {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

std::size_t Alphabet::index(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw InvalidInput("unknown proposition '" + std::string(name) + "'");
}

Letter Alphabet::mask(const std::vector<std::string>& names) const {
  Letter m = 0;
  for (const auto& n : names) m |= bit(n);
  return m;
}

Letter Alphabet::letter(std::initializer_list<std::string_view> true_props) const {
  Letter a = 0;
  for (auto n : true_props) a |= bit(n);
  return a;
}

std::string Alphabet::describe(Letter a) const {
  std::string out;
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (i) out += ' ';
    out += names_[i];
    out += ((a >> i) & 1U) ? "=1" : "=0";
  }
  return out;
}

Trace make_trace(const Alphabet& alphabet,
                 std::initializer_list<std::initializer_list<std::string_view>> instants) {
  Trace t;
  for (const auto& props : instants) {
    Letter a = 0;
    for (auto p : props) a |= alphabet.bit(p);
    t.letters.push_back(a);
  }
  return t;
}

TraceEvaluator::TraceEvaluator(const Formula& f, const Alphabet& alphabet) : width_(alphabet.width()) {
  compile(f, alphabet);
}

std::uint32_t TraceEvaluator::compile(const Formula& f, const Alphabet& alphabet) {
  Node n{f.op()};
  if (f.is_atom()) n.bit = static_cast<std::uint32_t>(alphabet.index(f.name()));
  if (f.arity() >= 1) n.lhs = compile(f.child(0), alphabet);
  if (f.arity() == 2) n.rhs = compile(f.child(1), alphabet);
  nodes_.push_back(n);
  return static_cast<std::uint32_t>(nodes_.size() - 1);
}

bool TraceEvaluator::evaluate(const Trace& t, std::size_t position) const {
  const std::size_t last = t.length();
  if (position < 1 || position > last)
    throw InvalidInput("position " + std::to_string(position) + " outside trace of length " +
                       std::to_string(last));
  const Letter limit = width_ >= 32 ? ~Letter{0} : static_cast<Letter>((std::uint64_t{1} << width_) - 1);
  for (Letter a : t.letters)
    if ((a & ~limit) != 0) throw InvalidInput("letter uses propositions outside the alphabet");

  // v[node * stride + i] holds t, i |= node for i in 1..last.
  const std::size_t stride = last + 1;
  std::vector<char> v(nodes_.size() * stride, 0);
  auto at = [&](std::uint32_t node, std::size_t i) -> char& { return v[node * stride + i]; };

  for (std::uint32_t k = 0; k < nodes_.size(); ++k) {
    const Node& n = nodes_[k];
    for (std::size_t i = 1; i <= last; ++i) {
      bool r = false;
      switch (n.op) {
        case Op::True: r = true; break;
        case Op::False: r = false; break;
        case Op::Atom: r = (t.at(i) >> n.bit) & 1U; break;
        case Op::Not: r = !at(n.lhs, i); break;
        case Op::And: r = at(n.lhs, i) && at(n.rhs, i); break;
        case Op::Or: r = at(n.lhs, i) || at(n.rhs, i); break;
        case Op::Next: r = i < last && at(n.lhs, i + 1); break;
        case Op::WeakNext: r = i == last || at(n.lhs, i + 1); break;
        case Op::Until:
          // some j in [i, last] with rhs at j and lhs at every k in [i, j)
          for (std::size_t j = i; j <= last && !r; ++j) {
            if (!at(n.rhs, j)) continue;
            bool before = true;
            for (std::size_t m = i; m < j && before; ++m) before = at(n.lhs, m);
            r = before;
          }
          break;
        case Op::Release:
          // every j in [i, last] has rhs at j, or lhs at some k in [i, j)
          r = true;
          for (std::size_t j = i; j <= last && r; ++j) {
            if (at(n.rhs, j)) continue;
            bool released = false;
            for (std::size_t m = i; m < j && !released; ++m) released = at(n.lhs, m);
            r = released;
          }
          break;
        case Op::Eventually:
          for (std::size_t j = i; j <= last && !r; ++j) r = at(n.lhs, j);
          break;
        case Op::Always:
          r = true;
          for (std::size_t j = i; j <= last && r; ++j) r = at(n.lhs, j);
          break;
      }
      at(k, i) = r;
    }
  }
  return at(static_cast<std::uint32_t>(nodes_.size() - 1), position);
}

bool eval_trace(const Alphabet& alphabet, const Trace& t, std::size_t position, const Formula& f) {
  return TraceEvaluator(f, alphabet).evaluate(t, position);
}

int popcount(Letter a) noexcept { return std::popcount(a); }

bool for_each_rewriting(const Trace& t, Letter rewrite_mask, const std::function<bool(const Trace&)>& fn,
                        std::size_t cap_bits) {
  const std::size_t per = static_cast<std::size_t>(popcount(rewrite_mask));
  const std::size_t bits = per * t.length();
  if (bits > cap_bits || bits > 62)
    throw ResourceError("expand", "rewriting " + std::to_string(bits) + " bits exceeds enumeration cap " +
                                      std::to_string(cap_bits));
  Trace cur = t;
  for (auto& a : cur.letters) a &= ~rewrite_mask;
  // Odometer over per-instant sub-masks of rewrite_mask; the last instant
  // varies fastest, so traces come out in lexicographic order.
  std::vector<Letter> sub(t.length(), 0);
  while (true) {
    if (!fn(cur)) return false;
    std::size_t i = t.length();
    while (i > 0) {
      --i;
      sub[i] = (sub[i] - rewrite_mask) & rewrite_mask;  // next sub-mask
      cur.letters[i] = (t.letters[i] & ~rewrite_mask) | sub[i];
      if (sub[i] != 0) break;
      if (i == 0) return true;
    }
    if (t.length() == 0) return true;
  }
}

std::vector<Trace> expand_unreliable(const Trace& t, Letter rewrite_mask, std::size_t cap_bits) {
  std::vector<Trace> out;
  for_each_rewriting(
      t, rewrite_mask,
      [&](const Trace& r) {
        out.push_back(r);
        return true;
      },
      cap_bits);
  return out;
}

std::vector<Trace> expand_unreliable(const Alphabet& alphabet, const Trace& t,
                                     const std::vector<std::string>& names, std::size_t cap_bits) {
  return expand_unreliable(t, alphabet.mask(names), cap_bits);
}

void for_each_trace(std::size_t width, std::size_t length, const std::function<void(const Trace&)>& fn) {
  const Letter count = Letter{1} << width;
  Trace t(std::vector<Letter>(length, 0));
  while (true) {
    fn(t);
    std::size_t i = length;
    while (true) {
      if (i == 0) return;
      --i;
      if (++t.letters[i] < count) break;
      t.letters[i] = 0;
    }
  }
}

}  // namespace unrel
