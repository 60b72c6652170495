#include "unrel/automata.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>
#include <unordered_map>

#include "unrel/errors.hpp"

namespace unrel {

namespace {

struct VectorHash {
  std::size_t operator()(const std::vector<State>& v) const noexcept {
    std::size_t h = v.size();
    for (State s : v) h ^= s + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

void require_same_alphabet(const Alphabet& a, const Alphabet& b, const char* what) {
  if (a != b)
    throw InvalidInput(std::string(what) + ": alphabets differ (" + std::to_string(a.width()) + " vs " +
                       std::to_string(b.width()) + " propositions)");
}

void check_letters(const Trace& t, std::size_t letters) {
  for (Letter a : t.letters)
    if (a >= letters) throw InvalidInput("letter " + std::to_string(a) + " outside automaton alphabet");
}

}  // namespace

Dfa::Dfa(Alphabet alphabet, std::size_t states, State initial)
    : alphabet_(std::move(alphabet)),
      letters_(alphabet_.letter_count()),
      initial_(initial),
      table_(states * letters_, 0),
      final_(states, 0) {
  if (states != 0 && initial >= states) throw InvalidInput("initial state out of range");
}

State Dfa::add_state(bool final) {
  const auto s = static_cast<State>(final_.size());
  final_.push_back(final ? 1 : 0);
  table_.resize(table_.size() + letters_, s);
  return s;
}

State Dfa::run(const Trace& t) const {
  check_letters(t, letters_);
  State s = initial_;
  for (Letter a : t.letters) s = next(s, a);
  return s;
}

bool Dfa::accepts(const Trace& t) const { return !t.empty() && is_final(run(t)); }

std::size_t Dfa::final_count() const noexcept {
  return static_cast<std::size_t>(std::count(final_.begin(), final_.end(), std::uint8_t{1}));
}

Nfa::Nfa(Alphabet alphabet) : alphabet_(std::move(alphabet)), letters_(alphabet_.letter_count()) {}

State Nfa::add_state(bool final) {
  if (offsets_.size() != final_.size() * letters_ + 1)
    throw InvalidInput("Nfa builder: previous state has incomplete successor sets");
  final_.push_back(final ? 1 : 0);
  return static_cast<State>(final_.size() - 1);
}

void Nfa::push_successors(std::vector<State> successors) {
  if (final_.empty() || offsets_.size() >= final_.size() * letters_ + 1)
    throw InvalidInput("Nfa builder: successor set pushed without a pending state");
  std::sort(successors.begin(), successors.end());
  successors.erase(std::unique(successors.begin(), successors.end()), successors.end());
  targets_.insert(targets_.end(), successors.begin(), successors.end());
  offsets_.push_back(static_cast<std::uint32_t>(targets_.size()));
}

bool Nfa::accepts(const Trace& t) const {
  if (t.empty()) return false;
  check_letters(t, letters_);
  std::vector<State> cur = initial_;
  std::vector<std::uint8_t> mark(state_count(), 0);
  for (Letter a : t.letters) {
    std::vector<State> nxt;
    for (State s : cur)
      for (const State* p = begin(s, a); p != end(s, a); ++p)
        if (!mark[*p]) {
          mark[*p] = 1;
          nxt.push_back(*p);
        }
    for (State s : nxt) mark[s] = 0;
    cur = std::move(nxt);
  }
  return std::any_of(cur.begin(), cur.end(), [&](State s) { return is_final(s); });
}

Nfa to_nfa(const Dfa& d) {
  Nfa n(d.alphabet());
  for (State s = 0; s < d.state_count(); ++s) {
    n.add_state(d.is_final(s));
    for (Letter a = 0; a < d.letter_count(); ++a) n.push_successors({d.next(s, a)});
  }
  n.add_initial(d.initial());
  return n;
}

Dfa trim(const Dfa& d) {
  constexpr State unseen = ~State{0};
  std::vector<State> id(d.state_count(), unseen);
  std::vector<State> order;
  id[d.initial()] = 0;
  order.push_back(d.initial());
  for (std::size_t i = 0; i < order.size(); ++i)
    for (Letter a = 0; a < d.letter_count(); ++a) {
      const State t = d.next(order[i], a);
      if (id[t] == unseen) {
        id[t] = static_cast<State>(order.size());
        order.push_back(t);
      }
    }
  Dfa out(d.alphabet(), order.size(), 0);
  for (State i = 0; i < order.size(); ++i) {
    out.set_final(i, d.is_final(order[i]));
    for (Letter a = 0; a < d.letter_count(); ++a) out.set_next(i, a, id[d.next(order[i], a)]);
  }
  return out;
}

Dfa complement(const Dfa& d) {
  Dfa out = d;
  for (State s = 0; s < d.state_count(); ++s) out.set_final(s, !d.is_final(s));
  return out;
}

Dfa product(const Dfa& a, const Dfa& b, const Limits& limits, std::vector<std::pair<State, State>>* pairs,
            const char* stage) {
  require_same_alphabet(a.alphabet(), b.alphabet(), "product");
  const std::size_t letters = a.letter_count();
  std::unordered_map<std::uint64_t, State> id;
  std::vector<std::pair<State, State>> order;
  std::vector<State> table;
  auto key = [](State x, State y) { return (std::uint64_t{x} << 32) | y; };
  id.emplace(key(a.initial(), b.initial()), 0);
  order.emplace_back(a.initial(), b.initial());
  for (std::size_t i = 0; i < order.size(); ++i) {
    if ((i & 255) == 0) limits.check_deadline(stage);
    const auto [x, y] = order[i];
    const State* ra = a.row(x);
    const State* rb = b.row(y);
    for (Letter l = 0; l < letters; ++l) {
      auto [it, inserted] = id.try_emplace(key(ra[l], rb[l]), static_cast<State>(order.size()));
      if (inserted) {
        order.emplace_back(ra[l], rb[l]);
        limits.check_states(order.size(), limits.max_product_states, letters, stage);
      }
      table.push_back(it->second);
    }
  }
  Dfa out(a.alphabet(), order.size(), 0);
  for (State i = 0; i < order.size(); ++i) {
    out.set_final(i, a.is_final(order[i].first) && b.is_final(order[i].second));
    for (Letter l = 0; l < letters; ++l) out.set_next(i, l, table[std::size_t{i} * letters + l]);
  }
  if (pairs != nullptr) *pairs = std::move(order);
  return out;
}

Nfa exist_abstract(const Dfa& d, Letter mask) {
  mask &= d.alphabet().full_mask();
  Nfa n(d.alphabet());
  const std::size_t letters = d.letter_count();
  std::vector<std::vector<State>> by_class(letters);
  for (State s = 0; s < d.state_count(); ++s) {
    n.add_state(d.is_final(s));
    const State* row = d.row(s);
    for (Letter c = 0; c < letters; ++c) {
      if ((c & mask) != 0) continue;
      auto& set = by_class[c];
      set.clear();
      // Enumerate sub-masks of `mask`.
      Letter v = 0;
      do {
        set.push_back(row[c | v]);
        v = (v - mask) & mask;
      } while (v != 0);
      std::sort(set.begin(), set.end());
      set.erase(std::unique(set.begin(), set.end()), set.end());
    }
    for (Letter a = 0; a < letters; ++a) n.push_successors(by_class[a & ~mask]);
  }
  n.add_initial(d.initial());
  return n;
}

Nfa exist_abstract(const Nfa& n, Letter mask) {
  mask &= n.alphabet().full_mask();
  Nfa out(n.alphabet());
  const std::size_t letters = n.letter_count();
  std::vector<std::vector<State>> by_class(letters);
  for (State s = 0; s < n.state_count(); ++s) {
    out.add_state(n.is_final(s));
    for (Letter c = 0; c < letters; ++c) {
      if ((c & mask) != 0) continue;
      auto& set = by_class[c];
      set.clear();
      Letter v = 0;
      do {
        set.insert(set.end(), n.begin(s, c | v), n.end(s, c | v));
        v = (v - mask) & mask;
      } while (v != 0);
    }
    for (Letter a = 0; a < letters; ++a) out.push_successors(by_class[a & ~mask]);
  }
  for (State s : n.initial()) out.add_initial(s);
  return out;
}

Nfa exist_abstract(const Nfa& n, const std::vector<std::string>& names) {
  return exist_abstract(n, n.alphabet().mask(names));
}

Dfa determinize(const Nfa& n, const Limits& limits, SubsetAcceptance acceptance,
                std::vector<std::vector<State>>* subsets, const char* stage) {
  const std::size_t letters = n.letter_count();
  std::unordered_map<std::vector<State>, State, VectorHash> id;
  std::vector<std::vector<State>> order;
  std::vector<State> table;

  std::vector<State> init = n.initial();
  std::sort(init.begin(), init.end());
  init.erase(std::unique(init.begin(), init.end()), init.end());
  id.emplace(init, 0);
  order.push_back(init);

  std::vector<std::uint32_t> stamp(n.state_count(), 0);
  std::uint32_t clock = 0;
  std::vector<State> buf;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if ((i & 63) == 0) limits.check_deadline(stage);
    for (Letter a = 0; a < letters; ++a) {
      ++clock;
      buf.clear();
      for (State s : order[i])
        for (const State* p = n.begin(s, a); p != n.end(s, a); ++p)
          if (stamp[*p] != clock) {
            stamp[*p] = clock;
            buf.push_back(*p);
          }
      std::sort(buf.begin(), buf.end());
      auto it = id.find(buf);
      if (it == id.end()) {
        it = id.emplace(buf, static_cast<State>(order.size())).first;
        order.push_back(buf);
        limits.check_states(order.size(), limits.max_subsets, letters, stage);
      }
      table.push_back(it->second);
    }
  }

  Dfa out(n.alphabet(), order.size(), 0);
  for (State i = 0; i < order.size(); ++i) {
    const auto& members = order[i];
    bool fin;
    if (acceptance == SubsetAcceptance::Any)
      fin = std::any_of(members.begin(), members.end(), [&](State s) { return n.is_final(s); });
    else
      fin = !members.empty() && std::all_of(members.begin(), members.end(), [&](State s) { return n.is_final(s); });
    out.set_final(i, fin);
    for (Letter a = 0; a < letters; ++a) out.set_next(i, a, table[std::size_t{i} * letters + a]);
  }
  if (subsets != nullptr) *subsets = std::move(order);
  return out;
}

Dfa belief_construct(const Dfa& d, Letter unreliable, const Limits& limits,
                     std::vector<std::vector<State>>* beliefs) {
  return determinize(exist_abstract(d, unreliable), limits, SubsetAcceptance::All, beliefs, "belief");
}

Dfa minimize(const Dfa& input) {
  const Dfa d = trim(input);
  const std::size_t n = d.state_count();
  const std::size_t letters = d.letter_count();
  std::vector<State> cls(n);
  std::size_t classes = 0;
  {
    State fin_id = ~State{0};
    State rej_id = ~State{0};
    for (State s = 0; s < n; ++s) {
      State& slot = d.is_final(s) ? fin_id : rej_id;
      if (slot == ~State{0}) slot = static_cast<State>(classes++);
      cls[s] = slot;
    }
  }
  std::vector<State> sig(letters + 1);
  while (true) {
    std::unordered_map<std::vector<State>, State, VectorHash> ids;
    std::vector<State> next_cls(n);
    for (State s = 0; s < n; ++s) {
      sig[0] = cls[s];
      const State* row = d.row(s);
      for (Letter a = 0; a < letters; ++a) sig[a + 1] = cls[row[a]];
      next_cls[s] = ids.try_emplace(sig, static_cast<State>(ids.size())).first->second;
    }
    const std::size_t refined = ids.size();
    cls.swap(next_cls);
    if (refined == classes) break;
    classes = refined;
  }
  Dfa q(d.alphabet(), classes, cls[d.initial()]);
  for (State s = 0; s < n; ++s) {
    q.set_final(cls[s], d.is_final(s));
    for (Letter a = 0; a < letters; ++a) q.set_next(cls[s], a, cls[d.next(s, a)]);
  }
  return trim(q);
}

namespace {

// positions[i] = bit index in `from` of proposition i of `to`.
std::vector<std::size_t> positions_in(const Alphabet& to, const Alphabet& from, const char* what) {
  std::vector<std::size_t> pos;
  for (const auto& name : to.names()) {
    auto idx = from.find(name);
    if (!idx) throw InvalidInput(std::string(what) + ": proposition '" + name + "' not in source alphabet");
    pos.push_back(*idx);
  }
  return pos;
}

}  // namespace

Dfa restrict_alphabet(const Dfa& d, const Alphabet& sub) {
  const auto pos = positions_in(sub, d.alphabet(), "restrict_alphabet");
  Letter kept = 0;
  for (auto p : pos) kept |= Letter{1} << p;
  for (State s = 0; s < d.state_count(); ++s)
    for (Letter a = 0; a < d.letter_count(); ++a)
      if (d.next(s, a) != d.next(s, a & kept))
        throw InvalidInput("restrict_alphabet: transitions depend on a dropped proposition");
  Dfa out(sub, d.state_count(), d.initial());
  for (State s = 0; s < d.state_count(); ++s) {
    out.set_final(s, d.is_final(s));
    for (Letter b = 0; b < out.letter_count(); ++b) {
      Letter a = 0;
      for (std::size_t i = 0; i < pos.size(); ++i)
        if (b >> i & 1U) a |= Letter{1} << pos[i];
      out.set_next(s, b, d.next(s, a));
    }
  }
  return out;
}

Dfa extend_alphabet(const Dfa& d, const Alphabet& super) {
  const auto pos = positions_in(d.alphabet(), super, "extend_alphabet");
  Dfa out(super, d.state_count(), d.initial());
  for (State s = 0; s < d.state_count(); ++s) {
    out.set_final(s, d.is_final(s));
    for (Letter b = 0; b < out.letter_count(); ++b) {
      Letter a = 0;
      for (std::size_t i = 0; i < pos.size(); ++i)
        if (b >> pos[i] & 1U) a |= Letter{1} << i;
      out.set_next(s, b, d.next(s, a));
    }
  }
  return out;
}

namespace {

template <typename Differs, typename Step>
std::optional<Trace> bfs_witness(std::uint64_t start, std::size_t letters, Differs differs, Step step) {
  std::unordered_map<std::uint64_t, std::pair<std::uint64_t, Letter>> parent;
  std::deque<std::uint64_t> queue{start};
  parent.emplace(start, std::make_pair(start, Letter{0}));
  auto path = [&](std::uint64_t node, Letter last) {
    std::vector<Letter> rev{last};
    while (node != start) {
      const auto& [p, a] = parent.at(node);
      rev.push_back(a);
      node = p;
    }
    std::reverse(rev.begin(), rev.end());
    return Trace(std::move(rev));
  };
  while (!queue.empty()) {
    const std::uint64_t cur = queue.front();
    queue.pop_front();
    for (Letter a = 0; a < letters; ++a) {
      const std::uint64_t nxt = step(cur, a);
      if (differs(nxt)) return path(cur, a);
      if (parent.try_emplace(nxt, cur, a).second) queue.push_back(nxt);
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<Trace> distinguishing_trace(const Dfa& a, const Dfa& b) {
  require_same_alphabet(a.alphabet(), b.alphabet(), "distinguishing_trace");
  auto key = [](State x, State y) { return (std::uint64_t{x} << 32) | y; };
  return bfs_witness(
      key(a.initial(), b.initial()), a.letter_count(),
      [&](std::uint64_t k) { return a.is_final(State(k >> 32)) != b.is_final(State(k & 0xffffffffU)); },
      [&](std::uint64_t k, Letter l) { return key(a.next(State(k >> 32), l), b.next(State(k & 0xffffffffU), l)); });
}

std::optional<Trace> shortest_accepted(const Dfa& d) {
  return bfs_witness(
      d.initial(), d.letter_count(), [&](std::uint64_t k) { return d.is_final(State(k)); },
      [&](std::uint64_t k, Letter l) { return std::uint64_t{d.next(State(k), l)}; });
}

std::string letters_label(const Alphabet& alphabet, const std::vector<Letter>& letters) {
  const std::size_t width = alphabet.width();
  const std::size_t total = alphabet.letter_count();
  if (letters.size() == total) return "true";
  std::vector<std::uint8_t> in(total, 0), covered(total, 0);
  for (Letter a : letters) in[a] = 1;
  auto cube_inside = [&](Letter base, Letter free) {
    Letter v = 0;
    do {
      if (!in[base | v]) return false;
      v = (v - free) & free;
    } while (v != 0);
    return true;
  };
  std::vector<std::string> cubes;
  for (Letter a : letters) {
    if (covered[a]) continue;
    Letter free = 0;
    for (std::size_t i = 0; i < width; ++i) {
      const Letter bit = Letter{1} << i;
      if (cube_inside(a & ~(free | bit), free | bit)) free |= bit;
    }
    const Letter base = a & ~free;
    Letter v = 0;
    do {
      covered[base | v] = 1;
      v = (v - free) & free;
    } while (v != 0);
    std::string cube;
    for (std::size_t i = 0; i < width; ++i) {
      if (free >> i & 1U) continue;
      if (!cube.empty()) cube += '&';
      if (!(base >> i & 1U)) cube += '!';
      cube += alphabet.name(i);
    }
    cubes.push_back(cube.empty() ? "true" : cube);
  }
  std::string out;
  for (std::size_t i = 0; i < cubes.size(); ++i) {
    if (i) out += " | ";
    out += cubes[i];
  }
  return out;
}

std::string to_dot(const Dfa& d, const std::string& name) {
  std::ostringstream out;
  out << "digraph " << name << " {\n  rankdir=LR;\n  node [shape=circle];\n";
  out << "  init [shape=point];\n  init -> " << d.initial() << ";\n";
  for (State s = 0; s < d.state_count(); ++s)
    if (d.is_final(s)) out << "  " << s << " [shape=doublecircle];\n";
  for (State s = 0; s < d.state_count(); ++s) {
    std::map<State, std::vector<Letter>> edges;
    for (Letter a = 0; a < d.letter_count(); ++a) edges[d.next(s, a)].push_back(a);
    for (const auto& [t, ls] : edges)
      out << "  " << s << " -> " << t << " [label=\"" << letters_label(d.alphabet(), ls) << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace unrel
