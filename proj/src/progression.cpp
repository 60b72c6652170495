#include "unrel/progression.hpp"

#include <algorithm>

#include "unrel/errors.hpp"

namespace unrel {

namespace {

std::uint64_t key2(std::uint32_t x, std::uint32_t y) { return (std::uint64_t{x} << 32) | y; }

}  // namespace

Progression::Progression(Alphabet alphabet) : alphabet_(std::move(alphabet)) {
  nodes_.push_back({terminal, 0, 0, 0});
  nodes_.push_back({terminal, 1, 1, 0});
}

Progression::Residual Progression::node(std::uint32_t var, Residual lo, Residual hi) {
  if (lo == hi) return lo;
  auto [it, inserted] = unique_.try_emplace(Triple{var, lo, hi}, static_cast<Residual>(nodes_.size()));
  if (inserted)
    nodes_.push_back({var, lo, hi, vars_[var].support | nodes_[lo].support | nodes_[hi].support});
  return it->second;
}

std::uint32_t Progression::top_var(Residual f, Residual g, Residual h) const noexcept {
  return std::min({nodes_[f].var, nodes_[g].var, nodes_[h].var});
}

Progression::Residual Progression::cofactor(Residual f, std::uint32_t var, bool value) const noexcept {
  if (nodes_[f].var != var) return f;
  return value ? nodes_[f].hi : nodes_[f].lo;
}

Progression::Residual Progression::ite(Residual f, Residual g, Residual h) {
  if (f == top()) return g;
  if (f == bottom()) return h;
  if (g == h) return g;
  if (g == top() && h == bottom()) return f;
  const Triple key{f, g, h};
  if (auto it = ite_cache_.find(key); it != ite_cache_.end()) return it->second;
  const std::uint32_t v = top_var(f, g, h);
  const Residual hi = ite(cofactor(f, v, true), cofactor(g, v, true), cofactor(h, v, true));
  const Residual lo = ite(cofactor(f, v, false), cofactor(g, v, false), cofactor(h, v, false));
  const Residual r = node(v, lo, hi);
  ite_cache_.emplace(key, r);
  return r;
}

std::uint32_t Progression::variable(const Formula& f) {
  if (auto it = var_of_.find(f); it != var_of_.end()) return it->second;
  Var v{f.op(), f};
  if (f.op() == Op::Atom) {
    auto idx = alphabet_.find(f.name());
    if (!idx) throw InvalidInput("unknown variable '" + f.name() + "' in formula");
    v.bit = static_cast<std::uint32_t>(*idx);
    v.support = Letter{1} << v.bit;
  } else {
    v.lhs = add(f.child(0));
    v.support = nodes_[v.lhs].support;
    if (f.arity() == 2) {
      v.rhs = add(f.child(1));
      v.support |= nodes_[v.rhs].support;
    }
  }
  const auto id = static_cast<std::uint32_t>(vars_.size());
  vars_.push_back(v);
  var_of_.emplace(f, id);
  vars_[id].self = node(id, bottom(), top());
  return id;
}

Progression::Residual Progression::add(const Formula& f) {
  if (auto it = bdd_of_.find(f); it != bdd_of_.end()) return it->second;
  Residual r;
  switch (f.op()) {
    case Op::True:
      r = top();
      break;
    case Op::False:
      r = bottom();
      break;
    case Op::Not:
      r = negate(add(f.child(0)));
      break;
    case Op::And:
      r = conj(add(f.child(0)), add(f.child(1)));
      break;
    case Op::Or:
      r = disj(add(f.child(0)), add(f.child(1)));
      break;
    default:
      r = vars_[variable(f)].self;
      break;
  }
  bdd_of_.emplace(f, r);
  return r;
}

Progression::Residual Progression::more_var(std::uint32_t v, Letter a) {
  const std::uint64_t key = key2(v, a & vars_[v].support);
  if (auto it = more_var_cache_.find(key); it != more_var_cache_.end()) return it->second;
  const Var x = vars_[v];
  Residual r = bottom();
  switch (x.op) {
    case Op::Atom:
      r = (a >> x.bit & 1U) ? top() : bottom();
      break;
    case Op::Next:
    case Op::WeakNext:
      r = x.lhs;
      break;
    case Op::Until:
      r = disj(more(x.rhs, a), conj(more(x.lhs, a), x.self));
      break;
    case Op::Release:
      r = conj(more(x.rhs, a), disj(more(x.lhs, a), x.self));
      break;
    case Op::Eventually:
      r = disj(more(x.lhs, a), x.self);
      break;
    case Op::Always:
      r = conj(more(x.lhs, a), x.self);
      break;
    default:
      throw InvalidInput("progression: unexpected variable kind");
  }
  more_var_cache_.emplace(key, r);
  return r;
}

Progression::Residual Progression::more(Residual r, Letter a) {
  if (r <= 1) return r;
  const std::uint64_t key = key2(r, a & nodes_[r].support);
  if (auto it = more_cache_.find(key); it != more_cache_.end()) return it->second;
  const Node n = nodes_[r];
  const Residual out = ite(more_var(n.var, a), more(n.hi, a), more(n.lo, a));
  more_cache_.emplace(key, out);
  return out;
}

bool Progression::last_var(std::uint32_t v, Letter a) {
  const std::uint64_t key = key2(v, a & vars_[v].support);
  if (auto it = last_var_cache_.find(key); it != last_var_cache_.end()) return it->second;
  const Var x = vars_[v];
  bool r = false;
  switch (x.op) {
    case Op::Atom:
      r = (a >> x.bit & 1U) != 0;
      break;
    case Op::Next:
      r = false;
      break;
    case Op::WeakNext:
      r = true;
      break;
    case Op::Until:
    case Op::Release:
      r = last(x.rhs, a);
      break;
    case Op::Eventually:
    case Op::Always:
      r = last(x.lhs, a);
      break;
    default:
      break;
  }
  last_var_cache_.emplace(key, r);
  return r;
}

bool Progression::last(Residual r, Letter a) {
  if (r <= 1) return r == top();
  const std::uint64_t key = key2(r, a & nodes_[r].support);
  if (auto it = last_cache_.find(key); it != last_cache_.end()) return it->second;
  const Node n = nodes_[r];
  const bool out = last_var(n.var, a) ? last(n.hi, a) : last(n.lo, a);
  last_cache_.emplace(key, out);
  return out;
}

Formula Progression::to_formula(Residual r) const {
  if (r == top()) return tt();
  if (r == bottom()) return ff();
  const Node& n = nodes_[r];
  const Formula v = vars_[n.var].formula;
  const Formula hi = to_formula(n.hi);
  const Formula lo = to_formula(n.lo);
  auto pos = [&]() -> Formula {
    if (n.hi == top()) return v;
    return land(v, hi);
  };
  auto neg = [&]() -> Formula {
    if (n.lo == top()) return lnot(v);
    return land(lnot(v), lo);
  };
  if (n.lo == bottom()) return pos();
  if (n.hi == bottom()) return neg();
  return lor(pos(), neg());
}

Dfa ltlf_to_dfa(const Formula& f, const Alphabet& alphabet, const Limits& limits, LtlfToDfaOptions options) {
  limits.check_width(alphabet.width(), "dfa");
  Progression prog(alphabet);
  const Progression::Residual root = prog.add(f);
  const std::size_t letters = alphabet.letter_count();

  std::unordered_map<std::uint64_t, State> id;
  std::vector<std::pair<Progression::Residual, bool>> order;
  std::vector<State> table;
  auto state_of = [&](Progression::Residual r, bool acc) {
    const std::uint64_t key = (std::uint64_t{r} << 1) | (acc ? 1U : 0U);
    auto [it, inserted] = id.try_emplace(key, static_cast<State>(order.size()));
    if (inserted) {
      order.emplace_back(r, acc);
      if (order.size() > limits.max_progression_states)
        throw ResourceError("dfa", "progression produced more than " +
                                       std::to_string(limits.max_progression_states) + " states");
      limits.check_states(order.size(), limits.max_table_entries / letters, letters, "dfa");
    }
    return it->second;
  };
  state_of(root, false);

  std::vector<State> by_sub(letters);
  for (std::size_t i = 0; i < order.size(); ++i) {
    if ((i & 63) == 0) limits.check_deadline("dfa");
    const Progression::Residual r = order[i].first;
    const Letter m = prog.support(r);
    Letter s = 0;
    do {
      by_sub[s] = state_of(prog.more(r, s), prog.last(r, s));
      s = (s - m) & m;
    } while (s != 0);
    for (Letter a = 0; a < letters; ++a) table.push_back(by_sub[a & m]);
  }

  Dfa out(alphabet, order.size(), 0);
  for (State i = 0; i < order.size(); ++i) {
    out.set_final(i, order[i].second);
    for (Letter a = 0; a < letters; ++a) out.set_next(i, a, table[std::size_t{i} * letters + a]);
  }
  return options.minimize ? minimize(out) : out;
}

Formula progress_more(const Formula& f, const Alphabet& alphabet, Letter a) {
  Progression p(alphabet);
  return p.to_formula(p.more(p.add(f), a));
}

bool progress_last(const Formula& f, const Alphabet& alphabet, Letter a) {
  Progression p(alphabet);
  return p.last(p.add(f), a);
}

}  // namespace unrel
