#include "unrel/formula.hpp"

#include <algorithm>
#include <vector>
#include <cctype>
#include <stdexcept>
#include <unordered_map>

namespace unrel {

struct Formula::Node {
  Op op;
  std::string name;
  std::vector<Formula> children;
  std::size_t hash;
};

namespace {

std::size_t mix(std::size_t seed, std::size_t v) noexcept {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

bool is_temporal(Op op) noexcept {
  switch (op) {
    case Op::Next:
    case Op::WeakNext:
    case Op::Until:
    case Op::Release:
    case Op::Eventually:
    case Op::Always:
      return true;
    default:
      return false;
  }
}

std::size_t arity(Op op) noexcept {
  switch (op) {
    case Op::True:
    case Op::False:
    case Op::Atom:
      return 0;
    case Op::And:
    case Op::Or:
    case Op::Until:
    case Op::Release:
      return 2;
    default:
      return 1;
  }
}

Formula::Formula() : Formula(top()) {}

Formula Formula::top() {
  static const Formula t{std::make_shared<const Node>(Node{Op::True, {}, {}, mix(0, 1)})};
  return t;
}

Formula Formula::bottom() {
  static const Formula f{std::make_shared<const Node>(Node{Op::False, {}, {}, mix(0, 2)})};
  return f;
}

Formula Formula::atom(std::string name) {
  if (!is_identifier(name) || is_keyword(name))
    throw std::invalid_argument("invalid atom name '" + name + "'");
  const std::size_t h = mix(std::hash<std::string>{}(name), 3);
  return Formula{std::make_shared<const Node>(Node{Op::Atom, std::move(name), {}, h})};
}

Formula Formula::make(Op op, Formula child) {
  if (unrel::arity(op) != 1) throw std::invalid_argument("operator is not unary");
  const std::size_t h = mix(mix(static_cast<std::size_t>(op) + 17, child.hash()), 5);
  return Formula{std::make_shared<const Node>(Node{op, {}, {std::move(child)}, h})};
}

Formula Formula::make(Op op, Formula lhs, Formula rhs) {
  if (unrel::arity(op) != 2) throw std::invalid_argument("operator is not binary");
  const std::size_t h = mix(mix(mix(static_cast<std::size_t>(op) + 31, lhs.hash()), rhs.hash()), 7);
  return Formula{std::make_shared<const Node>(Node{op, {}, {std::move(lhs), std::move(rhs)}, h})};
}

Op Formula::op() const noexcept { return node_->op; }
const std::string& Formula::name() const noexcept { return node_->name; }
std::size_t Formula::arity() const noexcept { return unrel::arity(node_->op); }
std::size_t Formula::hash() const noexcept { return node_->hash; }

const Formula& Formula::child(std::size_t i) const {
  if (i >= arity()) throw std::out_of_range("formula child index");
  return node_->children[i];
}

bool operator==(const Formula& a, const Formula& b) noexcept {
  if (a.node_ == b.node_) return true;
  if (a.node_->hash != b.node_->hash || a.node_->op != b.node_->op) return false;
  if (a.node_->op == Op::Atom) return a.node_->name == b.node_->name;
  for (std::size_t i = 0; i < a.arity(); ++i)
    if (!(a.node_->children[i] == b.node_->children[i])) return false;
  return true;
}

Formula tt() { return Formula::top(); }
Formula ff() { return Formula::bottom(); }
Formula atom(std::string name) { return Formula::atom(std::move(name)); }
Formula lnot(Formula f) { return Formula::make(Op::Not, std::move(f)); }
Formula land(Formula f, Formula g) { return Formula::make(Op::And, std::move(f), std::move(g)); }
Formula lor(Formula f, Formula g) { return Formula::make(Op::Or, std::move(f), std::move(g)); }
Formula implies(Formula f, Formula g) { return lor(lnot(std::move(f)), std::move(g)); }
Formula iff(Formula f, Formula g) {
  return land(implies(f, g), implies(g, f));
}
Formula next(Formula f) { return Formula::make(Op::Next, std::move(f)); }
Formula wnext(Formula f) { return Formula::make(Op::WeakNext, std::move(f)); }
Formula until(Formula f, Formula g) { return Formula::make(Op::Until, std::move(f), std::move(g)); }
Formula release(Formula f, Formula g) { return Formula::make(Op::Release, std::move(f), std::move(g)); }
Formula eventually(Formula f) { return Formula::make(Op::Eventually, std::move(f)); }
Formula always(Formula f) { return Formula::make(Op::Always, std::move(f)); }

Formula next_n(Formula f, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) f = next(std::move(f));
  return f;
}

Formula wnext_n(Formula f, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) f = wnext(std::move(f));
  return f;
}

namespace {

template <typename Fn>
Formula rebuild(const Formula& f, Fn&& recurse) {
  switch (f.arity()) {
    case 0:
      return f;
    case 1:
      return Formula::make(f.op(), recurse(f.child(0)));
    default:
      return Formula::make(f.op(), recurse(f.child(0)), recurse(f.child(1)));
  }
}

}  // namespace

Formula expand_derived(const Formula& f) {
  switch (f.op()) {
    case Op::WeakNext:
      return lnot(next(lnot(expand_derived(f.child(0)))));
    case Op::Eventually:
      return until(tt(), expand_derived(f.child(0)));
    case Op::Always:
      return lnot(until(tt(), lnot(expand_derived(f.child(0)))));
    case Op::Release:
      return lnot(until(lnot(expand_derived(f.child(0))), lnot(expand_derived(f.child(1)))));
    default:
      return rebuild(f, [](const Formula& c) { return expand_derived(c); });
  }
}

namespace {

void collect_atoms(const Formula& f, std::set<std::string>& out) {
  if (f.is_atom()) {
    out.insert(f.name());
    return;
  }
  for (std::size_t i = 0; i < f.arity(); ++i) collect_atoms(f.child(i), out);
}

}  // namespace

std::set<std::string> atoms(const Formula& f) {
  std::set<std::string> out;
  collect_atoms(f, out);
  return out;
}

std::size_t size(const Formula& f) {
  std::size_t n = 1;
  for (std::size_t i = 0; i < f.arity(); ++i) n += size(f.child(i));
  return n;
}

std::size_t depth(const Formula& f) {
  std::size_t d = 0;
  for (std::size_t i = 0; i < f.arity(); ++i) d = std::max(d, depth(f.child(i)));
  return d + (f.arity() == 0 ? 0 : 1);
}

Formula rename_atoms(const Formula& f, const std::function<std::string(const std::string&)>& rename) {
  if (f.is_atom()) {
    std::string to = rename(f.name());
    return to == f.name() ? f : atom(std::move(to));
  }
  return rebuild(f, [&](const Formula& c) { return rename_atoms(c, rename); });
}

namespace {

const char* op_symbol(Op op) {
  switch (op) {
    case Op::And: return " & ";
    case Op::Or: return " | ";
    case Op::Until: return " U ";
    case Op::Release: return " R ";
    case Op::Next: return "N";
    case Op::WeakNext: return "X";
    case Op::Eventually: return "F";
    case Op::Always: return "G";
    case Op::Not: return "!";
    default: return "";
  }
}

void print(const Formula& f, std::string& out) {
  switch (f.op()) {
    case Op::True:
      out += "true";
      return;
    case Op::False:
      out += "false";
      return;
    case Op::Atom:
      out += f.name();
      return;
    case Op::Not:
      out += '!';
      if (f.child(0).arity() == 0) {
        print(f.child(0), out);
      } else {
        out += '(';
        print(f.child(0), out);
        out += ')';
      }
      return;
    case Op::Next:
    case Op::WeakNext:
    case Op::Eventually:
    case Op::Always:
      out += op_symbol(f.op());
      out += '(';
      print(f.child(0), out);
      out += ')';
      return;
    default:
      out += '(';
      print(f.child(0), out);
      out += op_symbol(f.op());
      print(f.child(1), out);
      out += ')';
      return;
  }
}

}  // namespace

std::string to_string(const Formula& f) {
  std::string out;
  print(f, out);
  return out;
}

bool is_keyword(std::string_view name) noexcept {
  return name == "N" || name == "X" || name == "G" || name == "F" || name == "U" || name == "R" ||
         name == "true" || name == "false";
}

bool is_identifier(std::string_view name) noexcept {
  if (name.empty()) return false;
  const auto first = static_cast<unsigned char>(name.front());
  if (!(std::isalpha(first) || first == '_')) return false;
  for (char c : name) {
    const auto u = static_cast<unsigned char>(c);
    if (!(std::isalnum(u) || u == '_')) return false;
  }
  return true;
}

}  // namespace unrel
