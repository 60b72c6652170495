#include "unrel/qformula.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "unrel/errors.hpp"

namespace unrel {

void QFormula::validate() const {
  std::set<std::string> seen;
  for (const auto& v : prefix)
    if (!seen.insert(v.name).second) throw InvalidInput("variable '" + v.name + "' quantified twice");
}

std::vector<std::string> QFormula::bound() const {
  std::vector<std::string> out;
  for (const auto& v : prefix) out.push_back(v.name);
  return out;
}

std::size_t alternation_count(const std::vector<QuantifiedVar>& prefix) {
  std::size_t n = 0;
  for (std::size_t i = 1; i < prefix.size(); ++i)
    if (prefix[i].quantifier != prefix[i - 1].quantifier) ++n;
  return n;
}

std::string to_string(const QFormula& q) {
  std::string out;
  for (const auto& v : q.prefix) {
    out += v.quantifier == Quantifier::Exists ? "exists " : "forall ";
    out += v.name;
    out += ". ";
  }
  return out + to_string(q.matrix);
}

QExpr QExpr::leaf(Formula f) { return QExpr(std::make_shared<const Node>(Node{Kind::Leaf, std::move(f), Op::True, {}, {}})); }

QExpr QExpr::negation(QExpr e) {
  return QExpr(std::make_shared<const Node>(Node{Kind::Not, {}, Op::Not, {}, {std::move(e)}}));
}

QExpr QExpr::conjunction(QExpr a, QExpr b) {
  return QExpr(std::make_shared<const Node>(Node{Kind::And, {}, Op::And, {}, {std::move(a), std::move(b)}}));
}

QExpr QExpr::disjunction(QExpr a, QExpr b) {
  return QExpr(std::make_shared<const Node>(Node{Kind::Or, {}, Op::Or, {}, {std::move(a), std::move(b)}}));
}

QExpr QExpr::temporal(Op op, std::vector<QExpr> children) {
  if (!is_temporal(op) || children.size() != arity(op))
    throw InvalidInput("QExpr::temporal needs a temporal operator and matching arity");
  return QExpr(std::make_shared<const Node>(Node{Kind::Temporal, {}, op, {}, std::move(children)}));
}

QExpr QExpr::exists(std::string var, QExpr body) {
  return QExpr(std::make_shared<const Node>(Node{Kind::Exists, {}, Op::True, std::move(var), {std::move(body)}}));
}

QExpr QExpr::forall(std::string var, QExpr body) {
  return QExpr(std::make_shared<const Node>(Node{Kind::Forall, {}, Op::True, std::move(var), {std::move(body)}}));
}

QExpr QExpr::from(const QFormula& q) {
  QExpr e = leaf(q.matrix);
  for (auto it = q.prefix.rbegin(); it != q.prefix.rend(); ++it)
    e = it->quantifier == Quantifier::Exists ? exists(it->name, e) : forall(it->name, e);
  return e;
}

bool QExpr::has_quantifier() const {
  if (kind() == Kind::Exists || kind() == Kind::Forall) return true;
  return std::any_of(children().begin(), children().end(), [](const QExpr& c) { return c.has_quantifier(); });
}

namespace {

void collect_names(const QExpr& e, std::set<std::string>& out) {
  if (e.kind() == QExpr::Kind::Leaf) {
    auto a = atoms(e.formula());
    out.insert(a.begin(), a.end());
    return;
  }
  if (e.kind() == QExpr::Kind::Exists || e.kind() == QExpr::Kind::Forall) out.insert(e.var());
  for (const auto& c : e.children()) collect_names(c, out);
}

Formula to_ltl(const QExpr& e) {
  switch (e.kind()) {
    case QExpr::Kind::Leaf: return e.formula();
    case QExpr::Kind::Not: return lnot(to_ltl(e.children()[0]));
    case QExpr::Kind::And: return land(to_ltl(e.children()[0]), to_ltl(e.children()[1]));
    case QExpr::Kind::Or: return lor(to_ltl(e.children()[0]), to_ltl(e.children()[1]));
    case QExpr::Kind::Temporal:
      if (e.children().size() == 1) return Formula::make(e.op(), to_ltl(e.children()[0]));
      return Formula::make(e.op(), to_ltl(e.children()[0]), to_ltl(e.children()[1]));
    default:
      throw InvalidInput("unsupported input: quantifier below a temporal operator");
  }
}

class Prenexer {
public:
  explicit Prenexer(std::set<std::string> used) : used_(std::move(used)) {}

  QFormula run(const QExpr& e) {
    switch (e.kind()) {
      case QExpr::Kind::Leaf:
        return {{}, e.formula()};
      case QExpr::Kind::Temporal:
        if (e.has_quantifier()) throw InvalidInput("unsupported input: quantifier below a temporal operator");
        return {{}, to_ltl(e)};
      case QExpr::Kind::Not: {
        QFormula q = run(e.children()[0]);
        for (auto& v : q.prefix)
          v.quantifier = v.quantifier == Quantifier::Exists ? Quantifier::Forall : Quantifier::Exists;
        q.matrix = lnot(q.matrix);
        return q;
      }
      case QExpr::Kind::And:
      case QExpr::Kind::Or: {
        QFormula a = run(e.children()[0]);
        QFormula b = run(e.children()[1]);
        const auto free_b = free_names(b);
        const auto bound_b = b.bound();
        for (const auto& name : a.bound()) {
          const bool clash = free_b.count(name) != 0 ||
                             std::find(bound_b.begin(), bound_b.end(), name) != bound_b.end();
          if (clash) rename_bound(a, name, fresh(name));
        }
        const auto free_a = free_names(a);
        for (const auto& name : b.bound())
          if (free_a.count(name) != 0) rename_bound(b, name, fresh(name));
        QFormula out;
        out.prefix = a.prefix;
        out.prefix.insert(out.prefix.end(), b.prefix.begin(), b.prefix.end());
        out.matrix = e.kind() == QExpr::Kind::And ? land(a.matrix, b.matrix) : lor(a.matrix, b.matrix);
        return out;
      }
      case QExpr::Kind::Exists:
      case QExpr::Kind::Forall: {
        QFormula body = run(e.children()[0]);
        const auto inner = body.bound();
        if (std::find(inner.begin(), inner.end(), e.var()) != inner.end())
          rename_bound(body, e.var(), fresh(e.var()));
        QFormula out;
        out.prefix.push_back(
            {e.kind() == QExpr::Kind::Exists ? Quantifier::Exists : Quantifier::Forall, e.var()});
        out.prefix.insert(out.prefix.end(), body.prefix.begin(), body.prefix.end());
        out.matrix = body.matrix;
        return out;
      }
    }
    throw InvalidInput("malformed QExpr");
  }

private:
  static std::set<std::string> free_names(const QFormula& q) {
    auto names = atoms(q.matrix);
    for (const auto& v : q.prefix) names.erase(v.name);
    return names;
  }

  static void rename_bound(QFormula& q, const std::string& from, const std::string& to) {
    for (auto& v : q.prefix)
      if (v.name == from) v.name = to;
    q.matrix = rename_atoms(q.matrix, [&](const std::string& n) { return n == from ? to : n; });
  }

  std::string fresh(const std::string& base) {
    for (std::size_t i = 1;; ++i) {
      std::string candidate = base + "_" + std::to_string(i);
      if (used_.insert(candidate).second) return candidate;
    }
  }

  std::set<std::string> used_;
};

Alphabet extend(const Alphabet& alphabet, const std::vector<std::string>& extra) {
  std::vector<std::string> names = alphabet.names();
  for (const auto& n : extra)
    if (!alphabet.find(n) && std::find(names.begin(), names.end(), n) == names.end()) names.push_back(n);
  return Alphabet(std::move(names));
}

void collect_bound(const QExpr& e, std::vector<std::string>& out) {
  if (e.kind() == QExpr::Kind::Exists || e.kind() == QExpr::Kind::Forall) out.push_back(e.var());
  for (const auto& c : e.children()) collect_bound(c, out);
}

}  // namespace

QFormula to_pnf(const QExpr& e) {
  std::set<std::string> used;
  collect_names(e, used);
  QFormula q = Prenexer(std::move(used)).run(e);
  q.validate();
  return q;
}

bool eval_qltlf(const Alphabet& alphabet, const Trace& t, std::size_t position, const QFormula& q,
                std::size_t cap_bits) {
  q.validate();
  if (t.length() * q.prefix.size() > cap_bits)
    throw ResourceError("eval_qltlf", "enumeration of " + std::to_string(t.length() * q.prefix.size()) +
                                          " bits exceeds cap " + std::to_string(cap_bits));
  const Alphabet ext = extend(alphabet, q.bound());
  const TraceEvaluator matrix(q.matrix, ext);
  if (position < 1 || position > t.length())
    throw InvalidInput("position " + std::to_string(position) + " outside trace");

  std::function<bool(std::size_t, const Trace&)> go = [&](std::size_t k, const Trace& cur) -> bool {
    if (k == q.prefix.size()) return matrix.evaluate(cur, position);
    const Letter bit = ext.bit(q.prefix[k].name);
    if (q.prefix[k].quantifier == Quantifier::Exists) {
      bool found = false;
      for_each_rewriting(cur, bit, [&](const Trace& r) { return !(found = go(k + 1, r)); }, 64);
      return found;
    }
    bool all = true;
    for_each_rewriting(cur, bit, [&](const Trace& r) { return all = go(k + 1, r); }, 64);
    return all;
  };
  return go(0, t);
}

bool eval_qltlf(const Alphabet& alphabet, const Trace& t, std::size_t position, const QExpr& e,
                std::size_t cap_bits) {
  std::vector<std::string> bound;
  collect_bound(e, bound);
  if (t.length() * bound.size() > cap_bits)
    throw ResourceError("eval_qltlf", "enumeration exceeds cap " + std::to_string(cap_bits));
  if (position < 1 || position > t.length())
    throw InvalidInput("position " + std::to_string(position) + " outside trace");
  const Alphabet ext = extend(alphabet, bound);

  std::function<bool(const QExpr&, const Trace&)> go = [&](const QExpr& x, const Trace& cur) -> bool {
    switch (x.kind()) {
      case QExpr::Kind::Leaf:
        return TraceEvaluator(x.formula(), ext).evaluate(cur, position);
      case QExpr::Kind::Temporal:
        if (x.has_quantifier()) throw InvalidInput("unsupported input: quantifier below a temporal operator");
        return TraceEvaluator(to_ltl(x), ext).evaluate(cur, position);
      case QExpr::Kind::Not:
        return !go(x.children()[0], cur);
      case QExpr::Kind::And:
        return go(x.children()[0], cur) && go(x.children()[1], cur);
      case QExpr::Kind::Or:
        return go(x.children()[0], cur) || go(x.children()[1], cur);
      case QExpr::Kind::Exists: {
        bool found = false;
        for_each_rewriting(cur, ext.bit(x.var()),
                           [&](const Trace& r) { return !(found = go(x.children()[0], r)); }, 64);
        return found;
      }
      case QExpr::Kind::Forall: {
        bool all = true;
        for_each_rewriting(cur, ext.bit(x.var()), [&](const Trace& r) { return all = go(x.children()[0], r); },
                           64);
        return all;
      }
    }
    return false;
  };
  return go(e, t);
}

}  // namespace unrel
