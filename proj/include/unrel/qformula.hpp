#pragma once

#include <memory>
#include <string>
#include <vector>

#include "unrel/formula.hpp"
#include "unrel/trace.hpp"

namespace unrel {

enum class Quantifier { Exists, Forall };

struct QuantifiedVar {
  Quantifier quantifier;
  std::string name;

  friend bool operator==(const QuantifiedVar&, const QuantifiedVar&) = default;
};

/// Prenex QLTLf formula: Q1 X1. ... Qn Xn. matrix.
struct QFormula {
  std::vector<QuantifiedVar> prefix;
  Formula matrix;

  /// Throws InvalidInput if prefix variables are not pairwise distinct.
  void validate() const;
  std::vector<std::string> bound() const;

  friend bool operator==(const QFormula&, const QFormula&) = default;
};

/// Number of adjacent prefix positions with different quantifiers.
std::size_t alternation_count(const std::vector<QuantifiedVar>& prefix);
inline std::size_t alternation_count(const QFormula& q) { return alternation_count(q.prefix); }

/// "forall u. exists v. <matrix>"
std::string to_string(const QFormula& q);

/// Non-prenex QLTLf syntax: quantifiers may appear under boolean connectives.
/// Temporal nodes are representable so that to_pnf can reject quantifiers
/// below them.
class QExpr {
public:
  enum class Kind { Leaf, Not, And, Or, Temporal, Exists, Forall };

  static QExpr leaf(Formula f);
  static QExpr negation(QExpr e);
  static QExpr conjunction(QExpr a, QExpr b);
  static QExpr disjunction(QExpr a, QExpr b);
  static QExpr temporal(Op op, std::vector<QExpr> children);
  static QExpr exists(std::string var, QExpr body);
  static QExpr forall(std::string var, QExpr body);
  static QExpr from(const QFormula& q);

  Kind kind() const noexcept { return node_->kind; }
  const Formula& formula() const { return node_->formula; }
  Op op() const noexcept { return node_->op; }
  const std::string& var() const { return node_->var; }
  const std::vector<QExpr>& children() const { return node_->children; }

  bool has_quantifier() const;

private:
  struct Node {
    Kind kind;
    Formula formula;
    Op op = Op::True;
    std::string var;
    std::vector<QExpr> children;
  };
  explicit QExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// Pulls quantifiers to the front, renaming bound variables with fresh names
/// (`name_1`, `name_2`, ...) where they would capture or collide. Throws
/// InvalidInput for a quantifier below a temporal operator.
QFormula to_pnf(const QExpr& e);
inline QFormula to_pnf(const QFormula& q) { return to_pnf(QExpr::from(q)); }

/// Brute-force QLTLf semantics: each quantifier enumerates every rewriting of
/// its variable over the whole trace. Quantified variables missing from the
/// alphabet are added as extra bits. Throws ResourceError when
/// length * |quantified variables| exceeds `cap_bits`.
bool eval_qltlf(const Alphabet& alphabet, const Trace& t, std::size_t position, const QFormula& q,
                std::size_t cap_bits = 20);
bool eval_qltlf(const Alphabet& alphabet, const Trace& t, std::size_t position, const QExpr& e,
                std::size_t cap_bits = 20);

}  // namespace unrel
