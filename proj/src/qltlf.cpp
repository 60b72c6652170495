#include "unrel/qltlf.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include "unrel/errors.hpp"
#include "unrel/progression.hpp"

namespace unrel {

std::vector<QuantifierBlock> quantifier_blocks(const std::vector<QuantifiedVar>& prefix) {
  std::vector<QuantifierBlock> out;
  for (const auto& v : prefix) {
    if (out.empty() || out.back().kind != v.quantifier) out.push_back({v.quantifier, {}});
    out.back().variables.push_back(v.name);
  }
  return out;
}

Dfa qltlf_to_dfa(const QFormula& qf, const Alphabet& alphabet, const Limits& limits,
                 const std::function<void(const QuantifierBlock&, const Dfa&)>& on_block) {
  qf.validate();
  for (const auto& v : qf.prefix)
    if (!alphabet.find(v.name))
      throw InvalidInput("quantified variable '" + v.name + "' is not in the alphabet");
  Dfa current = ltlf_to_dfa(qf.matrix, alphabet, limits);
  if (on_block) on_block({Quantifier::Exists, {}}, current);
  const auto blocks = quantifier_blocks(qf.prefix);
  for (auto it = blocks.rbegin(); it != blocks.rend(); ++it) {
    const Letter mask = alphabet.mask(it->variables);
    if (it->kind == Quantifier::Exists) {
      current = determinize(exist_abstract(current, mask), limits, SubsetAcceptance::Any, nullptr, "qltlf");
    } else {
      current = complement(
          determinize(exist_abstract(complement(current), mask), limits, SubsetAcceptance::Any, nullptr, "qltlf"));
    }
    if (on_block) on_block(*it, current);
  }
  return current;
}

Dfa qltlf_to_dfa(const QFormula& qf, const Alphabet& alphabet, const Limits& limits) {
  return qltlf_to_dfa(qf, alphabet, limits, nullptr);
}

std::vector<std::string> mona_names(const std::vector<std::string>& names) {
  std::vector<std::string> out;
  std::set<std::string> used;
  for (const auto& n : names) {
    std::string up;
    for (char c : n) up += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    std::string cand = up;
    for (std::size_t k = 1; used.count(cand) != 0; ++k) cand = up + "_" + std::to_string(k);
    used.insert(cand);
    out.push_back(cand);
  }
  return out;
}

namespace {

class MsoWriter {
public:
  explicit MsoWriter(std::map<std::string, std::string> names) : names_(std::move(names)) {}

  std::string at(const Formula& f, const std::string& x) {
    switch (f.op()) {
      case Op::True:
        return "true";
      case Op::False:
        return "false";
      case Op::Atom:
        return x + " in " + names_.at(f.name());
      case Op::Not:
        return "~(" + at(f.child(0), x) + ")";
      case Op::And:
        return "(" + at(f.child(0), x) + " & " + at(f.child(1), x) + ")";
      case Op::Or:
        return "(" + at(f.child(0), x) + " | " + at(f.child(1), x) + ")";
      case Op::Next: {
        const std::string y = fresh("y");
        return "(ex1 " + y + ": " + y + " = " + x + " + 1 & " + y + " <= last & " + at(f.child(0), y) + ")";
      }
      case Op::WeakNext: {
        const std::string y = fresh("y");
        return "(" + x + " = last | (ex1 " + y + ": " + y + " = " + x + " + 1 & " + y + " <= last & " +
               at(f.child(0), y) + "))";
      }
      case Op::Until: {
        const std::string y = fresh("y");
        const std::string rhs = at(f.child(1), y);
        const std::string z = fresh("z");
        return "(ex1 " + y + ": " + x + " <= " + y + " & " + y + " <= last & " + rhs + " & (all1 " + z + ": (" + x +
               " <= " + z + " & " + z + " < " + y + ") => " + at(f.child(0), z) + "))";
      }
      case Op::Release: {
        const std::string y = fresh("y");
        const std::string rhs = at(f.child(1), y);
        const std::string z = fresh("z");
        return "(all1 " + y + ": (" + x + " <= " + y + " & " + y + " <= last) => (" + rhs + " | (ex1 " + z + ": " +
               x + " <= " + z + " & " + z + " < " + y + " & " + at(f.child(0), z) + ")))";
      }
      case Op::Eventually: {
        const std::string y = fresh("y");
        return "(ex1 " + y + ": " + x + " <= " + y + " & " + y + " <= last & " + at(f.child(0), y) + ")";
      }
      case Op::Always: {
        const std::string y = fresh("y");
        return "(all1 " + y + ": (" + x + " <= " + y + " & " + y + " <= last) => " + at(f.child(0), y) + ")";
      }
    }
    throw InvalidInput("malformed formula");
  }

private:
  std::string fresh(const char* stem) { return stem + std::to_string(++counter_); }

  std::map<std::string, std::string> names_;
  std::size_t counter_ = 0;
};

}  // namespace

std::string mso_export(const QFormula& qf, const std::vector<std::string>& order) {
  qf.validate();
  const auto bound = qf.bound();
  std::set<std::string> free_atoms = atoms(qf.matrix);
  for (const auto& b : bound) free_atoms.erase(b);

  std::vector<std::string> free_list;
  for (const auto& n : order)
    if (free_atoms.count(n) && std::find(free_list.begin(), free_list.end(), n) == free_list.end())
      free_list.push_back(n);
  for (const auto& n : free_atoms)
    if (std::find(free_list.begin(), free_list.end(), n) == free_list.end()) free_list.push_back(n);

  std::vector<std::string> all = free_list;
  all.insert(all.end(), bound.begin(), bound.end());
  const auto upper = mona_names(all);
  std::map<std::string, std::string> names;
  for (std::size_t i = 0; i < all.size(); ++i) names.emplace(all[i], upper[i]);

  std::string out = "m2l-str;\n";
  if (!free_list.empty()) {
    out += "var2 ";
    for (std::size_t i = 0; i < free_list.size(); ++i) out += (i ? ", " : "") + names.at(free_list[i]);
    out += ";\n";
  }
  out += "var1 last;\nlast = max($);\n";

  std::string prefix;
  for (const auto& block : quantifier_blocks(qf.prefix)) {
    prefix += block.kind == Quantifier::Exists ? "ex2 " : "all2 ";
    for (std::size_t i = 0; i < block.variables.size(); ++i) prefix += (i ? ", " : "") + names.at(block.variables[i]);
    prefix += ": ";
  }
  MsoWriter w(names);
  out += prefix + "(ex1 x: x = 0 & " + w.at(qf.matrix, "x") + ");\n";
  return out;
}

}  // namespace unrel
