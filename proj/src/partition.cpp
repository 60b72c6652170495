#include "unrel/partition.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "unrel/errors.hpp"
#include "unrel/parser.hpp"

namespace unrel {

void Partition::validate() const {
  std::set<std::string> seen;
  auto add = [&](const std::vector<std::string>& names, const char* role) {
    for (const auto& n : names) {
      if (!is_identifier(n) || is_keyword(n))
        throw InvalidInput(std::string("invalid ") + role + " name '" + n + "'");
      if (!seen.insert(n).second) throw InvalidInput("'" + n + "' declared more than once");
    }
  };
  add(outputs, "output");
  add(reliable, "input");
  add(unreliable, "input");
  if (seen.empty()) throw InvalidInput("partition declares no variables");
}

Alphabet Partition::alphabet() const {
  std::vector<std::string> names = outputs;
  names.insert(names.end(), reliable.begin(), reliable.end());
  names.insert(names.end(), unreliable.begin(), unreliable.end());
  return Alphabet(std::move(names));
}

std::vector<std::string> Partition::inputs() const {
  std::vector<std::string> names = reliable;
  names.insert(names.end(), unreliable.begin(), unreliable.end());
  return names;
}

Letter Partition::output_mask() const noexcept { return (Letter{1} << outputs.size()) - 1; }

Letter Partition::input_mask() const noexcept {
  return ((Letter{1} << input_count()) - 1) << outputs.size();
}

Letter Partition::unreliable_mask() const noexcept {
  return ((Letter{1} << unreliable.size()) - 1) << (outputs.size() + reliable.size());
}

namespace {

std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char c : text) {
    if (c == '\n') {
      if (!cur.empty() && cur.back() == '\r') cur.pop_back();
      lines.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty() && cur.back() == '\r') cur.pop_back();
  if (!cur.empty()) lines.push_back(std::move(cur));
  return lines;
}

bool blank(std::string_view s) {
  return std::all_of(s.begin(), s.end(), [](char c) { return c == ' ' || c == '\t' || c == '\r'; });
}

std::vector<std::string> words(std::string_view s) {
  std::istringstream in{std::string(s)};
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

}  // namespace

Partition parse_partition(std::string_view text) {
  std::vector<std::string> inputs, outputs, unobservables;
  bool have_inputs = false, have_outputs = false, have_unobs = false;
  const auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string& line = lines[i];
    if (blank(line)) continue;
    const auto colon = line.find(':');
    auto ws = words(line.substr(0, colon == std::string::npos ? line.size() : colon));
    const std::string key = ws.empty() ? std::string() : ws.front();
    if (colon == std::string::npos || ws.size() != 1)
      throw ParseError("expected '.inputs:', '.outputs:' or '.unobservables:'", 1, i + 1);
    auto names = words(line.substr(colon + 1));
    auto take = [&](bool& have, std::vector<std::string>& into) {
      if (have) throw ParseError("section '" + key + "' repeated", 1, i + 1);
      have = true;
      into = std::move(names);
    };
    if (key == ".inputs") take(have_inputs, inputs);
    else if (key == ".outputs") take(have_outputs, outputs);
    else if (key == ".unobservables") take(have_unobs, unobservables);
    else throw ParseError("unknown section '" + key + "'", 1, i + 1);
  }
  if (!have_inputs) throw InvalidInput("partition: missing '.inputs:' section");
  if (!have_outputs) throw InvalidInput("partition: missing '.outputs:' section");

  Partition p;
  p.outputs = outputs;
  for (const auto& u : unobservables) {
    if (std::find(inputs.begin(), inputs.end(), u) == inputs.end())
      throw InvalidInput("partition: unobservable '" + u + "' is not listed under .inputs");
  }
  for (const auto& in : inputs) {
    if (std::find(outputs.begin(), outputs.end(), in) != outputs.end())
      throw InvalidInput("partition: '" + in + "' is both an input and an output");
    if (std::find(unobservables.begin(), unobservables.end(), in) == unobservables.end())
      p.reliable.push_back(in);
  }
  p.unreliable = unobservables;
  p.validate();
  return p;
}

namespace {

void join_names(std::string& out, const std::vector<std::string>& names) {
  for (const auto& n : names) {
    out += ' ';
    out += n;
  }
}

}  // namespace

std::string to_part_text(const Partition& p) {
  std::string out = ".inputs:";
  join_names(out, p.inputs());
  out += "\n.outputs:";
  join_names(out, p.outputs);
  out += '\n';
  if (!p.unreliable.empty()) {
    out += ".unobservables:";
    join_names(out, p.unreliable);
    out += '\n';
  }
  return out;
}

GoalPair parse_ltlf_file(std::string_view text) {
  std::vector<std::pair<std::size_t, std::string>> content;
  const auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i)
    if (!blank(lines[i])) content.emplace_back(i + 1, lines[i]);
  if (content.size() != 2)
    throw InvalidInput("formula file must contain exactly two nonempty lines (main, backup); found " +
                       std::to_string(content.size()));
  auto parse_line = [](const std::pair<std::size_t, std::string>& l) {
    try {
      return parse_ltlf(l.second);
    } catch (const ParseError& e) {
      throw ParseError(e.detail(), e.column(), l.first);
    }
  };
  return {parse_line(content[0]), parse_line(content[1])};
}

std::string to_ltlf_text(const GoalPair& goals) {
  return to_string(goals.main) + "\n" + to_string(goals.backup) + "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write '" + path + "'");
  out << content;
  if (!out) throw InvalidInput("failed writing '" + path + "'");
}

}  // namespace unrel
