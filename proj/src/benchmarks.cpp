#include "unrel/benchmarks.hpp"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "unrel/errors.hpp"
#include "unrel/parser.hpp"
#include "unrel/progression.hpp"

namespace unrel {

namespace fs = std::filesystem;

std::string_view to_string(Family f) noexcept {
  switch (f) {
    case Family::Sheep: return "sheep";
    case Family::Trap: return "trap";
    case Family::Hiker: return "hiker";
    case Family::Random: return "random";
    default: return "file";
  }
}

std::string_view to_string(Expected e) noexcept {
  switch (e) {
    case Expected::Realizable: return "realizable";
    case Expected::Unrealizable: return "unrealizable";
    default: return "unknown";
  }
}

std::string expected_text(Expected e) {
  switch (e) {
    case Expected::Realizable: return "1";
    case Expected::Unrealizable: return "0";
    default: return "unknown";
  }
}

Expected parse_expected(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  if (text == "1") return Expected::Realizable;
  if (text == "0") return Expected::Unrealizable;
  if (text == "unknown" || text.empty()) return Expected::Unknown;
  throw InvalidInput("expected file must contain 0, 1 or unknown, got '" + std::string(text) + "'");
}

namespace {

Formula conj(const std::vector<Formula>& fs) {
  if (fs.empty()) return tt();
  Formula out = fs.front();
  for (std::size_t i = 1; i < fs.size(); ++i) out = land(out, fs[i]);
  return out;
}

Formula disj(const std::vector<Formula>& fs) {
  if (fs.empty()) return ff();
  Formula out = fs.front();
  for (std::size_t i = 1; i < fs.size(); ++i) out = lor(out, fs[i]);
  return out;
}

// ---------------------------------------------------------------- sheep

std::string left_var(int i) { return "left_" + std::to_string(i); }
std::string move_var(int i) { return "move_" + std::to_string(i); }
std::string dis_var(int i, int j) { return "disallow_" + std::to_string(i) + "_" + std::to_string(j); }

std::pair<int, int> ordered(std::pair<int, int> p, int n) {
  if (p.first == p.second || p.first < 1 || p.second < 1 || p.first > n || p.second > n)
    throw InvalidInput("sheep pair (" + std::to_string(p.first) + "," + std::to_string(p.second) +
                       ") out of range 1.." + std::to_string(n));
  return {std::min(p.first, p.second), std::max(p.first, p.second)};
}

}  // namespace

SynthInstance gen_sheep(const SheepParams& params) {
  const int n = params.n;
  if (n < 2) throw InvalidInput("sheep needs n >= 2");
  std::set<std::pair<int, int>> forbidden, liked;
  for (auto p : params.forbidden) forbidden.insert(ordered(p, n));
  for (auto p : params.liked) liked.insert(ordered(p, n));
  for (auto p : forbidden)
    if (liked.count(p)) throw InvalidInput("sheep pair listed as both forbidden and liked");
  std::set<std::pair<int, int>> gated = forbidden;
  gated.insert(liked.begin(), liked.end());
  std::vector<int> favorites = params.favorites.empty() ? std::vector<int>{1} : params.favorites;
  for (int s : favorites)
    if (s < 1 || s > n) throw InvalidInput("favorite sheep " + std::to_string(s) + " out of range");

  auto left = [](int i) { return atom(left_var(i)); };
  auto move = [](int i) { return atom(move_var(i)); };

  std::vector<Formula> env;
  for (int i = 1; i <= n; ++i) env.push_back(left(i));
  for (int i = 1; i <= n; ++i) {
    env.push_back(always(implies(land(next(lnot(move(i))), lnot(left(i))), next(lnot(left(i))))));
    env.push_back(always(implies(land(next(lnot(move(i))), left(i)), next(left(i)))));
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      const Formula both_left = land(left(i), left(j));
      const Formula both_moved = land(move(i), move(j));
      if (!gated.count({i, j})) {
        env.push_back(always(implies(land(next(both_moved), both_left), next(land(lnot(left(i)), lnot(left(j)))))));
        continue;
      }
      const Formula dis = atom(dis_var(i, j));
      env.push_back(
          always(implies(land(next(land(both_moved, lnot(dis))), both_left), next(land(lnot(left(i)), lnot(left(j)))))));
      env.push_back(always(implies(land(next(land(both_moved, dis)), both_left), next(both_left))));
    }
  }
  std::vector<Formula> pins;
  for (auto [i, j] : liked) pins.push_back(always(lnot(atom(dis_var(i, j)))));
  for (auto [i, j] : forbidden) pins.push_back(always(atom(dis_var(i, j))));

  // exactly two: some pair is on and all others are off
  std::vector<Formula> exactly;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      std::vector<Formula> lits{move(i), move(j)};
      for (int k = 1; k <= n; ++k)
        if (k != i && k != j) lits.push_back(lnot(move(k)));
      exactly.push_back(conj(lits));
    }
  }
  const Formula ag = always(disj(exactly));

  std::vector<Formula> all_right, fav_right;
  for (int i = 1; i <= n; ++i) all_right.push_back(lnot(left(i)));
  for (int s : favorites) fav_right.push_back(lnot(left(s)));

  const Formula env_main = conj(env), env_backup = env_main;
  SynthInstance inst;
  inst.main = land(ag, implies(pins.empty() ? env_main : land(env_main, conj(pins)), eventually(conj(all_right))));
  inst.backup = land(ag, implies(env_backup, eventually(conj(fav_right))));
  for (int i = 1; i <= n; ++i) inst.partition.outputs.push_back(move_var(i));
  for (int i = 1; i <= n; ++i) inst.partition.reliable.push_back(left_var(i));
  for (auto [i, j] : gated) inst.partition.unreliable.push_back(dis_var(i, j));
  inst.validate();
  return inst;
}

// ----------------------------------------------------------------- trap

int TrapGraph::trap_count() const {
  int t = 0;
  for (const auto& e : edges) t = std::max(t, e.trap);
  return t;
}

void TrapGraph::validate() const {
  if (vertices < 1) throw InvalidInput("graph needs at least one vertex");
  auto check = [&](int v, const char* what) {
    if (v < 0 || v >= vertices)
      throw InvalidInput(std::string(what) + " vertex " + std::to_string(v) + " out of range 0.." +
                         std::to_string(vertices - 1));
  };
  check(start, "start");
  std::vector<int> degree(static_cast<std::size_t>(vertices));
  for (const auto& e : edges) {
    check(e.src, "edge");
    check(e.dst, "edge");
    if (e.trap < 0) throw InvalidInput("negative trap number");
    if (e.trap > 0) check(e.alt, "trap");
    if (++degree[static_cast<std::size_t>(e.src)] > 2)
      throw InvalidInput("vertex " + std::to_string(e.src) + " has more than 2 outgoing edges");
  }
  if (main_region.empty()) throw InvalidInput("graph has no main region");
  for (int v : main_region) check(v, "main region");
  for (int v : backup_region) check(v, "backup region");
}

namespace {

std::vector<std::string_view> words(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t b = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > b) out.push_back(line.substr(b, i - b));
  }
  return out;
}

int to_int(std::string_view w, std::size_t line) {
  int v = 0;
  const auto [p, ec] = std::from_chars(w.data(), w.data() + w.size(), v);
  if (ec != std::errc{} || p != w.data() + w.size() || v < 0)
    throw ParseError("expected a nonnegative integer, got '" + std::string(w) + "'", 0, line);
  return v;
}

}  // namespace

TrapGraph parse_graph(std::string_view text) {
  TrapGraph g;
  bool have_vertices = false, have_backup = false;
  std::size_t lineno = 0;
  while (!text.empty()) {
    const std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++lineno;
    if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto w = words(line);
    if (w.empty()) continue;
    if (w[0] == "vertices") {
      if (w.size() != 2) throw ParseError("'vertices' takes one number", 0, lineno);
      g.vertices = to_int(w[1], lineno);
      have_vertices = true;
    } else if (w[0] == "start") {
      if (w.size() != 2) throw ParseError("'start' takes one vertex", 0, lineno);
      g.start = to_int(w[1], lineno);
    } else if (w[0] == "main" || w[0] == "backup") {
      auto& region = w[0] == "main" ? g.main_region : g.backup_region;
      if (w.size() < 2) throw ParseError("empty region", 0, lineno);
      for (std::size_t i = 1; i < w.size(); ++i) region.push_back(to_int(w[i], lineno));
      if (w[0] == "backup") have_backup = true;
    } else {
      if (w.size() != 2 && w.size() != 4)
        throw ParseError("edge line must be 'src dst [trap alt]'", 0, lineno);
      TrapEdge e;
      e.src = to_int(w[0], lineno);
      e.dst = to_int(w[1], lineno);
      if (w.size() == 4) {
        std::string_view t = w[2];
        if (!t.empty() && t.front() == '!') {
          e.inverted = true;
          t.remove_prefix(1);
        }
        e.trap = to_int(t, lineno);
        if (e.trap == 0) throw ParseError("trap numbers start at 1", 0, lineno);
        e.alt = to_int(w[3], lineno);
      }
      g.edges.push_back(e);
    }
  }
  if (!have_vertices) {
    for (const auto& e : g.edges) g.vertices = std::max({g.vertices, e.src + 1, e.dst + 1, e.trap ? e.alt + 1 : 0});
    g.vertices = std::max(g.vertices, g.start + 1);
  }
  if (!have_backup) g.backup_region = g.main_region;
  try {
    g.validate();
  } catch (const InvalidInput& e) {
    throw ParseError(e.what(), 0, lineno);
  }
  return g;
}

std::string to_graph_text(const TrapGraph& g) {
  std::ostringstream out;
  out << "vertices " << g.vertices << "\nstart " << g.start << "\nmain";
  for (int v : g.main_region) out << ' ' << v;
  out << "\nbackup";
  for (int v : g.backup_region) out << ' ' << v;
  out << '\n';
  for (const auto& e : g.edges) {
    out << e.src << ' ' << e.dst;
    if (e.trap) out << ' ' << (e.inverted ? "!" : "") << e.trap << ' ' << e.alt;
    out << '\n';
  }
  return out.str();
}

namespace {

const std::map<std::string, TrapGraph, std::less<>>& graph_library() {
  static const auto lib = [] {
    std::map<std::string, TrapGraph, std::less<>> m;
    // plain path, no traps
    m["line4"] = parse_graph("vertices 4\nstart 0\nmain 3\n0 1\n1 2\n2 3\n");
    // t1 diverts the short way to the goal into the backup region
    m["divert4"] = parse_graph("vertices 4\nstart 0\nmain 2\nbackup 2 3\n0 1\n0 2 1 3\n1 2\n");
    // goal in another component
    m["unreach4"] = parse_graph("vertices 4\nstart 0\nmain 3\n0 1\n1 0\n2 3\n");
    // either choice can be trapped depending on t1; only sensing t1 helps
    m["gamble5"] = parse_graph("vertices 5\nstart 0\nmain 3\n0 1 1 4\n0 2 !1 4\n1 3\n2 3\n");
    m["gamble5safe"] = parse_graph("vertices 5\nstart 0\nmain 3\nbackup 3 4\n0 1 1 4\n0 2 !1 4\n1 3\n2 3\n");
    m["maze8"] = parse_graph(
        "vertices 8\nstart 0\nmain 3\nbackup 3 5 6\n"
        "0 1 1 4\n0 2 !1 4\n1 3 2 5\n1 6\n2 3 !2 6\n2 5\n4 7\n5 3 2 7\n6 3 !2 7\n");
    m["ring8"] = parse_graph(
        "vertices 8\nstart 0\nmain 4\nbackup 4 7\n"
        "0 1\n0 7 1 6\n1 2 2 5\n1 0\n2 3\n3 4\n5 6\n6 4 1 7\n7 4 !1 6\n");
    return m;
  }();
  return lib;
}

std::vector<int> bits_of(int v, int width) {
  std::vector<int> out;
  for (int b = 0; b < width; ++b) out.push_back((v >> b) & 1);
  return out;
}

}  // namespace

const TrapGraph& named_graph(std::string_view name) {
  const auto& lib = graph_library();
  const auto it = lib.find(name);
  if (it == lib.end()) throw InvalidInput("unknown graph '" + std::string(name) + "'");
  return it->second;
}

std::vector<std::string> named_graph_names() {
  std::vector<std::string> out;
  for (const auto& [k, v] : graph_library()) out.push_back(k);
  return out;
}

SynthInstance gen_trap(const TrapGraph& g) {
  g.validate();
  int width = 1;
  while ((1 << width) < g.vertices) ++width;
  auto pos_var = [](int b) { return "pos_" + std::to_string(b); };
  auto trap_var = [](int t) { return "t" + std::to_string(t); };
  auto pos = [&](int v) {
    std::vector<Formula> lits;
    const auto bits = bits_of(v, width);
    for (int b = 0; b < width; ++b) lits.push_back(bits[static_cast<std::size_t>(b)] ? atom(pos_var(b)) : lnot(atom(pos_var(b))));
    return conj(lits);
  };
  const Formula left = atom("left");

  std::vector<Formula> env{pos(g.start)};
  auto step = [&](int src, const Formula& dir, const Formula& guard, int dst) {
    env.push_back(always(implies(land(land(pos(src), guard), wnext(dir)), wnext(pos(dst)))));
  };
  std::vector<std::vector<TrapEdge>> out(static_cast<std::size_t>(g.vertices));
  for (const auto& e : g.edges) out[static_cast<std::size_t>(e.src)].push_back(e);
  for (int v = 0; v < g.vertices; ++v) {
    const auto& es = out[static_cast<std::size_t>(v)];
    if (es.empty()) {
      env.push_back(always(implies(pos(v), wnext(pos(v)))));
      continue;
    }
    for (std::size_t k = 0; k < es.size(); ++k) {
      const Formula dir = k == 0 ? left : lnot(left);
      const TrapEdge& e = es[k];
      if (e.trap == 0) {
        step(v, dir, tt(), e.dst);
      } else {
        const Formula on = atom(trap_var(e.trap));
        step(v, dir, e.inverted ? on : lnot(on), e.dst);
        step(v, dir, e.inverted ? lnot(on) : on, e.alt);
      }
    }
    if (es.size() == 1) step(v, lnot(left), tt(), v);
  }
  for (int t = 1; t <= g.trap_count(); ++t) {
    const Formula on = atom(trap_var(t));
    env.push_back(implies(on, always(on)));
    env.push_back(implies(lnot(on), always(lnot(on))));
  }
  auto reach = [&](const std::vector<int>& region) {
    std::vector<Formula> ds;
    for (int v : region) ds.push_back(eventually(pos(v)));
    return disj(ds);
  };
  const Formula phi_env = conj(env);
  SynthInstance inst;
  inst.main = implies(phi_env, reach(g.main_region));
  inst.backup = implies(phi_env, reach(g.backup_region.empty() ? g.main_region : g.backup_region));
  inst.partition.outputs = {"left"};
  for (int b = 0; b < width; ++b) inst.partition.reliable.push_back(pos_var(b));
  for (int t = 1; t <= g.trap_count(); ++t) inst.partition.unreliable.push_back(trap_var(t));
  inst.validate();
  return inst;
}

// ---------------------------------------------------------------- hiker

SynthInstance gen_hiker(int k, bool herbs_forced) {
  if (k < 4) throw InvalidInput("hiker needs trail length k >= 4");
  const Formula berry = atom("berry"), poison = atom("poison"), herbs = atom("herbs"), sick = atom("sick"),
                eot = atom("eot"), inbag = atom("inbag"), eat = atom("eat"), take = atom("takeMedication"),
                collect = atom("collectMedication");
  std::vector<Formula> env{
      lnot(sick),
      lnot(eot),
      always(implies(berry, lnot(herbs))),
      always(implies(poison, berry)),
      always(iff(next(sick), land(next(tt()), lor(land(next(eat), land(berry, poison)),
                                                  land(sick, lnot(land(inbag, take))))))),
      always(iff(next(inbag), land(next(tt()), lor(land(herbs, next(collect)), land(inbag, lnot(take)))))),
      wnext_n(eot, static_cast<std::size_t>(k)),
      always(implies(eot, wnext(eot))),
      always(implies(eot, lnot(berry))),
  };
  for (int j = 1; j < k; ++j) env.push_back(wnext_n(lnot(eot), static_cast<std::size_t>(j)));
  if (herbs_forced) env.push_back(wnext_n(herbs, static_cast<std::size_t>(k - 3)));
  const Formula phi_env = conj(env);
  SynthInstance inst;
  inst.main = implies(phi_env, land(eventually(eot), always(implies(land(berry, lnot(poison)), wnext(eat)))));
  inst.backup = implies(phi_env, eventually(land(eot, lnot(sick))));
  inst.partition.outputs = {"eat", "takeMedication", "collectMedication"};
  inst.partition.reliable = {"berry", "herbs", "sick", "eot", "inbag"};
  inst.partition.unreliable = {"poison"};
  inst.validate();
  return inst;
}

// --------------------------------------------------------------- random

namespace {

Formula random_formula(std::mt19937_64& rng, const std::vector<std::string>& props, int depth) {
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 1 : 10);
  const int c = pick(rng);
  if (depth <= 0 || c <= 1) {
    if (c == 0 && std::uniform_int_distribution<int>(0, 5)(rng) == 0) return tt();
    return atom(props[std::uniform_int_distribution<std::size_t>(0, props.size() - 1)(rng)]);
  }
  auto sub = [&] { return random_formula(rng, props, depth - 1); };
  switch (c) {
    case 2: return lnot(sub());
    case 3: { Formula a = sub(); return land(a, sub()); }
    case 4: { Formula a = sub(); return lor(a, sub()); }
    case 5: return next(sub());
    case 6: return wnext(sub());
    case 7: { Formula a = sub(); return until(a, sub()); }
    case 8: { Formula a = sub(); return release(a, sub()); }
    case 9: return eventually(sub());
    default: return always(sub());
  }
}

}  // namespace

SynthInstance gen_random(std::uint64_t seed, int depth) {
  std::mt19937_64 rng(seed);
  const std::vector<std::string> props{"y1", "y2", "x", "u"};
  SynthInstance inst;
  inst.partition = {{"y1", "y2"}, {"x"}, {"u"}};
  inst.main = random_formula(rng, props, depth);
  inst.backup = random_formula(rng, props, depth);
  inst.validate();
  return inst;
}

// ---------------------------------------------------------- descriptors

InstanceDescriptor describe_sheep(const SheepParams& params) {
  InstanceDescriptor d;
  d.family = Family::Sheep;
  d.instance = gen_sheep(params);
  std::ostringstream name;
  name << "sheep_n" << params.n;
  for (auto [i, j] : params.forbidden) name << "_d" << i << j;
  for (auto [i, j] : params.liked) name << "_l" << i << j;
  if (!params.favorites.empty()) {
    name << "_s";
    for (int s : params.favorites) name << s;
  }
  d.name = name.str();
  if (params.n % 2 == 1)
    d.expected = Expected::Unrealizable;
  else if (params.forbidden.empty() && params.liked.empty())
    d.expected = Expected::Realizable;
  return d;
}

InstanceDescriptor describe_trap(const std::string& name, const TrapGraph& g) {
  InstanceDescriptor d;
  d.name = "trap_" + name;
  d.family = Family::Trap;
  d.instance = gen_trap(g);
  static const std::map<std::string, Expected, std::less<>> known{
      {"line4", Expected::Realizable},         {"divert4", Expected::Realizable},
      {"unreach4", Expected::Unrealizable},    {"gamble5", Expected::Unrealizable},
      {"gamble5safe", Expected::Realizable},  {"maze8", Expected::Unrealizable},
      {"ring8", Expected::Realizable},
  };
  if (const auto it = known.find(name); it != known.end() && g.edges.size() == named_graph(name).edges.size())
    d.expected = it->second;
  return d;
}

InstanceDescriptor describe_hiker(int k, bool herbs_forced) {
  InstanceDescriptor d;
  d.name = "hiker_k" + std::to_string(k) + (herbs_forced ? "_herbs" : "_noherbs");
  d.family = Family::Hiker;
  d.instance = gen_hiker(k, herbs_forced);
  d.expected = herbs_forced ? Expected::Realizable : Expected::Unrealizable;
  return d;
}

InstanceDescriptor describe_random(std::uint64_t seed) {
  InstanceDescriptor d;
  d.name = "random_" + std::to_string(seed);
  d.family = Family::Random;
  d.instance = gen_random(seed);
  return d;
}

std::vector<InstanceDescriptor> desk_suite() {
  std::vector<InstanceDescriptor> out;
  const std::vector<SheepParams> sheep{
      {2, {}, {}, {1}},
      {2, {}, {{1, 2}}, {1}},
      {3, {}, {}, {1}},
      {3, {{1, 2}}, {}, {1, 2}},
      {4, {}, {}, {1}},
      {4, {{1, 2}}, {{3, 4}}, {1, 2}},
  };
  const Expected pinned[] = {Expected::Realizable,   Expected::Unrealizable, Expected::Unrealizable,
                             Expected::Unrealizable, Expected::Realizable,   Expected::Realizable};
  for (std::size_t i = 0; i < sheep.size(); ++i) {
    out.push_back(describe_sheep(sheep[i]));
    out.back().expected = pinned[i];
  }
  for (const auto& name : named_graph_names()) out.push_back(describe_trap(name, named_graph(name)));
  for (int k = 4; k <= 8; ++k) {
    out.push_back(describe_hiker(k, true));
    out.push_back(describe_hiker(k, false));
  }
  for (std::uint64_t seed = 1; seed <= 20; ++seed) out.push_back(describe_random(seed));
  return out;
}

// ------------------------------------------------------------------ i/o

void write_instance(const std::string& dir, const InstanceDescriptor& d) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw InvalidInput("cannot create directory '" + dir + "': " + ec.message());
  const fs::path base = fs::path(dir) / d.name;
  write_file(base.string() + ".ltlf", to_ltlf_text({d.instance.main, d.instance.backup}));
  write_file(base.string() + ".part", to_part_text(d.instance.partition));
  write_file((fs::path(dir) / "expected").string(), expected_text(d.expected) + "\n");
}

InstanceDescriptor read_instance(const std::string& dir) {
  std::vector<fs::path> ltlf, part;
  std::error_code ec;
  for (const auto& e : fs::directory_iterator(dir, ec)) {
    if (!e.is_regular_file()) continue;
    if (e.path().extension() == ".ltlf") ltlf.push_back(e.path());
    if (e.path().extension() == ".part") part.push_back(e.path());
  }
  if (ec) throw InvalidInput("cannot read directory '" + dir + "': " + ec.message());
  if (ltlf.size() != 1 || part.size() != 1)
    throw InvalidInput("'" + dir + "' must contain exactly one .ltlf and one .part file");
  InstanceDescriptor d;
  d.name = ltlf.front().stem().string();
  d.instance = load_instance(ltlf.front().string(), part.front().string());
  const fs::path exp = fs::path(dir) / "expected";
  if (fs::exists(exp)) d.expected = parse_expected(read_file(exp.string()));
  for (Family f : {Family::Sheep, Family::Trap, Family::Hiker, Family::Random})
    if (d.name.rfind(std::string(to_string(f)) + "_", 0) == 0) d.family = f;
  return d;
}

std::vector<std::string> find_instances(const std::string& root) {
  auto has_ltlf = [](const fs::path& p) {
    std::error_code ec;
    for (const auto& e : fs::directory_iterator(p, ec))
      if (e.is_regular_file() && e.path().extension() == ".ltlf") return true;
    return false;
  };
  if (!fs::is_directory(root)) throw InvalidInput("'" + root + "' is not a directory");
  if (has_ltlf(root)) return {root};
  std::vector<std::string> out;
  for (const auto& e : fs::recursive_directory_iterator(root))
    if (e.is_directory() && has_ltlf(e.path())) out.push_back(e.path().string());
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------- cross check

std::string_view to_string(RunStatus s) noexcept {
  switch (s) {
    case RunStatus::Ok: return "ok";
    case RunStatus::Timeout: return "timeout";
    default: return "error";
  }
}

std::optional<bool> CrossReport::verdict() const {
  for (const auto& r : runs)
    if (r.status == RunStatus::Ok) return r.realizable;
  return std::nullopt;
}

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

CrossReport cross_check(const InstanceDescriptor& d, const CrossCheckOptions& options) {
  CrossReport rep;
  rep.name = d.name;
  rep.family = d.family;
  rep.expected = d.expected;

  Limits limits = options.limits;
  const auto deadline = std::chrono::steady_clock::now() + options.timeout;
  if (!limits.deadline || *limits.deadline > deadline) limits.deadline = deadline;

  // main goal DFA shared between the direct and belief pipelines
  std::optional<Dfa> main_dfa;
  double main_ms = 0;
  std::string main_error;
  bool main_timeout = false;
  const bool need_main = std::any_of(options.modes.begin(), options.modes.end(),
                                     [](Mode m) { return m != Mode::Qltlf; });
  if (need_main) {
    const auto t0 = std::chrono::steady_clock::now();
    try {
      limits.check_width(d.instance.partition.alphabet().width(), "dfa-main");
      main_dfa = ltlf_to_dfa(d.instance.main, d.instance.partition.alphabet(), limits);
    } catch (const Timeout& e) {
      main_timeout = true;
      main_error = e.what();
    } catch (const Error& e) {
      main_error = std::string("dfa-main: ") + e.what();
    }
    main_ms = ms_since(t0);
  }

  for (Mode m : options.modes) {
    ModeRun run;
    run.mode = m;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      if (m != Mode::Qltlf && !main_dfa) {
        if (main_timeout) throw Timeout("dfa-main");
        throw InvalidInput(main_error);
      }
      SynthOptions so;
      so.limits = limits;
      if (m != Mode::Qltlf) so.main_dfa = &*main_dfa;
      SynthResult r = synth(d.instance, m, so);
      if (m != Mode::Qltlf) {
        for (auto& s : r.stages)
          if (s.stage == "dfa-main") s.ms = main_ms;
        r.construct_ms += main_ms;
      }
      run.realizable = r.realizable;
      run.arena_states = r.arena_states;
      run.winning = r.game.winning_count();
      run.stages = std::move(r.stages);
      run.construct_ms = r.construct_ms;
      run.game_ms = r.game_ms;
      if (r.realizable && options.verify) {
        VerifyOptions vo;
        vo.horizon = options.horizon ? options.horizon : run.winning;
        vo.max_plays = options.max_plays;
        vo.enumeration_bits = limits.enumeration_bits;
        const Verdict v = verify_strategy(*r.strategy, d.instance.main, d.instance.backup, vo);
        run.verified = v.passed;
        if (!v.passed) run.message = v.reason;
      }
    } catch (const Timeout& e) {
      run.status = RunStatus::Timeout;
      run.message = e.what();
    } catch (const std::exception& e) {
      run.status = RunStatus::Error;
      run.message = e.what();
    }
    run.wall_ms = ms_since(t0);
    rep.runs.push_back(std::move(run));
  }

  const ModeRun* first = nullptr;
  for (const auto& r : rep.runs) {
    const std::string mode(to_string(r.mode));
    if (r.status == RunStatus::Error) rep.failures.push_back(mode + ": " + r.message);
    if (r.status != RunStatus::Ok) continue;
    if (r.verified == false) rep.failures.push_back(mode + ": strategy failed verification: " + r.message);
    if (!first) {
      first = &r;
    } else if (r.realizable != first->realizable) {
      rep.agree = false;
      rep.failures.push_back("verdict disagreement: " + std::string(to_string(first->mode)) + " says " +
                             (first->realizable ? "realizable" : "unrealizable") + ", " + mode + " says " +
                             (r.realizable ? "realizable" : "unrealizable"));
    }
  }
  if (first && d.expected != Expected::Unknown && first->realizable != (d.expected == Expected::Realizable))
    rep.failures.push_back("expected " + std::string(to_string(d.expected)) + ", got " +
                           (first->realizable ? "realizable" : "unrealizable"));
  return rep;
}

std::string csv_header() {
  return "# schema=" + std::to_string(kCsvSchema) +
         "\ninstance,family,mode,status,verdict,expected,agree,verified,arena_states,winning,states_per_stage,"
         "ms_per_stage,construct_ms,game_ms,wall_ms\n";
}

namespace {

std::string fixed(double v) {
  std::ostringstream o;
  o.setf(std::ios::fixed);
  o.precision(3);
  o << v;
  return o.str();
}

}  // namespace

std::string csv_rows(const CrossReport& r) {
  std::ostringstream out;
  for (const auto& run : r.runs) {
    std::string states, times;
    for (const auto& s : run.stages) {
      if (!states.empty()) {
        states += ';';
        times += ';';
      }
      states += s.stage + "=" + std::to_string(s.states);
      times += s.stage + "=" + fixed(s.ms);
    }
    const char* verdict = run.status != RunStatus::Ok ? "" : run.realizable ? "realizable" : "unrealizable";
    const char* verified = !run.verified ? "" : *run.verified ? "yes" : "no";
    out << r.name << ',' << to_string(r.family) << ',' << to_string(run.mode) << ',' << to_string(run.status) << ','
        << verdict << ',' << to_string(r.expected) << ',' << (r.agree ? "yes" : "no") << ',' << verified << ','
        << run.arena_states << ',' << run.winning << ',' << states << ',' << times << ',' << fixed(run.construct_ms)
        << ',' << fixed(run.game_ms) << ',' << fixed(run.wall_ms) << '\n';
  }
  return out.str();
}

}  // namespace unrel
