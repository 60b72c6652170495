// unrel: LTLf synthesis under unreliable input.
//
// Exit codes: 0 realizable / success, 1 unrealizable / check failed,
// 2 usage, parse, I/O or resource error.

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include "unrel/benchmarks.hpp"
#include "unrel/errors.hpp"
#include "unrel/qltlf.hpp"

using namespace unrel;
namespace fs = std::filesystem;

namespace {

constexpr int kExitError = 2;

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream in(s);
  for (std::string item; std::getline(in, item, sep);)
    if (!item.empty()) out.push_back(item);
  return out;
}

std::vector<std::pair<int, int>> parse_pairs(const std::vector<std::string>& items) {
  std::vector<std::pair<int, int>> out;
  for (const auto& item : items) {
    const auto parts = split(item, ',');
    if (parts.size() != 2) throw InvalidInput("pair '" + item + "' must look like i,j");
    out.emplace_back(std::stoi(parts[0]), std::stoi(parts[1]));
  }
  return out;
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-")
    std::cout << text;
  else
    write_file(path, text);
}

struct SynthArgs {
  std::string ltlf, part;
  std::vector<std::string> extra;
  std::string mode;
  std::optional<std::size_t> verify;
  std::string strategy_dot;
  std::vector<std::string> emit_stages;
  std::string emit_dir = ".";
  bool minimize = false;
  bool stats = false;
  std::size_t max_width = 16;
  std::size_t max_states = 0;
  double timeout = 0;
};

int cmd_synth(const SynthArgs& a) {
  Mode mode = Mode::Direct;
  bool mode_set = false;
  for (const auto& e : a.extra) {
    if (e == "0") continue;  // legacy positional argument
    if (mode_set) throw InvalidInput("unexpected argument '" + e + "'");
    mode = parse_mode(e);
    mode_set = true;
  }
  if (!a.mode.empty()) mode = parse_mode(a.mode);

  const SynthInstance inst = load_instance(a.ltlf, a.part);
  SynthOptions o;
  o.minimize = a.minimize;
  o.limits.max_width = a.max_width;
  o.limits.diagnostics = &std::cerr;
  if (a.max_states) {
    o.limits.max_progression_states = a.max_states;
    o.limits.max_subsets = a.max_states;
    o.limits.max_product_states = a.max_states;
  }
  if (a.timeout > 0)
    o.limits.deadline = std::chrono::steady_clock::now() +
                        std::chrono::milliseconds(static_cast<long long>(a.timeout * 1000));
  const bool all = std::find(a.emit_stages.begin(), a.emit_stages.end(), "all") != a.emit_stages.end();
  if (!a.emit_stages.empty()) {
    fs::create_directories(a.emit_dir);
    o.on_stage = [&](const std::string& stage, const Dfa& d) {
      if (all || std::find(a.emit_stages.begin(), a.emit_stages.end(), stage) != a.emit_stages.end())
        write_file((fs::path(a.emit_dir) / (stage + ".dot")).string(), to_dot(d, stage));
    };
  }

  const SynthResult r = synth(inst, mode, o);
  std::cout << (r.realizable ? "REALIZABLE" : "UNREALIZABLE") << '\n';
  if (a.stats) {
    for (const auto& s : r.stages)
      std::cerr << s.stage << ": " << s.states << " states, " << s.ms << " ms\n";
    std::cerr << "winning states: " << r.game.winning_count() << " of " << r.arena_states << '\n';
  }
  if (r.realizable && !a.strategy_dot.empty()) emit(strategy_to_dot(*r.strategy), a.strategy_dot);
  if (r.realizable && a.verify) {
    VerifyOptions vo;
    vo.horizon = *a.verify ? *a.verify : r.game.winning_count();
    const Verdict v = verify_strategy(*r.strategy, inst.main, inst.backup, vo);
    if (!v.passed) {
      std::cerr << "error: strategy verification failed: " << v.reason << '\n';
      return kExitError;
    }
    std::cerr << "verified up to horizon " << vo.horizon << " (" << v.explored << " nodes)\n";
  }
  return r.realizable ? 0 : 1;
}

struct GenArgs {
  std::string out = ".";
  std::string name;
  int n = 2;
  std::vector<std::string> forbid, like;
  std::vector<int> favorites;
  int k = 5;
  bool herbs = true;
  bool no_herbs = false;
  std::string graph, named;
  std::uint64_t seed = 1;
};

int write_descriptor(InstanceDescriptor d, const GenArgs& a) {
  if (!a.name.empty()) d.name = a.name;
  write_instance(a.out, d);
  std::cout << (fs::path(a.out) / d.name).string() << " expected=" << expected_text(d.expected) << '\n';
  return 0;
}

struct BenchArgs {
  std::string dir;
  std::string modes = "direct,belief,qltlf";
  std::string out;
  double timeout = 60;
  unsigned jobs = 0;
  std::size_t horizon = 0;
  bool no_verify = false;
};

int cmd_bench(const BenchArgs& a) {
  const auto dirs = find_instances(a.dir);
  CrossCheckOptions o;
  o.modes.clear();
  for (const auto& m : split(a.modes, ',')) o.modes.push_back(parse_mode(m));
  if (o.modes.empty()) throw InvalidInput("no modes selected");
  o.timeout = std::chrono::milliseconds(static_cast<long long>(a.timeout * 1000));
  o.horizon = a.horizon;
  o.verify = !a.no_verify;

  std::vector<CrossReport> reports(dirs.size());
  std::atomic<std::size_t> next{0};
  std::mutex log;
  auto worker = [&] {
    for (std::size_t i; (i = next++) < dirs.size();) {
      try {
        reports[i] = cross_check(read_instance(dirs[i]), o);
      } catch (const std::exception& e) {
        reports[i].name = fs::path(dirs[i]).filename().string();
        reports[i].failures.push_back(e.what());
      }
      std::lock_guard<std::mutex> g(log);
      std::cerr << (reports[i].ok() ? "ok   " : "FAIL ") << reports[i].name << '\n';
      for (const auto& f : reports[i].failures) std::cerr << "     " << f << '\n';
    }
  };
  unsigned jobs = a.jobs ? a.jobs : std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(1, dirs.size())));
  std::vector<std::thread> pool;
  for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  std::string csv = csv_header();
  std::size_t failed = 0;
  for (const auto& r : reports) {
    csv += csv_rows(r);
    if (!r.ok()) ++failed;
  }
  emit(csv, a.out);
  std::cerr << reports.size() << " instances, " << failed << " failed\n";
  return failed ? 1 : 0;
}

int cmd_export_mso(const std::string& ltlf, const std::string& part, const std::string& out) {
  const SynthInstance inst = load_instance(ltlf, part);
  emit(mso_export(qltlf_reduction(inst), inst.partition.alphabet().names()), out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"LTLf synthesis under unreliable input"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "unrel 1.0");

  SynthArgs sa;
  auto* synth_cmd = app.add_subcommand("synth", "decide realizability and extract a strategy");
  synth_cmd->add_option("ltlf", sa.ltlf, "two-line goal file (main, backup)")->required();
  synth_cmd->add_option("part", sa.part, "partition file")->required();
  synth_cmd->add_option("extra", sa.extra, "optional legacy '0' and mode (direct, belief, qltlf, mso)");
  synth_cmd->add_option("-m,--mode", sa.mode, "pipeline: direct, belief or qltlf");
  synth_cmd->add_option("--verify", sa.verify, "check the strategy on all plays up to this many rounds (0 = winning-set size)");
  synth_cmd->add_option("--strategy-dot", sa.strategy_dot, "write the strategy as DOT ('-' for stdout)");
  synth_cmd->add_option("--emit", sa.emit_stages, "dump stage automata as DOT (stage name or 'all')")->delimiter(',');
  synth_cmd->add_option("--emit-dir", sa.emit_dir, "directory for --emit");
  synth_cmd->add_flag("--minimize", sa.minimize, "minimize factor automata");
  synth_cmd->add_flag("--stats", sa.stats, "print stage sizes and times to stderr");
  synth_cmd->add_option("--max-width", sa.max_width, "alphabet width cap")->check(CLI::PositiveNumber);
  synth_cmd->add_option("--max-states", sa.max_states, "state cap for every construction")->check(CLI::PositiveNumber);
  synth_cmd->add_option("--timeout", sa.timeout, "seconds");

  GenArgs ga;
  auto* gen = app.add_subcommand("gen", "generate benchmark instances");
  gen->require_subcommand(1);
  auto add_common = [&](CLI::App* c) {
    c->add_option("-o,--out", ga.out, "output directory");
    c->add_option("--name", ga.name, "instance name");
  };
  auto* gen_sheep_cmd = gen->add_subcommand("sheep", "river crossing with unreliable animosities");
  add_common(gen_sheep_cmd);
  gen_sheep_cmd->add_option("-n,--n", ga.n, "number of sheep")->check(CLI::Range(2, 8));
  gen_sheep_cmd->add_option("--forbid", ga.forbid, "pair i,j that dislike each other")->take_all();
  gen_sheep_cmd->add_option("--like", ga.like, "pair i,j believed to get along")->take_all();
  gen_sheep_cmd->add_option("--favorites", ga.favorites, "sheep required by the backup goal")->delimiter(',');
  auto* gen_hiker_cmd = gen->add_subcommand("hiker", "trail with possibly poisonous berries");
  add_common(gen_hiker_cmd);
  gen_hiker_cmd->add_option("-k,--k", ga.k, "trail length")->check(CLI::Range(4, 64));
  gen_hiker_cmd->add_flag("--herbs", ga.herbs, "force herbs on the trail (default)");
  gen_hiker_cmd->add_flag("--no-herbs", ga.no_herbs, "do not force herbs");
  auto* gen_trap_cmd = gen->add_subcommand("trap", "robot on a graph with unreliable traps");
  add_common(gen_trap_cmd);
  gen_trap_cmd->add_option("--graph", ga.graph, "graph file");
  gen_trap_cmd->add_option("--named", ga.named, "embedded graph name");
  auto* gen_random_cmd = gen->add_subcommand("random", "random small instance");
  add_common(gen_random_cmd);
  gen_random_cmd->add_option("--seed", ga.seed, "seed");
  auto* gen_suite_cmd = gen->add_subcommand("suite", "the desk-scale suite, one directory per instance");
  gen_suite_cmd->add_option("-o,--out", ga.out, "output directory");
  auto* gen_graphs_cmd = gen->add_subcommand("graphs", "list the embedded graphs");

  BenchArgs ba;
  auto* bench = app.add_subcommand("bench", "cross-check every mode on a directory of instances");
  bench->add_option("dir", ba.dir, "instance directory")->required();
  bench->add_option("--modes", ba.modes, "comma-separated modes");
  bench->add_option("-o,--out", ba.out, "CSV output file (default stdout)");
  bench->add_option("--timeout", ba.timeout, "seconds per instance");
  bench->add_option("-j,--jobs", ba.jobs, "worker threads (default: cores)");
  bench->add_option("--horizon", ba.horizon, "verification horizon (default: winning-set size)");
  bench->add_flag("--no-verify", ba.no_verify, "skip strategy verification");

  std::string mso_ltlf, mso_part, mso_out;
  auto* mso = app.add_subcommand("export-mso", "print the MONA program for main & forall X_unr. backup");
  mso->add_option("ltlf", mso_ltlf)->required();
  mso->add_option("part", mso_part)->required();
  mso->add_option("-o,--out", mso_out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitError;
  }

  try {
    if (synth_cmd->parsed()) return cmd_synth(sa);
    if (gen->parsed()) {
      if (gen_sheep_cmd->parsed()) {
        SheepParams p;
        p.n = ga.n;
        p.forbidden = parse_pairs(ga.forbid);
        p.liked = parse_pairs(ga.like);
        p.favorites = ga.favorites;
        return write_descriptor(describe_sheep(p), ga);
      }
      if (gen_hiker_cmd->parsed()) return write_descriptor(describe_hiker(ga.k, !ga.no_herbs), ga);
      if (gen_trap_cmd->parsed()) {
        if (ga.graph.empty() == ga.named.empty()) throw InvalidInput("give exactly one of --graph and --named");
        if (!ga.named.empty()) return write_descriptor(describe_trap(ga.named, named_graph(ga.named)), ga);
        const std::string stem = fs::path(ga.graph).stem().string();
        try {
          return write_descriptor(describe_trap(stem, parse_graph(read_file(ga.graph))), ga);
        } catch (const ParseError& e) {
          throw ParseError(ga.graph + ": " + e.detail(), e.column(), e.line());
        }
      }
      if (gen_random_cmd->parsed()) return write_descriptor(describe_random(ga.seed), ga);
      if (gen_suite_cmd->parsed()) {
        const auto suite = desk_suite();
        for (const auto& d : suite) write_instance((fs::path(ga.out) / d.name).string(), d);
        std::cout << suite.size() << " instances written to " << ga.out << '\n';
        return 0;
      }
      if (gen_graphs_cmd->parsed()) {
        for (const auto& n : named_graph_names()) std::cout << n << '\n';
        return 0;
      }
    }
    if (bench->parsed()) return cmd_bench(ba);
    if (mso->parsed()) return cmd_export_mso(mso_ltlf, mso_part, mso_out);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitError;
  } catch (const Timeout& e) {
    std::cerr << "timeout: " << e.what() << '\n';
    return kExitError;
  } catch (const ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
