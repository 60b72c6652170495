#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "unrel/synthesis.hpp"

namespace unrel {

enum class Family { Sheep, Trap, Hiker, Random, File };
enum class Expected { Realizable, Unrealizable, Unknown };

std::string_view to_string(Family f) noexcept;
std::string_view to_string(Expected e) noexcept;
/// Contents of an `expected` file: "1", "0" or "unknown".
std::string expected_text(Expected e);
Expected parse_expected(std::string_view text);

struct SheepParams {
  int n = 2;
  /// Pairs that dislike each other (pinned to disallowed in the main goal).
  std::vector<std::pair<int, int>> forbidden;
  /// Pairs believed to get along (pinned to allowed in the main goal).
  std::vector<std::pair<int, int>> liked;
  /// Sheep that must cross under the backup goal. Empty means {1}.
  std::vector<int> favorites;
};

/// Main: ag & (env & pins -> F all crossed). Backup: ag & (env -> F
/// favorites crossed). The backup environment leaves every disallow
/// variable free, so liked pairs may also be blocked there. Throws
/// InvalidInput on bad indices.
SynthInstance gen_sheep(const SheepParams& params);

struct TrapEdge {
  int src = 0;
  int dst = 0;
  /// 0 = plain edge. Otherwise trap t<trap> diverts the edge to `alt`, when
  /// on (or when off if `inverted`).
  int trap = 0;
  bool inverted = false;
  int alt = 0;
};

/// Robot graph. The first edge listed for a vertex is taken on `left`, the
/// second on `!left`. A vertex with one edge stays put on `!left`; one
/// with none always stays.
struct TrapGraph {
  int vertices = 0;
  std::vector<TrapEdge> edges;
  int start = 0;
  std::vector<int> main_region;
  std::vector<int> backup_region;

  int trap_count() const;
  /// Throws InvalidInput on out-of-range vertices or out-degree above 2.
  void validate() const;
};

/// Graph text format, one item per line, '#' starts a comment:
///   vertices N | start V | main V... | backup V... | SRC DST [TRAP ALT]
/// TRAP is a trap number, optionally prefixed by '!'. Errors carry the
/// line number.
TrapGraph parse_graph(std::string_view text);
std::string to_graph_text(const TrapGraph& g);

/// Embedded graphs by name; throws InvalidInput for unknown names.
const TrapGraph& named_graph(std::string_view name);
std::vector<std::string> named_graph_names();

SynthInstance gen_trap(const TrapGraph& g);

/// Trail of `k` steps; eot holds from position k+1 on. With herbs forced,
/// herbs appear at position k-2. Throws InvalidInput for k < 4.
SynthInstance gen_hiker(int k, bool herbs_forced);

/// Random goals over outputs y1 y2, a reliable x and an unreliable u.
SynthInstance gen_random(std::uint64_t seed, int depth = 3);

struct InstanceDescriptor {
  std::string name;
  Family family = Family::File;
  SynthInstance instance;
  Expected expected = Expected::Unknown;
};

InstanceDescriptor describe_sheep(const SheepParams& params);
InstanceDescriptor describe_trap(const std::string& name, const TrapGraph& g);
InstanceDescriptor describe_hiker(int k, bool herbs_forced);
InstanceDescriptor describe_random(std::uint64_t seed);

/// Sheep n in {2,3,4}, the embedded trap graphs, hiker k in 4..8 with and
/// without herbs, and 20 random instances.
std::vector<InstanceDescriptor> desk_suite();

/// Writes <dir>/<name>.ltlf, <dir>/<name>.part and <dir>/expected.
void write_instance(const std::string& dir, const InstanceDescriptor& d);
/// Reads an instance directory written by write_instance (exactly one
/// .ltlf/.part pair; `expected` optional).
InstanceDescriptor read_instance(const std::string& dir);
/// The instance directories below `root` (or `root` itself), sorted.
std::vector<std::string> find_instances(const std::string& root);

enum class RunStatus { Ok, Timeout, Error };
std::string_view to_string(RunStatus s) noexcept;

struct ModeRun {
  Mode mode = Mode::Direct;
  RunStatus status = RunStatus::Ok;
  bool realizable = false;
  /// Unset when not realizable or not checked.
  std::optional<bool> verified;
  std::string message;
  std::size_t arena_states = 0;
  std::size_t winning = 0;
  std::vector<StageStat> stages;
  double construct_ms = 0;
  double game_ms = 0;
  double wall_ms = 0;
};

struct CrossCheckOptions {
  std::vector<Mode> modes{std::begin(kAllModes), std::end(kAllModes)};
  Limits limits;
  /// Per-instance budget over all modes.
  std::chrono::milliseconds timeout{60000};
  /// 0 = winning-set size of each arena.
  std::size_t horizon = 0;
  bool verify = true;
  std::size_t max_plays = std::size_t{1} << 20;
};

struct CrossReport {
  std::string name;
  Family family = Family::File;
  Expected expected = Expected::Unknown;
  std::vector<ModeRun> runs;
  bool agree = true;
  /// Human-readable problems: disagreement, failed verification, wrong
  /// verdict, errors. Timeouts are not failures.
  std::vector<std::string> failures;

  bool ok() const noexcept { return failures.empty(); }
  std::optional<bool> verdict() const;
};

CrossReport cross_check(const InstanceDescriptor& d, const CrossCheckOptions& options = {});

inline constexpr int kCsvSchema = 1;
/// "# schema=1" line followed by the column header.
std::string csv_header();
std::string csv_rows(const CrossReport& r);

}  // namespace unrel
