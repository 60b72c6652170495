#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <ostream>

namespace unrel {

/// Resource caps shared by every construction. Exceeding one throws
/// ResourceError (or Timeout once `deadline` has passed).
struct Limits {
  std::size_t max_width = 16;
  std::size_t warn_width = 12;
  std::size_t max_progression_states = std::size_t{1} << 18;
  std::size_t max_subsets = std::size_t{1} << 20;
  std::size_t max_product_states = std::size_t{1} << 22;
  std::size_t enumeration_bits = 20;
  /// Cap on states * letters for any dense transition table (about 1 GiB).
  std::size_t max_table_entries = std::size_t{1} << 28;
  std::optional<std::chrono::steady_clock::time_point> deadline;
  /// Receives width warnings; nullptr silences them.
  std::ostream* diagnostics = nullptr;

  void check_width(std::size_t width, const char* stage) const;
  void check_deadline(const char* stage) const;
  /// Throws when a table of `states` rows over `letters` letters, or more
  /// than `cap` states, would be needed.
  void check_states(std::size_t states, std::size_t cap, std::size_t letters, const char* stage) const;
};

}  // namespace unrel
