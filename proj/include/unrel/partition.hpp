#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "unrel/formula.hpp"
#include "unrel/trace.hpp"

namespace unrel {

/// Variable split Y / X_rel / X_unr. The global proposition order, and hence
/// every letter's bit layout, is outputs, then reliable inputs, then
/// unreliable inputs, each in declaration order.
struct Partition {
  std::vector<std::string> outputs;
  std::vector<std::string> reliable;
  std::vector<std::string> unreliable;

  /// Throws InvalidInput on overlaps, duplicates, bad names or an empty split.
  void validate() const;

  Alphabet alphabet() const;
  std::vector<std::string> inputs() const;

  std::size_t output_count() const noexcept { return outputs.size(); }
  std::size_t input_count() const noexcept { return reliable.size() + unreliable.size(); }

  /// Masks over alphabet() bits.
  Letter output_mask() const noexcept;
  Letter input_mask() const noexcept;
  Letter unreliable_mask() const noexcept;

  /// Combines an output assignment and an input assignment (input bit j is
  /// the j-th input of inputs()) into one letter.
  Letter join(Letter outputs_part, Letter inputs_part) const noexcept {
    return outputs_part | (inputs_part << outputs.size());
  }

  friend bool operator==(const Partition&, const Partition&) = default;
};

/// Parses the `.part` format:
///
///   .inputs: a b c
///   .outputs: x y z
///   .unobservables: b c
///
/// Unobservables must also be listed under inputs. `.unobservables` is optional.
Partition parse_partition(std::string_view text);
std::string to_part_text(const Partition& p);

/// Main and backup goal.
struct GoalPair {
  Formula main;
  Formula backup;
};

/// Parses an `.ltlf` file: exactly two nonempty lines, main goal first.
/// Accepts LF and CRLF; whitespace-only lines are skipped.
GoalPair parse_ltlf_file(std::string_view text);
std::string to_ltlf_text(const GoalPair& goals);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace unrel
