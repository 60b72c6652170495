#include "unrel/limits.hpp"

#include <string>

#include "unrel/errors.hpp"

namespace unrel {

void Limits::check_width(std::size_t width, const char* stage) const {
  if (width > max_width || width > 30)
    throw ResourceError(stage, "alphabet width " + std::to_string(width) + " exceeds cap " +
                                   std::to_string(max_width));
  if (diagnostics != nullptr && width > warn_width)
    *diagnostics << "warning: " << stage << ": alphabet width " << width << " enumerates "
                 << (std::size_t{1} << width) << " letters per state\n";
}

void Limits::check_deadline(const char* stage) const {
  if (deadline && std::chrono::steady_clock::now() > *deadline) throw Timeout(stage);
}

void Limits::check_states(std::size_t states, std::size_t cap, std::size_t letters, const char* stage) const {
  if (states > cap)
    throw ResourceError(stage, std::to_string(states) + " states exceed cap " + std::to_string(cap));
  if (states * letters > max_table_entries)
    throw ResourceError(stage, "transition table of " + std::to_string(states) + " x " + std::to_string(letters) +
                                   " entries exceeds cap " + std::to_string(max_table_entries));
}

}  // namespace unrel
