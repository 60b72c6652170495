#pragma once

#include <string_view>

#include "unrel/formula.hpp"

namespace unrel {

/// Parses one formula in Syft-compatible LTLf syntax.
///
///   atoms      [A-Za-z_][A-Za-z0-9_]*, literals `true` / `false`
///   unary      !  N (strong next)  X (weak next)  G  F
///   binary     U R  >  &  >  |  >  -> (right-assoc)  >  <->
///
/// Note that `X` is the *weak* next and `N` the strong one, the opposite of
/// the usual LTL convention. Implications and equivalences are desugared into
/// Not/Or/And. Throws ParseError carrying a 1-based column.
Formula parse_ltlf(std::string_view text);

}  // namespace unrel
