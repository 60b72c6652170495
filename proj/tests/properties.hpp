#pragma once

#include <cstddef>
#include <cstdint>

namespace testsupport {

struct PropertyTally {
  std::size_t checks = 0;
  std::size_t mismatches = 0;

  PropertyTally& operator+=(const PropertyTally& o) {
    checks += o.checks;
    mismatches += o.mismatches;
    return *this;
  }
};

// Exhaustive checks over random automata with at most 4 states and 3
// propositions, on every trace of length at most 3.

/// t in L(exist_abstract(n, V))  iff  some t' ~ t is in L(n).
PropertyTally check_existential_abstraction(std::uint32_t seed, int instances);
/// t in L(complement(determinize(exist_abstract(A, V))))  iff  no t' ~ t is in L(A).
PropertyTally check_complement_abstraction(std::uint32_t seed, int instances);
/// t in L(belief(d, V))  iff  every t' ~ t is in L(d).
PropertyTally check_belief_characterization(std::uint32_t seed, int instances);
/// t in L(product(a, b))  iff  t in L(a) and t in L(b).
PropertyTally check_product_intersection(std::uint32_t seed, int instances);
/// L(determinize(n)) = L(n).
PropertyTally check_determinize_language(std::uint32_t seed, int instances);

}  // namespace testsupport

namespace testsupport {

/// Random prenex formulas with at most 2 quantified variables, matrix depth
/// at most 3 and at most 2 free propositions: qltlf_to_dfa against
/// eval_qltlf on every trace of length at most 3.
PropertyTally check_qltlf_agreement(std::uint32_t seed, int instances);

}  // namespace testsupport

#include <vector>

#include "unrel/formula.hpp"

namespace testsupport {

struct OracleTally : PropertyTally {
  std::size_t formulas = 0;
  std::size_t enumerated = 0;  // checked trace by trace
  std::size_t symbolic = 0;    // checked as trace sets
};

/// ltlf_to_dfa(f) over atoms(f) against the trace semantics on every trace
/// of length 1..max_length. Formulas with at most `enumerate_width` atoms
/// are enumerated and evaluated with eval_trace; wider ones are compared as
/// trace sets, counting one check per length.
OracleTally check_oracle_equivalence(const std::vector<unrel::Formula>& formulas, std::size_t max_length = 4,
                                     std::size_t enumerate_width = 4);

/// Trace-set semantics against eval_trace on `samples` random traces per
/// formula and length.
PropertyTally check_trace_set_semantics(const std::vector<unrel::Formula>& formulas, std::uint32_t seed,
                                        int samples, std::size_t max_length = 4);

}  // namespace testsupport
