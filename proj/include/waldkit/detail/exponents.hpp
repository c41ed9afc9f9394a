#pragma once

// Raw exponent-vector helpers shared by the power and decomposition code.
// These skip context bookkeeping; callers wrap results back into Monomials.

#include "waldkit/core.hpp"

#include <cstdint>
#include <vector>

namespace waldkit::detail {

using GeneratorSet = std::vector<ExponentVector>;

inline std::uint64_t degree(const ExponentVector& a) {
  std::uint64_t d = 0;
  for (Exponent e : a) d += e;
  return d;
}

inline bool divides(const ExponentVector& a, const ExponentVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

inline ExponentVector lcm(const ExponentVector& a, const ExponentVector& b) {
  ExponentVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] > b[i] ? a[i] : b[i];
  return r;
}

inline ExponentVector product(const ExponentVector& a, const ExponentVector& b) {
  ExponentVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

/// Divisibility-minimal, deduplicated subset, sorted lexicographically.
GeneratorSet minimalize(GeneratorSet gens);

/// Sort key used when a "smallest" generator is reported: degree, then lex.
bool graded_less(const ExponentVector& a, const ExponentVector& b);

/// The unit ideal <1> in n variables.
GeneratorSet unit_generators(std::size_t n);

} // namespace waldkit::detail
