#pragma once

// Waldschmidt constants of squarefree monomial ideals.
//
// alpha_hat(I) is the value of the covering program
//     minimize 1.y  subject to  A y >= 1, y >= 0
// where A is the prime/variable incidence matrix of the minimal primes.
// The fractional chromatic number of the ideal's hypergraph comes from the
// packing program over the maximal independent sets, and the two satisfy
// alpha_hat = chi* / (chi* - 1) whenever some edge has two or more vertices.

#include "waldkit/core.hpp"
#include "waldkit/decomposition.hpp"
#include "waldkit/ratlp.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace waldkit {

struct WaldschmidtReport {
  BigRational alpha_hat;
  std::uint64_t alpha = 0;
  /// Absent when the packing program is unbounded (a degree-1 generator) or
  /// when no generator has degree >= 2.
  std::optional<BigRational> chi_star;
  std::size_t big_height = 0;
  BigRational chudnovsky_bound;
  RationalVector primal_witness;
  RationalVector dual_witness;
  /// lcm of the primal witness denominators.
  BigInteger lcm_denominator{1};
};

LinearProgram waldschmidt_program(const Decomposition& d);

BigRational waldschmidt_constant(const Decomposition& d);
BigRational waldschmidt_constant(const SquarefreeIdeal& ideal, std::size_t max_primes = kDefaultMaxPrimes);

WaldschmidtReport waldschmidt_report(const Decomposition& d);

/// chi*(H) from the packing program over maximal independent sets. Returns
/// nullopt when that program is unbounded, which happens exactly when some
/// generator is a single variable. Throws NotApplicableError when every
/// generator is a single variable.
std::optional<BigRational> fractional_chromatic_number(const Decomposition& d);
std::optional<BigRational> fractional_chromatic_number(const SquarefreeIdeal& ideal);

struct ChromaticIdentityCheck {
  BigRational lhs; ///< alpha_hat from the covering program
  BigRational rhs; ///< chi*/(chi*-1), or its limit 1 when chi* is unbounded
  std::optional<BigRational> chi_star;
  bool equal = false;
};

/// Solves both programs independently and compares alpha_hat with
/// chi*/(chi*-1). Throws NotApplicableError when every generator has degree 1.
ChromaticIdentityCheck check_chromatic_identity(const SquarefreeIdeal& ideal);

struct ChudnovskyCheck {
  BigRational alpha_hat;
  BigRational bound; ///< (alpha + e - 1) / e
  std::uint64_t alpha = 0;
  std::size_t big_height = 0;
  bool holds = false;
  bool tight = false;
};

ChudnovskyCheck chudnovsky_check(const SquarefreeIdeal& ideal);
ChudnovskyCheck chudnovsky_check(const Decomposition& d, const BigRational& alpha_hat);

struct GraphBounds {
  std::size_t chi = 0;
  std::size_t omega = 0;
  BigRational lower; ///< chi/(chi-1)
  BigRational upper; ///< omega/(omega-1)
  BigRational alpha_hat;
  std::size_t big_height = 0;
  bool sandwich_holds = false;
  /// chi/(chi-1) >= (e+1)/e
  bool improved_bound_holds = false;
};

/// Requires every generator to have degree exactly 2 (NotAGraphError).
GraphBounds graph_bounds(const SquarefreeIdeal& ideal);

/// Exact chromatic number of a simple graph by backtracking.
std::size_t chromatic_number(std::size_t n, const std::vector<std::vector<std::size_t>>& edges);
/// Exact clique number of a simple graph by branch and bound.
std::size_t clique_number(std::size_t n, const std::vector<std::vector<std::size_t>>& edges);

struct DisjointSumCheck {
  BigRational min_rule_value;
  BigRational direct_value;
  bool equal = false;
};

/// alpha_hat(I + J) against min(alpha_hat(I), alpha_hat(J)) for ideals in
/// one context whose supports are disjoint (DisjointnessError otherwise).
DisjointSumCheck disjoint_sum_rule(const SquarefreeIdeal& i, const SquarefreeIdeal& j);

/// I + J in the shared context.
SquarefreeIdeal ideal_sum(const SquarefreeIdeal& i, const SquarefreeIdeal& j);

} // namespace waldkit
