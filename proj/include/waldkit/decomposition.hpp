#pragma once

// Minimal primary decomposition of a squarefree monomial ideal. The minimal
// primes are exactly the minimal vertex covers of the ideal's hypergraph, and
// their complements are the maximal independent sets.

#include "waldkit/constraint_matrix.hpp"
#include "waldkit/core.hpp"

#include <cstddef>
#include <vector>

namespace waldkit {

inline constexpr std::size_t kDefaultMaxPrimes = 100'000;

class Decomposition {
public:
  Decomposition(SquarefreeIdeal ideal, std::vector<PrimeSupport> primes)
      : ideal_(std::move(ideal)), primes_(std::move(primes)) {}

  const SquarefreeIdeal& ideal() const { return ideal_; }
  const ContextPtr& context() const { return ideal_.context(); }
  const std::vector<PrimeSupport>& primes() const { return primes_; }
  std::size_t size() const { return primes_.size(); }

private:
  SquarefreeIdeal ideal_;
  std::vector<PrimeSupport> primes_;
};

/// All minimal vertex covers, sorted by size and then lexicographically.
/// Throws CapExceededError once more than max_primes covers are found.
Decomposition minimal_primes(const SquarefreeIdeal& ideal, std::size_t max_primes = kDefaultMaxPrimes);

/// Complements of the minimal primes, in the same order.
std::vector<std::vector<std::size_t>> maximal_independent_sets(const Decomposition& d);
std::vector<std::vector<std::size_t>> maximal_independent_sets(const SquarefreeIdeal& ideal);

/// Largest prime height.
std::size_t big_height(const Decomposition& d);

/// s x n matrix, A[i][j] = 1 iff x_j is in P_i.
ConstraintMatrix constraint_matrix(const Decomposition& d);

/// n x s matrix, B'[i][j] = 1 iff x_i is in the j-th maximal independent set.
ConstraintMatrix independence_matrix(const Decomposition& d);

/// Minimal transversals of a set family over n points, sorted by size and
/// then lexicographically. Shared by the decomposition and by constructions
/// that start from a list of primes.
std::vector<std::vector<std::size_t>> minimal_transversals(std::size_t n,
                                                           const std::vector<std::vector<std::size_t>>& sets,
                                                           std::size_t cap = kDefaultMaxPrimes);

} // namespace waldkit
