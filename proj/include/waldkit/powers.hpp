#pragma once

// Symbolic and ordinary powers of monomial ideals.
//
// For a squarefree ideal with minimal primes P_1..P_s, the m-th symbolic power
// is P_1^m ∩ ... ∩ P_s^m, so a monomial lies in it iff its exponents summed
// over each prime's variables reach m. Ordinary powers I^r are handled as
// products of r generators.

#include "waldkit/core.hpp"
#include "waldkit/decomposition.hpp"
#include "waldkit/rational.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace waldkit {

inline constexpr std::size_t kDefaultMaxGenerators = 200'000;

bool in_symbolic_power(const Monomial& f, const Decomposition& d, std::uint64_t m);

/// Minimal generators of I^(m), m >= 1. Throws CapExceededError when an
/// intermediate generator set grows beyond `cap`.
MonomialIdeal symbolic_power_generators(const Decomposition& d, std::uint64_t m,
                                        std::size_t cap = kDefaultMaxGenerators);

/// alpha(I^(m)) from the integer covering program A y >= m.
std::uint64_t alpha_symbolic(const Decomposition& d, std::uint64_t m);

/// f in I^r, i.e. f is divisible by a product of r generators. r = 0 is the
/// unit ideal.
bool in_ordinary_power(const Monomial& f, const MonomialIdeal& ideal, std::uint64_t r);

/// Minimal generators of I^r, r >= 1.
MonomialIdeal ordinary_power_generators(const MonomialIdeal& ideal, std::uint64_t r,
                                        std::size_t cap = kDefaultMaxGenerators);

MonomialIdeal ideal_product(const MonomialIdeal& a, const MonomialIdeal& b, std::size_t cap = kDefaultMaxGenerators);
/// Minimalised pairwise lcms.
MonomialIdeal ideal_intersection(const MonomialIdeal& a, const MonomialIdeal& b,
                                 std::size_t cap = kDefaultMaxGenerators);

struct ContainmentResult {
  std::uint64_t m = 0;
  std::uint64_t r = 0;
  bool contained = false;
  /// A minimal generator of I^(m) outside I^r, present iff !contained.
  std::optional<Monomial> witness;
  BigRational ratio; ///< m / r
};

/// Decides I^(m) ⊆ I^r generator by generator. The witness is the first
/// failing generator in degree-then-lexicographic order.
ContainmentResult check_containment(const Decomposition& d, const MonomialIdeal& ideal, std::uint64_t m,
                                    std::uint64_t r, std::size_t cap = kDefaultMaxGenerators);

struct BinomialCheck {
  bool equal = false;
  MonomialIdeal lhs; ///< (I1 + I2)^(m)
  MonomialIdeal rhs; ///< sum_j I1^(m-j) I2^(j)
};

/// Expands (I1 + I2)^(m) as sum_{j=0..m} I1^(m-j) I2^(j) for ideals on
/// disjoint variables of one context, with I^(0) the unit ideal.
BinomialCheck symbolic_binomial_check(const SquarefreeIdeal& i1, const SquarefreeIdeal& i2, std::uint64_t m,
                                      std::size_t cap = kDefaultMaxGenerators);

enum class AdjunctionOutcome { holds, identity_fails, hypothesis_fails };

struct AdjunctionCheck {
  AdjunctionOutcome outcome = AdjunctionOutcome::holds;
  /// First k <= m with I^(k) != I^k when the hypothesis fails.
  std::uint64_t failing_power = 0;
};

/// Checks (I, y)^(m) = (I, y)^m for a fresh variable y, after confirming
/// I^(k) = I^k for k = 1..m.
AdjunctionCheck variable_adjunction_check(const SquarefreeIdeal& ideal, std::uint64_t m,
                                          std::size_t cap = kDefaultMaxGenerators);

struct ResurgenceEstimate {
  /// sup of m/r over the non-containments found, or 1 when there are none.
  BigRational lower_bound{1};
  /// max(lower_bound, alpha_ratio): alpha(I)/alpha_hat(I) is itself a lower
  /// bound on the resurgence, while finite windows can only approach it.
  BigRational certified_lower_bound{1};
  std::uint64_t window_m = 0;
  std::uint64_t window_r = 0;
  BigRational alpha_ratio;
  BigRational omega_ratio;
  std::vector<ContainmentResult> non_containments;
  /// Cells (m, r) skipped because a generator cap was hit.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> skipped;
};

/// Scans 1 <= r <= window_r, r <= m <= window_m.
ResurgenceEstimate resurgence_search(const Decomposition& d, const MonomialIdeal& ideal, std::uint64_t window_m,
                                     std::uint64_t window_r, std::size_t cap = kDefaultMaxGenerators);

} // namespace waldkit
