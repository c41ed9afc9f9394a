#pragma once

// Ideal families with closed-form Waldschmidt constants. Graph families use
// variables x1..xn; the point-configuration families use x0..xn.

#include "waldkit/core.hpp"
#include "waldkit/rational.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace waldkit {

struct FamilyInstance {
  std::string name; ///< e.g. "cycle 5"
  SquarefreeIdeal ideal;
  std::optional<BigRational> expected_alpha_hat;
  std::optional<BigRational> expected_resurgence;
  std::string provenance;
};

/// Edge ideal of the n-cycle, n >= 3.
FamilyInstance cycle_ideal(std::size_t n);
/// Edge ideal of the complete multipartite graph with the given part sizes
/// (at least two parts, each non-empty).
FamilyInstance complete_multipartite_ideal(const std::vector<std::size_t>& parts);
/// Edge ideal of the complement of C_n, n odd and >= 5.
FamilyInstance cycle_complement_ideal(std::size_t n);
/// <yz> + <x_i x_j : i, j not adjacent in the n-gon>, n >= 4.
FamilyInstance bipyramid_ideal(std::size_t n);
/// All squarefree monomials of degree n+2-c in x0..xn, where vertices = n+1
/// and 1 <= c <= n.
FamilyInstance uniform_matroid_ideal(std::size_t vertices, std::size_t c);
/// (x0 xn, ..., x_{n-1} xn, x0 ... x_{n-1}), n >= 2.
FamilyInstance monomial_star_ideal(std::size_t n);
/// Intersection of the s coordinate primes omitting x_{(i-1)t}..x_{it-1},
/// with s, t >= 1, st <= n+1 and t <= n.
FamilyInstance general_linear_ideal(std::size_t s, std::size_t t, std::size_t n);

/// Builds a family from CLI words such as {"matroid", "5", "2"} or
/// {"multipartite", "3,3"}. Throws std::invalid_argument on bad input.
FamilyInstance family_from_spec(const std::vector<std::string>& words);

struct FamilyUsage {
  std::string name;
  std::string parameters;
  std::string description;
};

std::vector<FamilyUsage> family_names();

} // namespace waldkit
