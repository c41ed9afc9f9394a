#pragma once

// Exact rational linear programming: a dense two-phase tableau simplex with
// Bland's pivoting rule, plus a small branch-and-bound integer solver for
// covering programs. No floating point anywhere.

#include "waldkit/constraint_matrix.hpp"
#include "waldkit/rational.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace waldkit {

using RationalVector = std::vector<BigRational>;
using RationalMatrix = std::vector<RationalVector>;

enum class Sense { minimize, maximize };

enum class LpStatus { optimal, infeasible, unbounded };

/// Two shapes, with the unknowns implicitly non-negative:
///   minimize  objective . y   s.t.  A y >= rhs
///   maximize  objective . x   s.t.  A x <= rhs
/// The dual of each is the other shape with A transposed and the roles of
/// rhs and objective swapped.
class LinearProgram {
public:
  /// Throws MalformedProgramError on inconsistent dimensions.
  LinearProgram(Sense sense, RationalMatrix a, RationalVector rhs, RationalVector objective);

  /// The covering program min 1.y s.t. A y >= 1 for a 0/1 matrix.
  static LinearProgram covering(const ConstraintMatrix& a);
  /// The packing program max 1.w s.t. A w <= 1 for a 0/1 matrix.
  static LinearProgram packing(const ConstraintMatrix& a);

  Sense sense() const { return sense_; }
  const RationalMatrix& matrix() const { return a_; }
  const RationalVector& rhs() const { return rhs_; }
  const RationalVector& objective() const { return objective_; }
  std::size_t rows() const { return rhs_.size(); }
  std::size_t cols() const { return objective_.size(); }

private:
  Sense sense_;
  RationalMatrix a_;
  RationalVector rhs_;
  RationalVector objective_;
};

struct LinearProgramSolution {
  LpStatus status = LpStatus::infeasible;
  BigRational value;
  /// Optimal point of the program as posed (one entry per column).
  RationalVector primal;
  /// Optimal point of the dual program (one entry per row).
  RationalVector dual;
};

struct SolveOptions {
  /// Called after every pivot with the phase (1 or 2) and the basis, a list
  /// of internal column indices ordered by row.
  std::function<void(int phase, std::span<const std::size_t> basis)> on_pivot;
};

LinearProgramSolution solve_lp(const LinearProgram& program, const SolveOptions& options = {});

/// Primal feasibility, dual feasibility and equal objective values, all
/// checked exactly.
bool certificate_holds(const LinearProgram& program, const LinearProgramSolution& solution);

/// Objective value of the dual program at a point (c . x for the dual of a
/// minimize program); returns nullopt when the point is infeasible for it.
std::optional<BigRational> dual_objective(const LinearProgram& program, std::span<const BigRational> point);

struct IntegerSolution {
  std::uint64_t value = 0;
  std::vector<std::uint64_t> point;
  std::size_t nodes = 0;
};

/// Minimises sum(y) over non-negative integer y with A y >= rhs, for a 0/1
/// matrix A whose rows all contain a 1.
IntegerSolution solve_ilp_min(const ConstraintMatrix& a, std::span<const std::uint64_t> rhs);

} // namespace waldkit
