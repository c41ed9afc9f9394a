#include "waldkit/ratlp.hpp"

#include "waldkit/error.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <stdexcept>

namespace waldkit {

namespace {

enum class Relation { greater_equal, less_equal };

struct Row {
  RationalVector coeffs;
  Relation relation;
  BigRational rhs;
};

struct MinResult {
  LpStatus status = LpStatus::infeasible;
  BigRational value;
  RationalVector point;
  /// One multiplier per input row, sign convention of the minimisation dual:
  /// >= 0 for ">=" rows, <= 0 for "<=" rows.
  RationalVector duals;
};

// Dense tableau over columns [structural | slack/surplus | artificial].
// Every row gets an artificial column; those columns never re-enter in phase
// two, and their reduced costs yield the dual multipliers at the end.
class Tableau {
public:
  Tableau(const RationalVector& cost, const std::vector<Row>& rows, const SolveOptions& options)
      : options_(options), cost_(cost), m_(rows.size()), structural_(cost.size()) {
    slack_start_ = structural_;
    art_start_ = structural_ + m_;
    width_ = art_start_ + m_;
    t_.assign(m_, RationalVector(width_));
    b_.resize(m_);
    negated_.assign(m_, false);
    basis_.resize(m_);
    for (std::size_t i = 0; i < m_; ++i) {
      const auto& r = rows[i];
      for (std::size_t j = 0; j < structural_; ++j) t_[i][j] = r.coeffs[j];
      t_[i][slack_start_ + i] = r.relation == Relation::greater_equal ? BigRational(-1) : BigRational(1);
      b_[i] = r.rhs;
      if (b_[i].sign() < 0) {
        negated_[i] = true;
        for (std::size_t j = 0; j < art_start_; ++j) t_[i][j] = -t_[i][j];
        b_[i] = -b_[i];
      }
      t_[i][art_start_ + i] = 1;
      basis_[i] = art_start_ + i;
    }
  }

  MinResult solve() {
    // Phase one: minimise the sum of the artificials.
    RationalVector phase_one_cost(width_);
    for (std::size_t i = 0; i < m_; ++i) phase_one_cost[art_start_ + i] = 1;
    price(phase_one_cost);
    run(1, width_);
    if (objective_.sign() > 0) return {LpStatus::infeasible, {}, {}, {}};
    drive_out_artificials();

    RationalVector phase_two_cost(width_);
    for (std::size_t j = 0; j < structural_; ++j) phase_two_cost[j] = cost_[j];
    price(phase_two_cost);
    if (!run(2, art_start_)) return {LpStatus::unbounded, {}, {}, {}};

    MinResult out;
    out.status = LpStatus::optimal;
    out.value = objective_;
    out.point.assign(structural_, BigRational());
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < structural_) out.point[basis_[i]] = b_[i];
    }
    out.duals.resize(m_);
    for (std::size_t i = 0; i < m_; ++i) {
      BigRational pi = -reduced_[art_start_ + i];
      out.duals[i] = negated_[i] ? -pi : pi;
    }
    return out;
  }

private:
  void price(const RationalVector& cost) {
    reduced_ = cost;
    objective_ = 0;
    for (std::size_t i = 0; i < m_; ++i) {
      const auto& cb = cost[basis_[i]];
      if (cb.is_zero()) continue;
      for (std::size_t j = 0; j < width_; ++j) {
        if (!t_[i][j].is_zero()) reduced_[j] -= cb * t_[i][j];
      }
      objective_ += cb * b_[i];
    }
  }

  // Bland's rule. Returns false when the program is unbounded.
  bool run(int phase, std::size_t enter_limit) {
    while (true) {
      std::size_t enter = enter_limit;
      for (std::size_t j = 0; j < enter_limit; ++j) {
        if (reduced_[j].sign() < 0) {
          enter = j;
          break;
        }
      }
      if (enter == enter_limit) return true;

      std::size_t leave = m_;
      BigRational best_ratio;
      for (std::size_t i = 0; i < m_; ++i) {
        if (t_[i][enter].sign() <= 0) continue;
        BigRational ratio = b_[i] / t_[i][enter];
        if (leave == m_ || ratio < best_ratio || (ratio == best_ratio && basis_[i] < basis_[leave])) {
          leave = i;
          best_ratio = std::move(ratio);
        }
      }
      if (leave == m_) return false;
      pivot(leave, enter);
      if (options_.on_pivot) options_.on_pivot(phase, basis_);
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    const BigRational p = t_[r][c];
    for (auto& v : t_[r]) {
      if (!v.is_zero()) v /= p;
    }
    b_[r] /= p;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == r || t_[i][c].is_zero()) continue;
      const BigRational f = t_[i][c];
      for (std::size_t j = 0; j < width_; ++j) {
        if (!t_[r][j].is_zero()) t_[i][j] -= f * t_[r][j];
      }
      b_[i] -= f * b_[r];
    }
    if (!reduced_[c].is_zero()) {
      const BigRational f = reduced_[c];
      for (std::size_t j = 0; j < width_; ++j) {
        if (!t_[r][j].is_zero()) reduced_[j] -= f * t_[r][j];
      }
      objective_ += f * b_[r];
    }
    basis_[r] = c;
#ifndef NDEBUG
    for (const auto& row : t_)
      for (const auto& v : row) assert(v.is_canonical());
    for (const auto& v : b_) assert(v.is_canonical());
#endif
  }

  // Artificials left in the basis at level zero are swapped for any
  // non-artificial column with a nonzero entry in their row. A row with no
  // such entry is redundant; its artificial stays basic at zero for good.
  void drive_out_artificials() {
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < art_start_) continue;
      for (std::size_t j = 0; j < art_start_; ++j) {
        if (!t_[i][j].is_zero()) {
          pivot(i, j);
          if (options_.on_pivot) options_.on_pivot(1, basis_);
          break;
        }
      }
    }
  }

  const SolveOptions& options_;
  RationalVector cost_;
  std::size_t m_;
  std::size_t structural_;
  std::size_t slack_start_ = 0;
  std::size_t art_start_ = 0;
  std::size_t width_ = 0;
  std::vector<RationalVector> t_;
  RationalVector b_;
  std::vector<bool> negated_;
  std::vector<std::size_t> basis_;
  RationalVector reduced_;
  BigRational objective_;
};

MinResult minimize(const RationalVector& cost, const std::vector<Row>& rows, const SolveOptions& options) {
  Tableau t(cost, rows, options);
  return t.solve();
}

BigRational dot(std::span<const BigRational> a, std::span<const BigRational> b) {
  BigRational s;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
  }
  return s;
}

} // namespace

LinearProgram::LinearProgram(Sense sense, RationalMatrix a, RationalVector rhs, RationalVector objective)
    : sense_(sense), a_(std::move(a)), rhs_(std::move(rhs)), objective_(std::move(objective)) {
  if (a_.size() != rhs_.size()) {
    throw MalformedProgramError("matrix has " + std::to_string(a_.size()) + " rows but rhs has " +
                                std::to_string(rhs_.size()) + " entries");
  }
  for (const auto& row : a_) {
    if (row.size() != objective_.size()) {
      throw MalformedProgramError("matrix row of length " + std::to_string(row.size()) +
                                  " does not match objective of length " + std::to_string(objective_.size()));
    }
  }
}

namespace {

RationalMatrix to_rational(const ConstraintMatrix& a) {
  RationalMatrix m(a.rows(), RationalVector(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m[i][j] = a.at(i, j);
  return m;
}

} // namespace

LinearProgram LinearProgram::covering(const ConstraintMatrix& a) {
  return LinearProgram(Sense::minimize, to_rational(a), RationalVector(a.rows(), 1), RationalVector(a.cols(), 1));
}

LinearProgram LinearProgram::packing(const ConstraintMatrix& a) {
  return LinearProgram(Sense::maximize, to_rational(a), RationalVector(a.rows(), 1), RationalVector(a.cols(), 1));
}

LinearProgramSolution solve_lp(const LinearProgram& program, const SolveOptions& options) {
  const bool minimizing = program.sense() == Sense::minimize;
  std::vector<Row> rows;
  rows.reserve(program.rows());
  for (std::size_t i = 0; i < program.rows(); ++i) {
    rows.push_back({program.matrix()[i], minimizing ? Relation::greater_equal : Relation::less_equal,
                    program.rhs()[i]});
  }
  RationalVector cost = program.objective();
  if (!minimizing) {
    for (auto& c : cost) c = -c;
  }

  const auto r = minimize(cost, rows, options);
  LinearProgramSolution out;
  out.status = r.status;
  if (r.status != LpStatus::optimal) return out;
  out.primal = r.point;
  if (minimizing) {
    out.value = r.value;
    out.dual = r.duals;
  } else {
    out.value = -r.value;
    out.dual.reserve(r.duals.size());
    for (const auto& d : r.duals) out.dual.push_back(-d);
  }
  return out;
}

std::optional<BigRational> dual_objective(const LinearProgram& program, std::span<const BigRational> point) {
  if (point.size() != program.rows()) return std::nullopt;
  for (const auto& v : point) {
    if (v.sign() < 0) return std::nullopt;
  }
  for (std::size_t j = 0; j < program.cols(); ++j) {
    BigRational s;
    for (std::size_t i = 0; i < program.rows(); ++i) {
      if (!point[i].is_zero()) s += program.matrix()[i][j] * point[i];
    }
    const bool ok = program.sense() == Sense::minimize ? s <= program.objective()[j] : s >= program.objective()[j];
    if (!ok) return std::nullopt;
  }
  return dot(program.rhs(), point);
}

bool certificate_holds(const LinearProgram& program, const LinearProgramSolution& solution) {
  if (solution.status != LpStatus::optimal) return false;
  if (solution.primal.size() != program.cols()) return false;
  for (const auto& v : solution.primal) {
    if (v.sign() < 0) return false;
  }
  const bool minimizing = program.sense() == Sense::minimize;
  for (std::size_t i = 0; i < program.rows(); ++i) {
    const auto lhs = dot(program.matrix()[i], solution.primal);
    if (minimizing ? lhs < program.rhs()[i] : lhs > program.rhs()[i]) return false;
  }
  const auto dual_value = dual_objective(program, solution.dual);
  if (!dual_value) return false;
  const auto primal_value = dot(program.objective(), solution.primal);
  return primal_value == solution.value && *dual_value == solution.value;
}

// ---------------------------------------------------------------------------

IntegerSolution solve_ilp_min(const ConstraintMatrix& a, std::span<const std::uint64_t> rhs) {
  if (rhs.size() != a.rows()) throw MalformedProgramError("rhs length does not match matrix rows");
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const auto row = a.row(i);
    if (std::none_of(row.begin(), row.end(), [](std::uint8_t v) { return v != 0; })) {
      throw std::invalid_argument("covering row without any variable");
    }
  }
  const auto n = a.cols();

  struct Bounds {
    std::vector<std::uint64_t> lower;
    std::vector<std::uint64_t> upper; // max() means unbounded
  };
  constexpr auto kUnbounded = std::numeric_limits<std::uint64_t>::max();

  auto relax = [&](const Bounds& bounds) {
    std::vector<Row> rows;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      RationalVector coeffs(n);
      for (std::size_t j = 0; j < n; ++j) coeffs[j] = a.at(i, j);
      rows.push_back({std::move(coeffs), Relation::greater_equal, BigRational(rhs[i])});
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (bounds.lower[j] > 0) {
        RationalVector e(n);
        e[j] = 1;
        rows.push_back({std::move(e), Relation::greater_equal, BigRational(bounds.lower[j])});
      }
      if (bounds.upper[j] != kUnbounded) {
        RationalVector e(n);
        e[j] = 1;
        rows.push_back({std::move(e), Relation::less_equal, BigRational(bounds.upper[j])});
      }
    }
    return minimize(RationalVector(n, 1), rows, SolveOptions{});
  };

  IntegerSolution best;
  best.value = kUnbounded;

  std::vector<Bounds> stack;
  stack.push_back({std::vector<std::uint64_t>(n, 0), std::vector<std::uint64_t>(n, kUnbounded)});
  bool root = true;
  while (!stack.empty()) {
    Bounds node = std::move(stack.back());
    stack.pop_back();
    ++best.nodes;
    const auto lp = relax(node);
    if (lp.status != LpStatus::optimal) continue;

    if (root) {
      // Rounding the relaxation up stays feasible because A is non-negative.
      root = false;
      std::vector<std::uint64_t> rounded(n);
      std::uint64_t total = 0;
      for (std::size_t j = 0; j < n; ++j) {
        rounded[j] = lp.point[j].ceil().get_ui();
        total += rounded[j];
      }
      best.value = total;
      best.point = std::move(rounded);
    }

    const auto bound = lp.value.ceil().get_ui();
    if (bound >= best.value) continue;

    std::size_t branch = n;
    for (std::size_t j = 0; j < n; ++j) {
      if (!lp.point[j].is_integer()) {
        branch = j;
        break;
      }
    }
    if (branch == n) {
      best.value = lp.value.numerator().get_ui();
      best.point.assign(n, 0);
      for (std::size_t j = 0; j < n; ++j) best.point[j] = lp.point[j].numerator().get_ui();
      continue;
    }

    const auto down = lp.point[branch].floor().get_ui();
    Bounds up_node = node;
    up_node.lower[branch] = down + 1;
    Bounds down_node = std::move(node);
    down_node.upper[branch] = down;
    // LIFO: the down branch is explored first.
    stack.push_back(std::move(up_node));
    if (down_node.lower[branch] <= down) stack.push_back(std::move(down_node));
  }
  return best;
}

} // namespace waldkit
