#include "waldkit/waldschmidt.hpp"

#include "waldkit/error.hpp"

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace waldkit {

namespace {

using Bits = boost::dynamic_bitset<std::uint64_t>;

LinearProgramSolution solve_optimal(const LinearProgram& program) {
  auto sol = solve_lp(program);
  if (sol.status != LpStatus::optimal) {
    throw std::logic_error("covering program without an optimum");
  }
  return sol;
}

std::vector<Bits> adjacency(std::size_t n, const std::vector<std::vector<std::size_t>>& edges) {
  std::vector<Bits> adj(n, Bits(n));
  for (const auto& e : edges) {
    if (e.size() != 2 || e[0] == e[1]) throw NotAGraphError("edge is not a pair of distinct vertices");
    adj[e[0]].set(e[1]);
    adj[e[1]].set(e[0]);
  }
  return adj;
}

class CliqueSearch {
public:
  explicit CliqueSearch(std::vector<Bits> adj) : adj_(std::move(adj)) {}

  std::size_t run() {
    Bits all(adj_.size());
    all.set();
    expand(0, all);
    return best_;
  }

private:
  void expand(std::size_t size, Bits candidates) {
    if (candidates.none()) {
      best_ = std::max(best_, size);
      return;
    }
    while (candidates.any()) {
      if (size + candidates.count() <= best_) return;
      const auto v = candidates.find_first();
      candidates.reset(v);
      expand(size + 1, candidates & adj_[v]);
    }
    best_ = std::max(best_, size);
  }

  std::vector<Bits> adj_;
  std::size_t best_ = 0;
};

class Colouring {
public:
  explicit Colouring(const std::vector<Bits>& adj) : adj_(adj), colour_(adj.size(), kNone) {
    order_.resize(adj.size());
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](std::size_t a, std::size_t b) { return adj_[a].count() > adj_[b].count(); });
  }

  bool try_colours(std::size_t k) {
    std::fill(colour_.begin(), colour_.end(), kNone);
    return place(0, 0, k);
  }

private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  bool place(std::size_t pos, std::size_t used, std::size_t k) {
    if (pos == order_.size()) return true;
    const auto v = order_[pos];
    // A fresh colour is only ever the next unused one.
    const auto limit = std::min(k, used + 1);
    for (std::size_t c = 0; c < limit; ++c) {
      bool clash = false;
      for (auto u = adj_[v].find_first(); u != Bits::npos; u = adj_[v].find_next(u)) {
        if (colour_[u] == c) {
          clash = true;
          break;
        }
      }
      if (clash) continue;
      colour_[v] = c;
      if (place(pos + 1, std::max(used, c + 1), k)) return true;
      colour_[v] = kNone;
    }
    return false;
  }

  const std::vector<Bits>& adj_;
  std::vector<std::size_t> colour_;
  std::vector<std::size_t> order_;
};

} // namespace

LinearProgram waldschmidt_program(const Decomposition& d) { return LinearProgram::covering(constraint_matrix(d)); }

BigRational waldschmidt_constant(const Decomposition& d) { return solve_optimal(waldschmidt_program(d)).value; }

BigRational waldschmidt_constant(const SquarefreeIdeal& ideal, std::size_t max_primes) {
  return waldschmidt_constant(minimal_primes(ideal, max_primes));
}

std::optional<BigRational> fractional_chromatic_number(const Decomposition& d) {
  if (!d.ideal().has_nontrivial_edge()) {
    throw NotApplicableError("fractional chromatic number needs an edge with at least two vertices");
  }
  // Rows of B'^T are the maximal independent sets.
  const auto program = LinearProgram::packing(independence_matrix(d).transposed());
  const auto sol = solve_lp(program);
  if (sol.status == LpStatus::unbounded) return std::nullopt;
  if (sol.status != LpStatus::optimal) throw std::logic_error("packing program infeasible");
  return sol.value;
}

std::optional<BigRational> fractional_chromatic_number(const SquarefreeIdeal& ideal) {
  return fractional_chromatic_number(minimal_primes(ideal));
}

WaldschmidtReport waldschmidt_report(const Decomposition& d) {
  WaldschmidtReport r;
  const auto sol = solve_optimal(waldschmidt_program(d));
  r.alpha_hat = sol.value;
  r.primal_witness = sol.primal;
  r.dual_witness = sol.dual;
  for (const auto& y : sol.primal) r.lcm_denominator = lcm(r.lcm_denominator, y.denominator());
  r.alpha = d.ideal().ideal().min_degree();
  r.big_height = big_height(d);
  r.chudnovsky_bound = BigRational(r.alpha + r.big_height - 1) / BigRational(r.big_height);
  if (d.ideal().has_nontrivial_edge()) r.chi_star = fractional_chromatic_number(d);
  return r;
}

ChromaticIdentityCheck check_chromatic_identity(const SquarefreeIdeal& ideal) {
  const auto d = minimal_primes(ideal);
  ChromaticIdentityCheck c;
  c.chi_star = fractional_chromatic_number(d);
  c.lhs = waldschmidt_constant(d);
  c.rhs = c.chi_star ? *c.chi_star / (*c.chi_star - BigRational(1)) : BigRational(1);
  c.equal = c.lhs == c.rhs;
  return c;
}

ChudnovskyCheck chudnovsky_check(const Decomposition& d, const BigRational& alpha_hat) {
  ChudnovskyCheck c;
  c.alpha_hat = alpha_hat;
  c.alpha = d.ideal().ideal().min_degree();
  c.big_height = big_height(d);
  c.bound = BigRational(c.alpha + c.big_height - 1) / BigRational(c.big_height);
  c.holds = c.alpha_hat >= c.bound;
  c.tight = c.alpha_hat == c.bound;
  return c;
}

ChudnovskyCheck chudnovsky_check(const SquarefreeIdeal& ideal) {
  const auto d = minimal_primes(ideal);
  return chudnovsky_check(d, waldschmidt_constant(d));
}

std::size_t chromatic_number(std::size_t n, const std::vector<std::vector<std::size_t>>& edges) {
  if (n == 0) return 0;
  const auto adj = adjacency(n, edges);
  Colouring colouring(adj);
  for (std::size_t k = std::max<std::size_t>(1, CliqueSearch(adj).run());; ++k) {
    if (colouring.try_colours(k)) return k;
  }
}

std::size_t clique_number(std::size_t n, const std::vector<std::vector<std::size_t>>& edges) {
  if (n == 0) return 0;
  return CliqueSearch(adjacency(n, edges)).run();
}

GraphBounds graph_bounds(const SquarefreeIdeal& ideal) {
  for (const auto& g : ideal.generators()) {
    if (g.degree() != 2) throw NotAGraphError("generator " + g.to_string() + " does not have degree 2");
  }
  const auto h = to_hypergraph(ideal);
  const auto d = minimal_primes(ideal);
  GraphBounds b;
  b.chi = chromatic_number(h.vertex_count, h.edges);
  b.omega = clique_number(h.vertex_count, h.edges);
  b.lower = BigRational(b.chi) / BigRational(b.chi - 1);
  b.upper = BigRational(b.omega) / BigRational(b.omega - 1);
  b.alpha_hat = waldschmidt_constant(d);
  b.big_height = big_height(d);
  b.sandwich_holds = b.lower <= b.alpha_hat && b.alpha_hat <= b.upper;
  b.improved_bound_holds = b.lower >= BigRational(b.big_height + 1) / BigRational(b.big_height);
  return b;
}

SquarefreeIdeal ideal_sum(const SquarefreeIdeal& i, const SquarefreeIdeal& j) {
  if (!same_context(i.context(), j.context())) {
    throw ContextMismatchError("ideals live in different variable contexts");
  }
  auto gens = i.generators();
  gens.insert(gens.end(), j.generators().begin(), j.generators().end());
  return SquarefreeIdeal::make(i.context(), std::move(gens));
}

DisjointSumCheck disjoint_sum_rule(const SquarefreeIdeal& i, const SquarefreeIdeal& j) {
  if (!same_context(i.context(), j.context())) {
    throw ContextMismatchError("ideals live in different variable contexts");
  }
  const auto si = i.ideal().support();
  const auto sj = j.ideal().support();
  std::vector<std::size_t> common;
  std::set_intersection(si.begin(), si.end(), sj.begin(), sj.end(), std::back_inserter(common));
  if (!common.empty()) {
    throw DisjointnessError("ideals share variable " + i.context()->name(common.front()));
  }
  DisjointSumCheck c;
  c.min_rule_value = std::min(waldschmidt_constant(i), waldschmidt_constant(j));
  c.direct_value = waldschmidt_constant(ideal_sum(i, j));
  c.equal = c.min_rule_value == c.direct_value;
  return c;
}

} // namespace waldkit
