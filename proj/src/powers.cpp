#include "waldkit/powers.hpp"

#include "waldkit/detail/exponents.hpp"
#include "waldkit/error.hpp"
#include "waldkit/ratlp.hpp"
#include "waldkit/waldschmidt.hpp"

#include <boost/container_hash/hash.hpp>

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <unordered_set>

namespace waldkit {

namespace {

using detail::GeneratorSet;

void check_cap(std::size_t count, std::size_t cap, const char* what) {
  if (count > cap) {
    throw CapExceededError(std::string(what) + " needs more than " + std::to_string(cap) +
                           " generators; raise the cap to continue");
  }
}

void require_positive(std::uint64_t v, const char* what) {
  if (v == 0) throw std::invalid_argument(std::string(what) + " must be at least 1");
}

// Calls emit(e) for every exponent vector of total degree k supported on vars.
void for_each_of_degree(const std::vector<std::size_t>& vars, std::uint64_t k, ExponentVector& scratch,
                        const std::function<void(const ExponentVector&)>& emit, std::size_t pos = 0) {
  if (pos + 1 == vars.size()) {
    scratch[vars[pos]] += static_cast<Exponent>(k);
    emit(scratch);
    scratch[vars[pos]] -= static_cast<Exponent>(k);
    return;
  }
  for (std::uint64_t a = 0; a <= k; ++a) {
    scratch[vars[pos]] += static_cast<Exponent>(a);
    for_each_of_degree(vars, k - a, scratch, emit, pos + 1);
    scratch[vars[pos]] -= static_cast<Exponent>(a);
  }
}

std::uint64_t degree_on(const ExponentVector& e, const std::vector<std::size_t>& vars) {
  std::uint64_t s = 0;
  for (auto v : vars) s += e[v];
  return s;
}

// J ∩ P^m: for a monomial g, (g) ∩ P^m = g * P^(m - deg_P g), which is the
// minimal part of the lcms of g with the generators of P^m.
GeneratorSet intersect_prime_power(const GeneratorSet& gens, const std::vector<std::size_t>& prime, std::uint64_t m,
                                   std::size_t cap) {
  GeneratorSet out;
  for (const auto& g : gens) {
    const auto have = degree_on(g, prime);
    if (have >= m) {
      out.push_back(g);
    } else {
      ExponentVector scratch = g;
      for_each_of_degree(prime, m - have, scratch, [&](const ExponentVector& e) { out.push_back(e); });
    }
    check_cap(out.size(), cap, "symbolic power");
  }
  return detail::minimalize(std::move(out));
}

GeneratorSet symbolic_generators(const Decomposition& d, std::uint64_t m, std::size_t cap) {
  GeneratorSet current = detail::unit_generators(d.context()->size());
  if (m == 0) return current;
  for (const auto& p : d.primes()) current = intersect_prime_power(current, p.variables(), m, cap);
  return current;
}

GeneratorSet product(const GeneratorSet& a, const GeneratorSet& b, std::size_t cap) {
  GeneratorSet out;
  check_cap(a.size() * b.size(), cap, "ideal product");
  out.reserve(a.size() * b.size());
  for (const auto& x : a)
    for (const auto& y : b) out.push_back(detail::product(x, y));
  return detail::minimalize(std::move(out));
}

GeneratorSet raw(const MonomialIdeal& ideal) {
  GeneratorSet out;
  for (const auto& g : ideal.generators()) out.push_back(g.exponents());
  return out;
}

MonomialIdeal wrap(const ContextPtr& context, GeneratorSet gens) { return make_ideal(context, std::move(gens)); }

struct StateHash {
  std::size_t operator()(const ExponentVector& v) const { return boost::hash_range(v.begin(), v.end()); }
};

class OrdinaryMembership {
public:
  OrdinaryMembership(const MonomialIdeal& ideal) : gens_(raw(ideal)), alpha_(ideal.min_degree()) {}

  bool contains(const ExponentVector& f, std::uint64_t r) {
    ExponentVector residual = f;
    return reach(residual, r);
  }

private:
  bool reach(ExponentVector& residual, std::uint64_t budget) {
    if (budget == 0) return true;
    if (detail::degree(residual) < budget * alpha_) return false;
    ExponentVector key = residual;
    key.push_back(static_cast<Exponent>(budget));
    if (failed_.count(key)) return false;
    for (const auto& g : gens_) {
      if (!detail::divides(g, residual)) continue;
      for (std::size_t i = 0; i < g.size(); ++i) residual[i] -= g[i];
      const bool ok = reach(residual, budget - 1);
      for (std::size_t i = 0; i < g.size(); ++i) residual[i] += g[i];
      if (ok) return true;
    }
    failed_.insert(std::move(key));
    return false;
  }

  GeneratorSet gens_;
  std::uint64_t alpha_;
  std::unordered_set<ExponentVector, StateHash> failed_;
};

void require_disjoint(const SquarefreeIdeal& a, const SquarefreeIdeal& b) {
  if (!same_context(a.context(), b.context())) throw ContextMismatchError("ideals live in different contexts");
  const auto sa = a.ideal().support();
  const auto sb = b.ideal().support();
  std::vector<std::size_t> common;
  std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(common));
  if (!common.empty()) throw DisjointnessError("ideals share variable " + a.context()->name(common.front()));
}

} // namespace

bool in_symbolic_power(const Monomial& f, const Decomposition& d, std::uint64_t m) {
  if (!same_context(f.context(), d.context())) throw ContextMismatchError("monomial and ideal contexts differ");
  return std::all_of(d.primes().begin(), d.primes().end(),
                     [&](const PrimeSupport& p) { return degree_on(f.exponents(), p.variables()) >= m; });
}

MonomialIdeal symbolic_power_generators(const Decomposition& d, std::uint64_t m, std::size_t cap) {
  require_positive(m, "symbolic power exponent");
  return wrap(d.context(), symbolic_generators(d, m, cap));
}

std::uint64_t alpha_symbolic(const Decomposition& d, std::uint64_t m) {
  require_positive(m, "symbolic power exponent");
  const std::vector<std::uint64_t> rhs(d.size(), m);
  return solve_ilp_min(constraint_matrix(d), rhs).value;
}

bool in_ordinary_power(const Monomial& f, const MonomialIdeal& ideal, std::uint64_t r) {
  if (!same_context(f.context(), ideal.context())) throw ContextMismatchError("monomial and ideal contexts differ");
  OrdinaryMembership membership(ideal);
  return membership.contains(f.exponents(), r);
}

MonomialIdeal ordinary_power_generators(const MonomialIdeal& ideal, std::uint64_t r, std::size_t cap) {
  require_positive(r, "power exponent");
  const auto base = raw(ideal);
  GeneratorSet current = base;
  for (std::uint64_t k = 1; k < r; ++k) current = product(current, base, cap);
  return wrap(ideal.context(), std::move(current));
}

MonomialIdeal ideal_product(const MonomialIdeal& a, const MonomialIdeal& b, std::size_t cap) {
  if (!same_context(a.context(), b.context())) throw ContextMismatchError("ideals live in different contexts");
  return wrap(a.context(), product(raw(a), raw(b), cap));
}

MonomialIdeal ideal_intersection(const MonomialIdeal& a, const MonomialIdeal& b, std::size_t cap) {
  if (!same_context(a.context(), b.context())) throw ContextMismatchError("ideals live in different contexts");
  check_cap(a.size() * b.size(), cap, "ideal intersection");
  GeneratorSet out;
  for (const auto& x : a.generators())
    for (const auto& y : b.generators()) out.push_back(detail::lcm(x.exponents(), y.exponents()));
  return wrap(a.context(), detail::minimalize(std::move(out)));
}

ContainmentResult check_containment(const Decomposition& d, const MonomialIdeal& ideal, std::uint64_t m,
                                    std::uint64_t r, std::size_t cap) {
  require_positive(m, "symbolic power exponent");
  require_positive(r, "power exponent");
  if (!same_context(d.context(), ideal.context())) throw ContextMismatchError("ideal and decomposition differ");
  auto gens = symbolic_generators(d, m, cap);
  std::sort(gens.begin(), gens.end(), detail::graded_less);

  ContainmentResult res;
  res.m = m;
  res.r = r;
  res.ratio = BigRational(m) / BigRational(r);
  res.contained = true;
  OrdinaryMembership membership(ideal);
  for (const auto& g : gens) {
    if (!membership.contains(g, r)) {
      res.contained = false;
      res.witness = Monomial(ideal.context(), g);
      break;
    }
  }
  return res;
}

BinomialCheck symbolic_binomial_check(const SquarefreeIdeal& i1, const SquarefreeIdeal& i2, std::uint64_t m,
                                      std::size_t cap) {
  require_positive(m, "symbolic power exponent");
  require_disjoint(i1, i2);
  const auto whole = minimal_primes(ideal_sum(i1, i2));
  const auto d1 = minimal_primes(i1);
  const auto d2 = minimal_primes(i2);

  auto lhs = symbolic_generators(whole, m, cap);
  GeneratorSet rhs;
  for (std::uint64_t j = 0; j <= m; ++j) {
    const auto term = product(symbolic_generators(d1, m - j, cap), symbolic_generators(d2, j, cap), cap);
    rhs.insert(rhs.end(), term.begin(), term.end());
    check_cap(rhs.size(), cap, "binomial expansion");
  }
  rhs = detail::minimalize(std::move(rhs));
  const bool equal = lhs == rhs;
  return {equal, wrap(i1.context(), std::move(lhs)), wrap(i1.context(), std::move(rhs))};
}

AdjunctionCheck variable_adjunction_check(const SquarefreeIdeal& ideal, std::uint64_t m, std::size_t cap) {
  require_positive(m, "power exponent");
  const auto d = minimal_primes(ideal);
  const auto base = raw(ideal.ideal());
  GeneratorSet ordinary = base;
  for (std::uint64_t k = 1; k <= m; ++k) {
    if (k > 1) ordinary = product(ordinary, base, cap);
    if (symbolic_generators(d, k, cap) != ordinary) return {AdjunctionOutcome::hypothesis_fails, k};
  }

  auto names = ideal.context()->names();
  std::string fresh = "y";
  for (std::size_t suffix = 0; ideal.context()->index_of(fresh); ++suffix) fresh = "y" + std::to_string(suffix);
  names.push_back(fresh);
  const auto extended = make_context(std::move(names));
  std::vector<Monomial> gens;
  for (const auto& g : ideal.generators()) {
    auto e = g.exponents();
    e.push_back(0);
    gens.emplace_back(extended, std::move(e));
  }
  ExponentVector y(extended->size(), 0);
  y.back() = 1;
  gens.emplace_back(extended, std::move(y));
  const auto adjoined = SquarefreeIdeal::make(extended, std::move(gens));

  const auto symbolic = symbolic_power_generators(minimal_primes(adjoined), m, cap);
  const auto power = ordinary_power_generators(adjoined.ideal(), m, cap);
  return {symbolic == power ? AdjunctionOutcome::holds : AdjunctionOutcome::identity_fails, 0};
}

ResurgenceEstimate resurgence_search(const Decomposition& d, const MonomialIdeal& ideal, std::uint64_t window_m,
                                     std::uint64_t window_r, std::size_t cap) {
  require_positive(window_m, "window M");
  require_positive(window_r, "window R");
  ResurgenceEstimate est;
  est.window_m = window_m;
  est.window_r = window_r;
  const auto alpha_hat = waldschmidt_constant(d);
  est.alpha_ratio = BigRational(ideal.min_degree()) / alpha_hat;
  est.omega_ratio = BigRational(ideal.max_degree()) / alpha_hat;

  OrdinaryMembership membership(ideal);
  for (std::uint64_t m = 1; m <= window_m; ++m) {
    const auto top = std::min(m, window_r);
    GeneratorSet gens;
    try {
      gens = symbolic_generators(d, m, cap);
    } catch (const CapExceededError&) {
      for (std::uint64_t r = 1; r <= top; ++r) est.skipped.emplace_back(m, r);
      continue;
    }
    std::sort(gens.begin(), gens.end(), detail::graded_less);
    // I^(m) ⊄ I^r implies I^(m) ⊄ I^(r+1) with the same witness.
    std::optional<Monomial> witness;
    for (std::uint64_t r = 1; r <= top; ++r) {
      if (!witness) {
        for (const auto& g : gens) {
          if (!membership.contains(g, r)) {
            witness = Monomial(ideal.context(), g);
            break;
          }
        }
      }
      if (witness) {
        ContainmentResult c;
        c.m = m;
        c.r = r;
        c.contained = false;
        c.witness = witness;
        c.ratio = BigRational(m) / BigRational(r);
        if (c.ratio > est.lower_bound) est.lower_bound = c.ratio;
        est.non_containments.push_back(std::move(c));
      }
    }
  }
  est.certified_lower_bound = std::max(est.lower_bound, est.alpha_ratio);
  return est;
}

} // namespace waldkit
