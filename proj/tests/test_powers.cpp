#include "oracles.hpp"

#include "waldkit/error.hpp"
#include "waldkit/families.hpp"
#include "waldkit/powers.hpp"
#include "waldkit/text_format.hpp"
#include "waldkit/waldschmidt.hpp"

#include <catch_amalgamated.hpp>

using namespace waldkit;

namespace {

const oracle::Family kC5{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}};

Monomial mono(const ContextPtr& ctx, ExponentVector e) { return Monomial(ctx, std::move(e)); }

oracle::Family primes_of(const Decomposition& d) {
  oracle::Family out;
  for (const auto& p : d.primes()) out.push_back(p.variables());
  return out;
}

} // namespace

TEST_CASE("symbolic membership") {
  const auto c5 = minimal_primes(oracle::to_ideal(make_context(5), kC5));
  CHECK(in_symbolic_power(mono(c5.context(), {1, 1, 1, 1, 1}), c5, 3));
  CHECK_FALSE(in_symbolic_power(mono(c5.context(), {1, 1, 0, 0, 0}), c5, 2));
  const auto star = monomial_star_ideal(2);
  const auto d = minimal_primes(star.ideal);
  CHECK(in_symbolic_power(mono(d.context(), {2, 2, 2}), d, 3));
  CHECK_THROWS_AS(in_symbolic_power(mono(make_context(5, "y"), {1, 1, 1, 1, 1}), c5, 1), ContextMismatchError);
}

TEST_CASE("symbolic power generators") {
  const auto path = parse_ideal("vars 3\nx1*x2\nx2*x3\n");
  const auto d = minimal_primes(SquarefreeIdeal(path));
  CHECK(symbolic_power_generators(d, 2).to_string() == "<x2^2*x3^2, x1*x2^2*x3, x1^2*x2^2>");
  CHECK(oracle::to_vectors(symbolic_power_generators(d, 2)) ==
        oracle::symbolic_generators(3, primes_of(d), 2));

  const auto edge = minimal_primes(SquarefreeIdeal(parse_ideal("vars x y\nx*y\n")));
  CHECK(symbolic_power_generators(edge, 3).to_string() == "<x^3*y^3>");

  const auto vars = minimal_primes(SquarefreeIdeal(parse_ideal("vars 3\nx1\nx2\nx3\n")));
  CHECK(symbolic_power_generators(vars, 2).size() == 6);
  CHECK(symbolic_power_generators(vars, 2).max_degree() == 2);
}

TEST_CASE("initial degrees of symbolic powers") {
  const auto c5 = minimal_primes(oracle::to_ideal(make_context(5), kC5));
  CHECK(alpha_symbolic(c5, 1) == 2);
  CHECK(alpha_symbolic(c5, 3) == 5);
  CHECK(alpha_symbolic(minimal_primes(monomial_star_ideal(2).ideal), 2) == 3);
}

TEST_CASE("symbolic powers and initial degrees agree with the exhaustive oracle") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + trial % 5;
    const auto ideal = oracle::to_ideal(make_context(n), oracle::random_antichain(rng, n, 1 + trial % 5, n));
    const auto d = minimal_primes(ideal);
    for (std::uint64_t m = 1; m <= 3; ++m) {
      const auto gens = symbolic_power_generators(d, m);
      const auto expected = oracle::symbolic_generators(n, primes_of(d), m);
      INFO(ideal.to_string() << " m=" << m);
      CHECK(oracle::to_vectors(gens) == expected);
      CHECK(alpha_symbolic(d, m) == gens.min_degree());
      CHECK(alpha_symbolic(d, m) == oracle::alpha_symbolic(n, primes_of(d), m));
    }
  }
}

TEST_CASE("membership in symbolic powers matches the generator sets") {
  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + trial % 4;
    const auto ideal = oracle::to_ideal(make_context(n), oracle::random_antichain(rng, n, 2 + trial % 4, n));
    const auto d = minimal_primes(ideal);
    for (std::uint64_t m = 1; m <= 4; ++m) {
      const auto gens = symbolic_power_generators(d, m);
      // every monomial with exponents up to m+1
      ExponentVector e(n, 0);
      while (true) {
        const Monomial f(d.context(), e);
        CHECK(gens.contains(f) == in_symbolic_power(f, d, m));
        std::size_t i = 0;
        while (i < n && e[i] == m + 1) e[i++] = 0;
        if (i == n) break;
        ++e[i];
      }
    }
  }
}

TEST_CASE("ordinary powers") {
  const auto ctx = make_context(std::vector<std::string>{"x", "y"});
  const auto xy = make_ideal(ctx, std::vector<ExponentVector>{{1, 1}});
  CHECK(in_ordinary_power(mono(ctx, {2, 2}), xy, 2));
  CHECK_FALSE(in_ordinary_power(mono(ctx, {2, 1}), xy, 2));
  CHECK(in_ordinary_power(mono(ctx, {0, 0}), xy, 0));

  const auto star = monomial_star_ideal(2).ideal.ideal();
  const auto& sctx = star.context();
  CHECK_FALSE(in_ordinary_power(mono(sctx, {1, 1, 1}), star, 2));
  CHECK(in_ordinary_power(mono(sctx, {2, 2, 2}), star, 3));
  CHECK(in_ordinary_power(mono(sctx, {2, 2, 2}), star, 2));
  CHECK(ordinary_power_generators(star, 2).size() == 6);
}

TEST_CASE("ordinary power membership and generators agree with the multiset oracle") {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 2 + trial % 4;
    const auto ideal = oracle::to_ideal(make_context(n), oracle::random_antichain(rng, n, 2 + trial % 4, n));
    const auto gens = oracle::to_vectors(ideal.ideal());
    for (std::uint64_t r = 1; r <= 3; ++r) {
      CHECK(oracle::to_vectors(ordinary_power_generators(ideal.ideal(), r)) == oracle::power_generators(gens, r));
      ExponentVector e(n, 0);
      while (true) {
        CHECK(in_ordinary_power(Monomial(ideal.context(), e), ideal.ideal(), r) == oracle::in_power(e, gens, r));
        std::size_t i = 0;
        while (i < n && e[i] == 3) e[i++] = 0;
        if (i == n) break;
        ++e[i];
      }
    }
  }
}

TEST_CASE("ordinary powers sit inside symbolic powers") {
  std::mt19937_64 rng(73);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t n = 2 + trial % 6;
    const auto ideal = oracle::to_ideal(make_context(n), oracle::random_antichain(rng, n, 2 + trial % 4, n));
    const auto d = minimal_primes(ideal);
    for (std::uint64_t m = 1; m <= 4; ++m) {
      const auto power = ordinary_power_generators(ideal.ideal(), m);
      for (const auto& g : power.generators()) CHECK(in_symbolic_power(g, d, m));
    }
  }
}

TEST_CASE("products and intersections") {
  const auto ctx = make_context(3);
  const auto a = make_ideal(ctx, std::vector<ExponentVector>{{1, 0, 0}, {0, 1, 0}});
  const auto b = make_ideal(ctx, std::vector<ExponentVector>{{0, 1, 0}, {0, 0, 1}});
  CHECK(ideal_product(a, b).to_string() == "<x2*x3, x2^2, x1*x3, x1*x2>");
  CHECK(ideal_intersection(a, b).to_string() == "<x2, x1*x3>");
  CHECK_THROWS_AS(ideal_product(a, make_ideal(make_context(2), std::vector<ExponentVector>{{1, 0}})),
                  ContextMismatchError);
}

TEST_CASE("containment in the monomial star") {
  const auto star = monomial_star_ideal(2);
  const auto d = minimal_primes(star.ideal);
  const auto& ideal = star.ideal.ideal();
  const auto fail = check_containment(d, ideal, 4, 4);
  CHECK_FALSE(fail.contained);
  REQUIRE(fail.witness);
  CHECK(fail.witness->to_string() == "x0^2*x1^2*x2^2");
  CHECK(fail.ratio == 1);
  CHECK(in_symbolic_power(*fail.witness, d, 4));
  CHECK_FALSE(in_ordinary_power(*fail.witness, ideal, 4));
  CHECK(check_containment(d, ideal, 3, 2).contained);
  CHECK(check_containment(d, ideal, 1, 1).contained);
  CHECK_THROWS(check_containment(d, ideal, 0, 1));
}

TEST_CASE("containment witnesses are valid on random ideals") {
  std::mt19937_64 rng(79);
  int failures = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 3 + trial % 4;
    const auto ideal = oracle::to_ideal(make_context(n), oracle::random_antichain(rng, n, 2 + trial % 5, 3));
    const auto d = minimal_primes(ideal);
    const auto gens = oracle::to_vectors(ideal.ideal());
    for (std::uint64_t m = 1; m <= 4; ++m) {
      for (std::uint64_t r = 1; r <= m; ++r) {
        const auto c = check_containment(d, ideal.ideal(), m, r);
        CHECK(c.contained == !c.witness.has_value());
        if (c.witness) {
          ++failures;
          CHECK(oracle::symbolic_generators(n, primes_of(d), m).size() > 0);
          CHECK(in_symbolic_power(*c.witness, d, m));
          CHECK_FALSE(oracle::in_power(c.witness->exponents(), gens, r));
        } else if (m <= 3) {
          for (const auto& g : oracle::symbolic_generators(n, primes_of(d), m)) CHECK(oracle::in_power(g, gens, r));
        }
      }
    }
  }
  CHECK(failures > 0);
}

TEST_CASE("symbolic binomial expansion") {
  const auto ctx = make_context(std::vector<std::string>{"x1", "x2", "y1", "y2"});
  const auto i1 = oracle::to_ideal(ctx, {{0, 1}});
  const auto i2 = oracle::to_ideal(ctx, {{2, 3}});
  const auto two = symbolic_binomial_check(i1, i2, 2);
  CHECK(two.equal);
  CHECK(two.lhs.to_string() == "<y1^2*y2^2, x1*x2*y1*y2, x1^2*x2^2>");
  const auto one = symbolic_binomial_check(i1, i2, 1);
  CHECK(one.equal);
  CHECK(one.lhs.to_string() == "<y1*y2, x1*x2>");

  const auto ctx2 = make_context(std::vector<std::string>{"x1", "x2", "x3", "x4", "x5", "y1", "y2"});
  const auto c5 = oracle::to_ideal(ctx2, kC5);
  const auto edge = oracle::to_ideal(ctx2, {{5, 6}});
  const auto mixed = symbolic_binomial_check(c5, edge, 2);
  CHECK(mixed.equal);
  const auto whole = minimal_primes(ideal_sum(c5, edge));
  CHECK(oracle::to_vectors(mixed.lhs) == oracle::symbolic_generators(7, primes_of(whole), 2));

  CHECK_THROWS_AS(symbolic_binomial_check(c5, oracle::to_ideal(ctx2, {{0, 5}}), 2), DisjointnessError);
}

TEST_CASE("adjoining a variable") {
  const auto xy = SquarefreeIdeal(parse_ideal("vars x y\nx*y\n"));
  CHECK(variable_adjunction_check(xy, 2).outcome == AdjunctionOutcome::holds);
  const auto k22 = complete_multipartite_ideal({2, 2}).ideal;
  CHECK(variable_adjunction_check(k22, 2).outcome == AdjunctionOutcome::holds);
  // squares of edge ideals without triangles are unmixed, so C5 first fails at 3
  const auto c5 = oracle::to_ideal(make_context(5), kC5);
  CHECK(variable_adjunction_check(c5, 2).outcome == AdjunctionOutcome::holds);
  const auto cube = variable_adjunction_check(c5, 3);
  CHECK(cube.outcome == AdjunctionOutcome::hypothesis_fails);
  CHECK(cube.failing_power == 3);
  // the fresh variable avoids existing names
  const auto named = SquarefreeIdeal(parse_ideal("vars y y0\ny*y0\n"));
  CHECK(variable_adjunction_check(named, 3).outcome == AdjunctionOutcome::holds);
}

TEST_CASE("subadditivity of initial degrees") {
  std::mt19937_64 rng(83);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 2 + trial % 6;
    const auto d = minimal_primes(oracle::to_ideal(make_context(n), oracle::random_antichain(rng, n, 1 + trial % 6, n)));
    std::vector<std::uint64_t> alpha(9, 0);
    for (std::uint64_t m = 1; m <= 8; ++m) alpha[m] = alpha_symbolic(d, m);
    for (std::uint64_t c = 1; c <= 7; ++c)
      for (std::uint64_t e = 1; c + e <= 8; ++e) CHECK(alpha[c + e] <= alpha[c] + alpha[e]);
  }
}

TEST_CASE("adding generators never raises symbolic initial degrees") {
  std::mt19937_64 rng(89);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 3 + trial % 5;
    auto edges = oracle::random_antichain(rng, n, 1 + trial % 4, n);
    const auto small = oracle::to_ideal(make_context(n), edges);
    auto more = edges;
    for (const auto& e : oracle::random_antichain(rng, n, 2, n)) more.push_back(e);
    const auto large = SquarefreeIdeal::make(small.context(), oracle::to_ideal(small.context(), more).generators());
    const auto ds = minimal_primes(small);
    const auto dl = minimal_primes(large);
    for (std::uint64_t m = 1; m <= 4; ++m) CHECK(alpha_symbolic(dl, m) <= alpha_symbolic(ds, m));
  }
}

TEST_CASE("resurgence windows") {
  const auto star = monomial_star_ideal(2);
  const auto d = minimal_primes(star.ideal);
  const auto est = resurgence_search(d, star.ideal.ideal(), 8, 7);
  CHECK(est.alpha_ratio == BigRational::parse("4/3"));
  CHECK(est.omega_ratio == BigRational::parse("4/3"));
  CHECK(est.lower_bound < BigRational::parse("4/3"));
  CHECK(est.lower_bound == BigRational::parse("6/5"));
  CHECK(est.certified_lower_bound == BigRational::parse("4/3"));
  bool found = false;
  for (const auto& c : est.non_containments) {
    CHECK(c.ratio < *star.expected_resurgence);
    CHECK(in_symbolic_power(*c.witness, d, c.m));
    CHECK_FALSE(in_ordinary_power(*c.witness, star.ideal.ideal(), c.r));
    found = found || (c.m == 4 && c.r == 4);
  }
  CHECK(found);

  const auto xy = SquarefreeIdeal(parse_ideal("vars x y\nx*y\n"));
  const auto ci = resurgence_search(minimal_primes(xy), xy.ideal(), 6, 6);
  CHECK(ci.non_containments.empty());
  CHECK(ci.lower_bound == 1);

  const auto lin = general_linear_ideal(3, 1, 2);
  const auto lest = resurgence_search(minimal_primes(lin.ideal), lin.ideal.ideal(), 4, 3);
  CHECK(lest.alpha_ratio == BigRational::parse("4/3"));
}

TEST_CASE("the star window agrees cell by cell with the oracle") {
  const auto star = monomial_star_ideal(2);
  const auto d = minimal_primes(star.ideal);
  const auto gens = oracle::to_vectors(star.ideal.ideal());
  const auto est = resurgence_search(d, star.ideal.ideal(), 8, 7);
  std::vector<std::pair<std::uint64_t, std::uint64_t>> expected;
  for (std::uint64_t m = 1; m <= 8; ++m)
    for (std::uint64_t r = 1; r <= std::min<std::uint64_t>(m, 7); ++r) {
      bool contained = true;
      for (const auto& g : oracle::symbolic_generators(3, primes_of(d), m)) contained = contained && oracle::in_power(g, gens, r);
      if (!contained) expected.emplace_back(m, r);
    }
  std::vector<std::pair<std::uint64_t, std::uint64_t>> got;
  for (const auto& c : est.non_containments) got.emplace_back(c.m, c.r);
  CHECK(got == expected);
  CHECK(expected.size() == 9);
}

TEST_CASE("generator caps") {
  const auto matroid = uniform_matroid_ideal(7, 3);
  const auto d = minimal_primes(matroid.ideal);
  CHECK_THROWS_AS(symbolic_power_generators(d, 4, 50), CapExceededError);
  const auto est = resurgence_search(d, matroid.ideal.ideal(), 3, 2, 50);
  CHECK_FALSE(est.skipped.empty());
}
