#include "oracles.hpp"

#include "waldkit/ratlp.hpp"

#include <algorithm>
#include <functional>

namespace oracle {

namespace {

using Mask = std::uint32_t;

Mask to_mask(const Set& s) {
  Mask m = 0;
  for (auto v : s) m |= Mask{1} << v;
  return m;
}

Set to_set(Mask m, std::size_t n) {
  Set s;
  for (std::size_t v = 0; v < n; ++v)
    if (m >> v & 1) s.push_back(v);
  return s;
}

bool independent(Mask s, const std::vector<Mask>& edges) {
  return std::none_of(edges.begin(), edges.end(), [&](Mask e) { return (e & s) == e; });
}

std::vector<Mask> masks(const Family& f) {
  std::vector<Mask> out;
  for (const auto& s : f) out.push_back(to_mask(s));
  return out;
}

bool divides(const Vec& a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

bool sort_by_size(const Set& a, const Set& b) { return a.size() != b.size() ? a.size() < b.size() : a < b; }

} // namespace

Family minimal_covers(std::size_t n, const Family& edges) {
  const auto em = masks(edges);
  std::vector<Mask> covers;
  for (Mask s = 0; s < (Mask{1} << n); ++s) {
    if (std::all_of(em.begin(), em.end(), [&](Mask e) { return (e & s) != 0; })) covers.push_back(s);
  }
  Family out;
  for (auto c : covers) {
    bool minimal = std::none_of(covers.begin(), covers.end(), [&](Mask d) { return d != c && (d & c) == d; });
    if (minimal) out.push_back(to_set(c, n));
  }
  std::sort(out.begin(), out.end(), sort_by_size);
  return out;
}

namespace {

void for_each_box(std::size_t n, std::uint32_t top, const std::function<void(const Vec&)>& fn) {
  Vec v(n, 0);
  while (true) {
    fn(v);
    std::size_t i = 0;
    while (i < n && v[i] == top) v[i++] = 0;
    if (i == n) return;
    ++v[i];
  }
}

bool satisfies(const Vec& v, const Family& covers, std::uint64_t m) {
  for (const auto& c : covers) {
    std::uint64_t s = 0;
    for (auto x : c) s += v[x];
    if (s < m) return false;
  }
  return true;
}

} // namespace

std::uint64_t alpha_symbolic(std::size_t n, const Family& covers, std::uint64_t m) {
  std::uint64_t best = UINT64_MAX;
  for_each_box(n, static_cast<std::uint32_t>(m), [&](const Vec& v) {
    if (!satisfies(v, covers, m)) return;
    std::uint64_t d = 0;
    for (auto x : v) d += x;
    best = std::min(best, d);
  });
  return best;
}

std::vector<Vec> symbolic_generators(std::size_t n, const Family& covers, std::uint64_t m) {
  std::vector<Vec> all;
  for_each_box(n, static_cast<std::uint32_t>(m), [&](const Vec& v) {
    if (satisfies(v, covers, m)) all.push_back(v);
  });
  return minimalise(std::move(all));
}

std::vector<Vec> minimalise(std::vector<Vec> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Vec> out;
  for (const auto& g : gens) {
    bool minimal = std::none_of(gens.begin(), gens.end(), [&](const Vec& h) { return h != g && divides(h, g); });
    if (minimal) out.push_back(g);
  }
  return out;
}

namespace {

void for_each_multiset(std::size_t k, std::uint64_t r, const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> pick;
  const std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (pick.size() == r) {
      fn(pick);
      return;
    }
    for (std::size_t i = from; i < k; ++i) {
      pick.push_back(i);
      rec(i);
      pick.pop_back();
    }
  };
  rec(0);
}

Vec product_of(const std::vector<Vec>& gens, const std::vector<std::size_t>& pick, std::size_t n) {
  Vec p(n, 0);
  for (auto i : pick)
    for (std::size_t j = 0; j < n; ++j) p[j] += gens[i][j];
  return p;
}

} // namespace

bool in_power(const Vec& f, const std::vector<Vec>& gens, std::uint64_t r) {
  bool found = false;
  for_each_multiset(gens.size(), r, [&](const std::vector<std::size_t>& pick) {
    if (!found && divides(product_of(gens, pick, f.size()), f)) found = true;
  });
  return found;
}

std::vector<Vec> power_generators(const std::vector<Vec>& gens, std::uint64_t r) {
  std::vector<Vec> all;
  const auto n = gens.front().size();
  for_each_multiset(gens.size(), r, [&](const std::vector<std::size_t>& pick) { all.push_back(product_of(gens, pick, n)); });
  return minimalise(std::move(all));
}

std::size_t chromatic_number(std::size_t n, const Family& edges) {
  const auto em = masks(edges);
  const Mask full = (Mask{1} << n) - 1;
  std::vector<std::size_t> best(full + 1, SIZE_MAX);
  best[0] = 0;
  for (Mask s = 1; s <= full; ++s) {
    const Mask low = s & (~s + 1);
    // Colour classes containing the lowest vertex of s.
    for (Mask sub = s; sub; sub = (sub - 1) & s) {
      if (!(sub & low) || !independent(sub, em)) continue;
      if (best[s & ~sub] != SIZE_MAX) best[s] = std::min(best[s], best[s & ~sub] + 1);
    }
  }
  return best[full];
}

std::size_t clique_number(std::size_t n, const Family& edges) {
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (const auto& e : edges) adj[e[0]][e[1]] = adj[e[1]][e[0]] = true;
  std::size_t best = 0;
  for (Mask s = 0; s < (Mask{1} << n); ++s) {
    const auto vs = to_set(s, n);
    bool clique = true;
    for (std::size_t i = 0; i < vs.size() && clique; ++i)
      for (std::size_t j = i + 1; j < vs.size() && clique; ++j) clique = adj[vs[i]][vs[j]];
    if (clique) best = std::max(best, vs.size());
  }
  return best;
}

waldkit::BigRational fractional_chromatic(std::size_t n, const Family& edges) {
  const auto em = masks(edges);
  std::vector<Mask> sets;
  for (Mask s = 1; s < (Mask{1} << n); ++s)
    if (independent(s, em)) sets.push_back(s);
  // minimise the total weight on independent sets covering every vertex
  waldkit::ConstraintMatrix a(n, sets.size());
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t j = 0; j < sets.size(); ++j) a.set(v, j, sets[j] >> v & 1);
  const auto sol = waldkit::solve_lp(waldkit::LinearProgram::covering(a));
  return sol.value;
}

Family random_antichain(std::mt19937_64& rng, std::size_t n, std::size_t edges, std::size_t max_size) {
  std::uniform_int_distribution<std::size_t> size_dist(1, std::min(max_size, n));
  std::vector<Mask> picked;
  for (std::size_t k = 0; k < edges; ++k) {
    Set all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = i;
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(size_dist(rng));
    picked.push_back(to_mask(all));
  }
  std::sort(picked.begin(), picked.end());
  picked.erase(std::unique(picked.begin(), picked.end()), picked.end());
  Family out;
  for (auto e : picked) {
    if (std::none_of(picked.begin(), picked.end(), [&](Mask f) { return f != e && (f & e) == f; })) {
      out.push_back(to_set(e, n));
    }
  }
  return out;
}

Family random_graph(std::mt19937_64& rng, std::size_t n, double p) {
  std::bernoulli_distribution coin(p);
  Family out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (coin(rng)) out.push_back({i, j});
  if (out.empty()) out.push_back({0, 1});
  return out;
}

waldkit::SquarefreeIdeal to_ideal(const waldkit::ContextPtr& context, const Family& edges) {
  std::vector<waldkit::Monomial> gens;
  for (const auto& e : edges) gens.push_back(waldkit::Monomial::from_support(context, e));
  return waldkit::SquarefreeIdeal::make(context, std::move(gens));
}

Family to_family(const waldkit::SquarefreeIdeal& ideal) {
  Family out;
  for (const auto& g : ideal.generators()) out.push_back(g.support());
  return out;
}

std::vector<Vec> to_vectors(const waldkit::MonomialIdeal& ideal) {
  std::vector<Vec> out;
  for (const auto& g : ideal.generators()) out.push_back(g.exponents());
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace oracle
