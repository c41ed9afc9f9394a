#include "waldkit/families.hpp"

#include "waldkit/decomposition.hpp"

#include <charconv>
#include <stdexcept>

namespace waldkit {

namespace {

std::vector<std::string> indexed_names(std::size_t count, std::size_t first, const std::string& prefix = "x") {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < count; ++i) names.push_back(prefix + std::to_string(first + i));
  return names;
}

SquarefreeIdeal from_edges(const ContextPtr& context, const std::vector<std::vector<std::size_t>>& edges) {
  std::vector<Monomial> gens;
  for (const auto& e : edges) gens.push_back(Monomial::from_support(context, e));
  return SquarefreeIdeal::make(context, std::move(gens));
}

bool cycle_adjacent(std::size_t i, std::size_t j, std::size_t n) {
  const auto d = i > j ? i - j : j - i;
  return d == 1 || d == n - 1;
}

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

std::size_t to_size(const std::string& word) {
  std::size_t v = 0;
  const auto* end = word.data() + word.size();
  auto [ptr, ec] = std::from_chars(word.data(), end, v);
  if (ec != std::errc() || ptr != end || word.empty()) {
    throw std::invalid_argument("expected a non-negative integer, got '" + word + "'");
  }
  return v;
}

std::vector<std::size_t> to_sizes(const std::string& word) {
  std::vector<std::size_t> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = word.find(',', start);
    out.push_back(to_size(word.substr(start, comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

} // namespace

FamilyInstance cycle_ideal(std::size_t n) {
  require(n >= 3, "cycle needs n >= 3");
  const auto context = make_context(n);
  std::vector<std::vector<std::size_t>> edges;
  for (std::size_t i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  const BigRational expected = n % 2 == 1 ? BigRational(n) / BigRational((n - 1) / 2 + 1) : BigRational(2);
  return {"cycle " + std::to_string(n), from_edges(context, edges), expected, std::nullopt,
          n % 2 == 1 ? "odd cycle C_{2k+1}: (2k+1)/(k+1)" : "even cycle, bipartite: 2"};
}

FamilyInstance complete_multipartite_ideal(const std::vector<std::size_t>& parts) {
  require(parts.size() >= 2, "multipartite needs at least two parts");
  for (auto p : parts) require(p >= 1, "multipartite parts must be non-empty");
  std::vector<std::string> names;
  std::vector<std::size_t> owner;
  static const char* letters[] = {"x", "y", "z", "u", "v", "w"};
  const bool lettered = parts.size() <= 6;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    for (std::size_t i = 0; i < parts[k]; ++i) {
      names.push_back(lettered ? letters[k] + std::to_string(i + 1) : "x" + std::to_string(names.size() + 1));
      owner.push_back(k);
    }
  }
  std::vector<std::vector<std::size_t>> edges;
  for (std::size_t a = 0; a < owner.size(); ++a)
    for (std::size_t b = a + 1; b < owner.size(); ++b)
      if (owner[a] != owner[b]) edges.push_back({a, b});
  std::string label = "multipartite ";
  for (std::size_t k = 0; k < parts.size(); ++k) label += (k ? "," : "") + std::to_string(parts[k]);
  const auto k = parts.size();
  return {label, from_edges(make_context(std::move(names)), edges), BigRational(k) / BigRational(k - 1), std::nullopt,
          "complete k-partite graph: k/(k-1)"};
}

FamilyInstance cycle_complement_ideal(std::size_t n) {
  require(n >= 5 && n % 2 == 1, "cycle complement needs odd n >= 5");
  const auto context = make_context(n);
  std::vector<std::vector<std::size_t>> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!cycle_adjacent(i, j, n)) edges.push_back({i, j});
  return {"complement " + std::to_string(n), from_edges(context, edges), BigRational(n) / BigRational(n - 2),
          std::nullopt, "complement of the odd cycle C_{2k+1}: (2k+1)/(2k-1)"};
}

FamilyInstance bipyramid_ideal(std::size_t n) {
  require(n >= 4, "bipyramid needs n >= 4");
  auto names = indexed_names(n, 1);
  names.push_back("y");
  names.push_back("z");
  const auto context = make_context(std::move(names));
  std::vector<std::vector<std::size_t>> edges{{n, n + 1}};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!cycle_adjacent(i, j, n)) edges.push_back({i, j});
  return {"bipyramid " + std::to_string(n), from_edges(context, edges), BigRational(n) / BigRational(n - 2),
          std::nullopt, "bipyramid over the n-gon, <yz> + I(C_n complement): n/(n-2)"};
}

FamilyInstance uniform_matroid_ideal(std::size_t vertices, std::size_t c) {
  require(vertices >= 2, "matroid needs at least two vertices");
  const auto n = vertices - 1;
  require(c >= 1 && c <= n, "matroid needs 1 <= c <= vertices - 1");
  const auto context = make_context(vertices, "x", 0);
  const auto degree = n + 2 - c;
  std::vector<Monomial> gens;
  std::vector<std::size_t> pick(degree);
  // Lexicographic walk over the degree-subsets of {0..n}.
  for (std::size_t i = 0; i < degree; ++i) pick[i] = i;
  while (true) {
    gens.push_back(Monomial::from_support(context, pick));
    std::size_t i = degree;
    while (i > 0 && pick[i - 1] == vertices - degree + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < degree; ++j) pick[j] = pick[j - 1] + 1;
  }
  return {"matroid " + std::to_string(vertices) + " " + std::to_string(c),
          SquarefreeIdeal::make(context, std::move(gens)), BigRational(vertices) / BigRational(c), std::nullopt,
          "uniform matroid I_{n+1,c}: (n+1)/c"};
}

FamilyInstance monomial_star_ideal(std::size_t n) {
  require(n >= 2, "star needs n >= 2");
  const auto context = make_context(n + 1, "x", 0);
  std::vector<std::vector<std::size_t>> edges;
  for (std::size_t i = 0; i < n; ++i) edges.push_back({i, n});
  std::vector<std::size_t> base(n);
  for (std::size_t i = 0; i < n; ++i) base[i] = i;
  edges.push_back(base);
  const BigRational nn(n * n);
  return {"star " + std::to_string(n), from_edges(context, edges), BigRational(2 * n - 1) / BigRational(n),
          nn / BigRational(n * n - n + 1), "monomial star I_Z: (2n-1)/n, resurgence n^2/(n^2-n+1)"};
}

FamilyInstance general_linear_ideal(std::size_t s, std::size_t t, std::size_t n) {
  require(s >= 1 && t >= 1, "linear needs s, t >= 1");
  require(s * t <= n + 1, "linear needs st <= n+1");
  require(t <= n, "linear needs t <= n");
  std::vector<std::vector<std::size_t>> primes;
  for (std::size_t i = 0; i < s; ++i) {
    std::vector<std::size_t> p;
    for (std::size_t v = 0; v <= n; ++v)
      if (v < i * t || v >= (i + 1) * t) p.push_back(v);
    primes.push_back(std::move(p));
  }
  const auto context = make_context(n + 1, "x", 0);
  const SquarefreeIdeal ideal = from_edges(context, minimal_transversals(n + 1, primes));
  const BigRational alpha_hat = s * t < n + 1 ? BigRational(1) : BigRational(n + 1) / BigRational(n + 1 - t);
  const BigRational rho = s >= 2 ? BigRational(2 * (s - 1)) / BigRational(s) : BigRational(1);
  return {"linear " + std::to_string(s) + " " + std::to_string(t) + " " + std::to_string(n), ideal, alpha_hat, rho,
          "s general linear subvarieties of dimension t-1 in P^n: 1 or (n+1)/(n+1-t), resurgence 2(s-1)/s"};
}

FamilyInstance family_from_spec(const std::vector<std::string>& words) {
  require(!words.empty(), "missing family name");
  const auto& name = words.front();
  const auto arity = [&](std::size_t k) {
    require(words.size() == k + 1, "family " + name + " takes " + std::to_string(k) + " parameter(s)");
  };
  if (name == "cycle") {
    arity(1);
    return cycle_ideal(to_size(words[1]));
  }
  if (name == "multipartite") {
    arity(1);
    return complete_multipartite_ideal(to_sizes(words[1]));
  }
  if (name == "complement") {
    arity(1);
    return cycle_complement_ideal(to_size(words[1]));
  }
  if (name == "bipyramid") {
    arity(1);
    return bipyramid_ideal(to_size(words[1]));
  }
  if (name == "matroid") {
    arity(2);
    return uniform_matroid_ideal(to_size(words[1]), to_size(words[2]));
  }
  if (name == "star") {
    arity(1);
    return monomial_star_ideal(to_size(words[1]));
  }
  if (name == "linear") {
    arity(3);
    return general_linear_ideal(to_size(words[1]), to_size(words[2]), to_size(words[3]));
  }
  throw std::invalid_argument("unknown family '" + name + "'");
}

std::vector<FamilyUsage> family_names() {
  return {
      {"cycle", "n", "edge ideal of the n-cycle"},
      {"multipartite", "a,b,...", "edge ideal of a complete multipartite graph"},
      {"complement", "n", "edge ideal of the complement of an odd cycle"},
      {"bipyramid", "n", "<yz> plus the complement of the n-gon"},
      {"matroid", "v c", "uniform matroid ideal on v vertices"},
      {"star", "n", "monomial star"},
      {"linear", "s t n", "s general linear subvarieties of dimension t-1 in P^n"},
  };
}

} // namespace waldkit
