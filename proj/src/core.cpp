#include "waldkit/core.hpp"

#include "waldkit/detail/exponents.hpp"
#include "waldkit/error.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace waldkit {

namespace detail {

bool graded_less(const ExponentVector& a, const ExponentVector& b) {
  const auto da = degree(a);
  const auto db = degree(b);
  if (da != db) return da < db;
  return a < b;
}

GeneratorSet minimalize(GeneratorSet gens) {
  std::sort(gens.begin(), gens.end(), graded_less);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  GeneratorSet kept;
  kept.reserve(gens.size());
  for (auto& g : gens) {
    const auto dg = degree(g);
    bool redundant = false;
    for (const auto& k : kept) {
      // kept is degree-sorted; equal-degree distinct vectors never divide
      if (degree(k) >= dg) break;
      if (divides(k, g)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) kept.push_back(std::move(g));
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

GeneratorSet unit_generators(std::size_t n) { return {ExponentVector(n, 0)}; }

} // namespace detail

VariableContext::VariableContext(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) {
    throw std::invalid_argument("a variable context needs at least one variable");
  }
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw std::invalid_argument("empty variable name");
    if (!seen.insert(n).second) throw std::invalid_argument("duplicate variable name '" + n + "'");
  }
}

std::optional<std::size_t> VariableContext::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

ContextPtr make_context(std::vector<std::string> names) {
  return std::make_shared<const VariableContext>(std::move(names));
}

ContextPtr make_context(std::size_t n, std::string_view prefix, std::size_t first) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::string(prefix) + std::to_string(first + i));
  return make_context(std::move(names));
}

bool same_context(const ContextPtr& a, const ContextPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

// ---------------------------------------------------------------------------

Monomial::Monomial(ContextPtr context, ExponentVector exponents)
    : context_(std::move(context)), exponents_(std::move(exponents)) {
  if (!context_) throw std::invalid_argument("monomial without a variable context");
  if (exponents_.size() != context_->size()) {
    throw std::invalid_argument("exponent vector length " + std::to_string(exponents_.size()) +
                                " does not match " + std::to_string(context_->size()) +
                                " variables");
  }
}

Monomial Monomial::one(ContextPtr context) {
  const auto n = context->size();
  return Monomial(std::move(context), ExponentVector(n, 0));
}

Monomial Monomial::from_support(ContextPtr context, std::span<const std::size_t> variables) {
  ExponentVector e(context->size(), 0);
  for (auto v : variables) e.at(v) = 1;
  return Monomial(std::move(context), std::move(e));
}

std::uint64_t Monomial::degree() const { return detail::degree(exponents_); }

bool Monomial::is_squarefree() const {
  return std::all_of(exponents_.begin(), exponents_.end(), [](Exponent e) { return e <= 1; });
}

bool Monomial::is_one() const {
  return std::all_of(exponents_.begin(), exponents_.end(), [](Exponent e) { return e == 0; });
}

std::vector<std::size_t> Monomial::support() const {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] != 0) s.push_back(i);
  }
  return s;
}

std::string Monomial::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += context_->name(i);
    if (exponents_[i] > 1) out += '^' + std::to_string(exponents_[i]);
  }
  return out.empty() ? "1" : out;
}

namespace {

void require_same_context(const ContextPtr& a, const ContextPtr& b) {
  if (!same_context(a, b)) throw ContextMismatchError("monomials live in different variable contexts");
}

} // namespace

Monomial operator*(const Monomial& a, const Monomial& b) {
  require_same_context(a.context_, b.context_);
  return Monomial(a.context_, detail::product(a.exponents_, b.exponents_));
}

bool divides(const Monomial& a, const Monomial& b) {
  require_same_context(a.context(), b.context());
  return detail::divides(a.exponents(), b.exponents());
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  require_same_context(a.context(), b.context());
  return Monomial(a.context(), detail::lcm(a.exponents(), b.exponents()));
}

// ---------------------------------------------------------------------------

MonomialIdeal make_ideal(ContextPtr context, std::vector<Monomial> raw_generators) {
  if (raw_generators.empty()) throw ZeroIdealError();
  detail::GeneratorSet gens;
  gens.reserve(raw_generators.size());
  for (const auto& m : raw_generators) {
    if (!same_context(m.context(), context)) {
      throw ContextMismatchError("generator " + m.to_string() + " is not in the ideal's context");
    }
    if (m.is_one()) throw UnitIdealError();
    gens.push_back(m.exponents());
  }
  gens = detail::minimalize(std::move(gens));
  std::vector<Monomial> out;
  out.reserve(gens.size());
  for (auto& g : gens) out.emplace_back(context, std::move(g));
  return MonomialIdeal(std::move(context), std::move(out));
}

MonomialIdeal make_ideal(ContextPtr context, std::vector<ExponentVector> raw_generators) {
  std::vector<Monomial> monomials;
  monomials.reserve(raw_generators.size());
  for (auto& g : raw_generators) monomials.emplace_back(context, std::move(g));
  return make_ideal(std::move(context), std::move(monomials));
}

bool MonomialIdeal::contains(const Monomial& f) const {
  require_same_context(context_, f.context());
  return std::any_of(generators_.begin(), generators_.end(),
                     [&](const Monomial& g) { return detail::divides(g.exponents(), f.exponents()); });
}

std::uint64_t MonomialIdeal::min_degree() const {
  std::uint64_t best = generators_.front().degree();
  for (const auto& g : generators_) best = std::min(best, g.degree());
  return best;
}

std::uint64_t MonomialIdeal::max_degree() const {
  std::uint64_t best = 0;
  for (const auto& g : generators_) best = std::max(best, g.degree());
  return best;
}

bool MonomialIdeal::is_squarefree() const {
  return std::all_of(generators_.begin(), generators_.end(),
                     [](const Monomial& g) { return g.is_squarefree(); });
}

std::vector<std::size_t> MonomialIdeal::support() const {
  std::vector<bool> used(context_->size(), false);
  for (const auto& g : generators_) {
    for (auto v : g.support()) used[v] = true;
  }
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < used.size(); ++i) {
    if (used[i]) s.push_back(i);
  }
  return s;
}

std::string MonomialIdeal::to_string() const {
  std::string out = "<";
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (i) out += ", ";
    out += generators_[i].to_string();
  }
  return out + ">";
}

// ---------------------------------------------------------------------------

SquarefreeIdeal::SquarefreeIdeal(MonomialIdeal ideal) : ideal_(std::move(ideal)) {
  for (const auto& g : ideal_.generators()) {
    if (!g.is_squarefree()) throw NotSquarefreeError("generator " + g.to_string() + " is not squarefree");
  }
}

SquarefreeIdeal SquarefreeIdeal::make(ContextPtr context, std::vector<Monomial> raw_generators) {
  return SquarefreeIdeal(make_ideal(std::move(context), std::move(raw_generators)));
}

bool SquarefreeIdeal::has_nontrivial_edge() const {
  return std::any_of(generators().begin(), generators().end(),
                     [](const Monomial& g) { return g.degree() >= 2; });
}

Hypergraph to_hypergraph(const SquarefreeIdeal& ideal) {
  Hypergraph h;
  h.vertex_count = ideal.variable_count();
  for (const auto& g : ideal.generators()) h.edges.push_back(g.support());
  return h;
}

SquarefreeIdeal from_hypergraph(ContextPtr context, const Hypergraph& graph) {
  if (graph.vertex_count != context->size()) {
    throw ContextMismatchError("hypergraph vertex count does not match the context");
  }
  std::vector<Monomial> gens;
  for (const auto& e : graph.edges) {
    if (e.empty()) throw UnitIdealError();
    gens.push_back(Monomial::from_support(context, e));
  }
  return SquarefreeIdeal::make(std::move(context), std::move(gens));
}

// ---------------------------------------------------------------------------

PrimeSupport::PrimeSupport(ContextPtr context, std::vector<std::size_t> variables)
    : context_(std::move(context)), variables_(std::move(variables)) {
  std::sort(variables_.begin(), variables_.end());
  variables_.erase(std::unique(variables_.begin(), variables_.end()), variables_.end());
  if (variables_.empty()) throw std::invalid_argument("a monomial prime needs at least one variable");
  if (variables_.back() >= context_->size()) throw std::out_of_range("prime variable index out of range");
}

bool PrimeSupport::contains(std::size_t variable) const {
  return std::binary_search(variables_.begin(), variables_.end(), variable);
}

Monomial PrimeSupport::product() const { return Monomial::from_support(context_, variables_); }

std::string PrimeSupport::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    if (i) out += ", ";
    out += context_->name(variables_[i]);
  }
  return out + ")";
}

SquarefreeIdeal alexander_dual(const SquarefreeIdeal& ideal, std::span<const PrimeSupport> primes) {
  std::vector<Monomial> gens;
  gens.reserve(primes.size());
  for (const auto& p : primes) {
    require_same_context(p.context(), ideal.context());
    gens.push_back(p.product());
  }
  return SquarefreeIdeal::make(ideal.context(), std::move(gens));
}

} // namespace waldkit
