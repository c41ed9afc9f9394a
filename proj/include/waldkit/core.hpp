#pragma once

// Monomials, monomial ideals and the squarefree ideal <-> hypergraph
// correspondence. Every object carries a shared, immutable VariableContext;
// algorithms only ever look at variable indices 0..n-1.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace waldkit {

class VariableContext {
public:
  /// Names must be non-empty and pairwise distinct.
  explicit VariableContext(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  bool operator==(const VariableContext& other) const = default;

private:
  std::vector<std::string> names_;
};

using ContextPtr = std::shared_ptr<const VariableContext>;

ContextPtr make_context(std::vector<std::string> names);
/// prefix + first, prefix + (first+1), ... ; `make_context(3)` gives x1 x2 x3.
ContextPtr make_context(std::size_t n, std::string_view prefix = "x", std::size_t first = 1);

bool same_context(const ContextPtr& a, const ContextPtr& b);

using Exponent = std::uint32_t;
using ExponentVector = std::vector<Exponent>;

class Monomial {
public:
  Monomial(ContextPtr context, ExponentVector exponents);

  static Monomial one(ContextPtr context);
  static Monomial from_support(ContextPtr context, std::span<const std::size_t> variables);

  const ContextPtr& context() const { return context_; }
  const ExponentVector& exponents() const { return exponents_; }
  Exponent operator[](std::size_t i) const { return exponents_[i]; }
  std::size_t size() const { return exponents_.size(); }

  std::uint64_t degree() const;
  bool is_squarefree() const;
  bool is_one() const;
  std::vector<std::size_t> support() const;

  /// e.g. "x0^2*x1^2*x2^2"; the unit monomial prints as "1".
  std::string to_string() const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.exponents_ == b.exponents_ && same_context(a.context_, b.context_);
  }
  /// Lexicographic on exponent vectors.
  friend bool operator<(const Monomial& a, const Monomial& b) {
    return a.exponents_ < b.exponents_;
  }

private:
  ContextPtr context_;
  ExponentVector exponents_;
};

/// a | b, i.e. a_i <= b_i for every i.
bool divides(const Monomial& a, const Monomial& b);
Monomial lcm(const Monomial& a, const Monomial& b);

/// A non-zero, proper monomial ideal held by its minimal generators, sorted
/// lexicographically by exponent vector.
class MonomialIdeal {
public:
  const ContextPtr& context() const { return context_; }
  const std::vector<Monomial>& generators() const { return generators_; }
  std::size_t size() const { return generators_.size(); }

  /// Membership: some generator divides f.
  bool contains(const Monomial& f) const;
  /// alpha(I): least generator degree.
  std::uint64_t min_degree() const;
  /// omega(I): largest generator degree.
  std::uint64_t max_degree() const;
  bool is_squarefree() const;
  /// Union of the generator supports.
  std::vector<std::size_t> support() const;

  std::string to_string() const;

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return same_context(a.context_, b.context_) && a.generators_ == b.generators_;
  }

private:
  friend MonomialIdeal make_ideal(ContextPtr, std::vector<Monomial>);
  MonomialIdeal(ContextPtr context, std::vector<Monomial> generators)
      : context_(std::move(context)), generators_(std::move(generators)) {}

  ContextPtr context_;
  std::vector<Monomial> generators_;
};

/// Keeps the divisibility-minimal, deduplicated subset of raw_generators.
/// Throws ZeroIdealError (empty list), UnitIdealError (generator 1) or
/// ContextMismatchError.
MonomialIdeal make_ideal(ContextPtr context, std::vector<Monomial> raw_generators);
MonomialIdeal make_ideal(ContextPtr context, std::vector<ExponentVector> raw_generators);

class SquarefreeIdeal {
public:
  /// Throws NotSquarefreeError when a generator has an exponent above 1.
  explicit SquarefreeIdeal(MonomialIdeal ideal);

  static SquarefreeIdeal make(ContextPtr context, std::vector<Monomial> raw_generators);

  const MonomialIdeal& ideal() const { return ideal_; }
  const ContextPtr& context() const { return ideal_.context(); }
  const std::vector<Monomial>& generators() const { return ideal_.generators(); }
  std::size_t size() const { return ideal_.size(); }
  std::size_t variable_count() const { return ideal_.context()->size(); }

  /// True when some generator has degree >= 2.
  bool has_nontrivial_edge() const;

  std::string to_string() const { return ideal_.to_string(); }

  friend bool operator==(const SquarefreeIdeal& a, const SquarefreeIdeal& b) = default;

private:
  MonomialIdeal ideal_;
};

struct Hypergraph {
  std::size_t vertex_count = 0;
  /// Each edge is a sorted list of vertex indices.
  std::vector<std::vector<std::size_t>> edges;

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;
};

Hypergraph to_hypergraph(const SquarefreeIdeal& ideal);
SquarefreeIdeal from_hypergraph(ContextPtr context, const Hypergraph& graph);

/// Monomial prime <x_j : j in variables>, a non-empty variable subset.
class PrimeSupport {
public:
  PrimeSupport(ContextPtr context, std::vector<std::size_t> variables);

  const ContextPtr& context() const { return context_; }
  const std::vector<std::size_t>& variables() const { return variables_; }
  std::size_t height() const { return variables_.size(); }
  bool contains(std::size_t variable) const;

  /// Product of the prime's variables.
  Monomial product() const;
  /// e.g. "(x1, x3)".
  std::string to_string() const;

  friend bool operator==(const PrimeSupport& a, const PrimeSupport& b) {
    return a.variables_ == b.variables_ && same_context(a.context_, b.context_);
  }

private:
  ContextPtr context_;
  std::vector<std::size_t> variables_;
};

/// I^vee: generated by the variable products of the minimal primes of I.
SquarefreeIdeal alexander_dual(const SquarefreeIdeal& ideal, std::span<const PrimeSupport> primes);

} // namespace waldkit
