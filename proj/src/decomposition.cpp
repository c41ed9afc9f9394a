#include "waldkit/decomposition.hpp"

#include "waldkit/error.hpp"

#include <boost/dynamic_bitset.hpp>

#include <algorithm>

namespace waldkit {

namespace {

using Bits = boost::dynamic_bitset<std::uint64_t>;

class TransversalSearch {
public:
  TransversalSearch(std::size_t n, const std::vector<std::vector<std::size_t>>& sets, std::size_t cap)
      : n_(n), cap_(cap) {
    for (const auto& s : sets) {
      Bits b(n);
      for (auto v : s) b.set(v);
      edges_.push_back(std::move(b));
    }
  }

  std::vector<Bits> run() {
    if (std::any_of(edges_.begin(), edges_.end(), [](const Bits& e) { return e.none(); })) {
      return {}; // an empty set cannot be hit
    }
    Bits cover(n_);
    Bits excluded(n_);
    search(cover, excluded);
    return std::move(found_);
  }

private:
  // Every vertex of the cover still owns an edge that no other cover vertex hits.
  bool every_vertex_has_private_edge(const Bits& cover) const {
    Bits owning(n_);
    for (const auto& e : edges_) {
      const Bits hit = e & cover;
      if (hit.count() == 1) owning.set(hit.find_first());
    }
    return cover.is_subset_of(owning);
  }

  void search(Bits& cover, const Bits& excluded) {
    const Bits* open = nullptr;
    for (const auto& e : edges_) {
      if (!e.intersects(cover)) {
        open = &e;
        break;
      }
    }
    if (open == nullptr) {
      if (every_vertex_has_private_edge(cover)) {
        found_.push_back(cover);
        if (found_.size() > cap_) {
          throw CapExceededError("more than " + std::to_string(cap_) +
                                 " minimal primes; raise the cap to continue");
        }
      }
      return;
    }
    // Branch i takes the i-th vertex of the open edge and forbids the earlier
    // ones, so each cover is produced at most once.
    Bits local_excluded = excluded;
    for (auto v = open->find_first(); v != Bits::npos; v = open->find_next(v)) {
      if (local_excluded.test(v)) continue;
      cover.set(v);
      if (every_vertex_has_private_edge(cover)) search(cover, local_excluded);
      cover.reset(v);
      local_excluded.set(v);
    }
  }

  std::size_t n_;
  std::size_t cap_;
  std::vector<Bits> edges_;
  std::vector<Bits> found_;
};

std::vector<std::size_t> to_indices(const Bits& b) {
  std::vector<std::size_t> out;
  for (auto v = b.find_first(); v != Bits::npos; v = b.find_next(v)) out.push_back(v);
  return out;
}

bool size_then_lex(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

} // namespace

std::vector<std::vector<std::size_t>> minimal_transversals(std::size_t n,
                                                           const std::vector<std::vector<std::size_t>>& sets,
                                                           std::size_t cap) {
  TransversalSearch search(n, sets, cap);
  std::vector<std::vector<std::size_t>> out;
  for (const auto& b : search.run()) out.push_back(to_indices(b));
  std::sort(out.begin(), out.end(), size_then_lex);
  return out;
}

Decomposition minimal_primes(const SquarefreeIdeal& ideal, std::size_t max_primes) {
  const auto h = to_hypergraph(ideal);
  std::vector<PrimeSupport> primes;
  for (auto& cover : minimal_transversals(h.vertex_count, h.edges, max_primes)) {
    primes.emplace_back(ideal.context(), std::move(cover));
  }
  return Decomposition(ideal, std::move(primes));
}

std::vector<std::vector<std::size_t>> maximal_independent_sets(const Decomposition& d) {
  const auto n = d.context()->size();
  std::vector<std::vector<std::size_t>> out;
  out.reserve(d.size());
  for (const auto& p : d.primes()) {
    std::vector<std::size_t> w;
    for (std::size_t v = 0; v < n; ++v) {
      if (!p.contains(v)) w.push_back(v);
    }
    out.push_back(std::move(w));
  }
  return out;
}

std::vector<std::vector<std::size_t>> maximal_independent_sets(const SquarefreeIdeal& ideal) {
  return maximal_independent_sets(minimal_primes(ideal));
}

std::size_t big_height(const Decomposition& d) {
  std::size_t e = 0;
  for (const auto& p : d.primes()) e = std::max(e, p.height());
  return e;
}

ConstraintMatrix constraint_matrix(const Decomposition& d) {
  ConstraintMatrix a(d.size(), d.context()->size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (auto v : d.primes()[i].variables()) a.set(i, v, true);
  }
  return a;
}

ConstraintMatrix independence_matrix(const Decomposition& d) {
  const auto sets = maximal_independent_sets(d);
  ConstraintMatrix b(d.context()->size(), sets.size());
  for (std::size_t j = 0; j < sets.size(); ++j) {
    for (auto v : sets[j]) b.set(v, j, true);
  }
  return b;
}

} // namespace waldkit
