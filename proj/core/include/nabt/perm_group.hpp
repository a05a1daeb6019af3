#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <span>
#include <vector>

#include "nabt/perm.hpp"

namespace nabt {

/// Index of an element in its group's canonical element list.
using Elem = std::uint32_t;

inline constexpr std::size_t kDefaultElementBound = 5000;

/// A finite group given by generating permutations.
///
/// The element list is enumerated on first use and cached; it is sorted
/// lexicographically by image array, so the identity is always element 0.
/// Copies share the cache, and the cache is safe to fill from several
/// threads at once.
class PermGroup {
 public:
  PermGroup(std::size_t degree, std::vector<Perm> generators,
            std::size_t element_bound = kDefaultElementBound);

  static PermGroup trivial(std::size_t degree = 1,
                           std::size_t element_bound = kDefaultElementBound);

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Perm>& generators() const noexcept { return generators_; }
  std::size_t element_bound() const noexcept { return element_bound_; }

  /// Throws BoundExceeded when the closure outgrows element_bound().
  std::span<const Perm> elements() const;
  std::size_t order() const { return elements().size(); }
  const Perm& element(Elem e) const { return elements()[e]; }

  std::optional<Elem> find(const Perm& p) const;
  /// Throws InvalidArgument when `p` is not a member.
  Elem index_of(const Perm& p) const;
  bool contains(const Perm& p) const { return find(p).has_value(); }

  static constexpr Elem identity() noexcept { return 0; }
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  /// Left conjugation: g x g^-1.
  Elem conjugate(Elem g, Elem x) const { return mul(mul(g, x), inv(g)); }
  /// [a, b] = a b a^-1 b^-1.
  Elem commutator(Elem a, Elem b) const { return mul(mul(a, b), mul(inv(a), inv(b))); }
  std::size_t element_order(Elem e) const;

  /// Right multiplication by the i-th generator.
  Elem mul_generator(Elem a, std::size_t gen) const;
  /// Elements in breadth-first order over the right Cayley graph, identity first.
  std::span<const Elem> cayley_order() const;
  /// Spanning-tree parent in the Cayley graph: `e == mul_generator(parent, via)`.
  std::pair<Elem, std::size_t> cayley_parent(Elem e) const;
  /// Shortest word (generator indices, all positive) evaluating to `e`.
  std::vector<std::size_t> word_of(Elem e) const;

  std::vector<Elem> generator_elements() const;
  bool is_abelian() const;

  /// Same underlying cache (not an isomorphism or equality test).
  bool same_as(const PermGroup& other) const noexcept { return cache_ == other.cache_; }

 private:
  struct Cache;
  const Cache& table() const;
  const std::vector<Elem>* mul_table() const;

  std::size_t degree_;
  std::vector<Perm> generators_;
  std::size_t element_bound_;
  std::shared_ptr<Cache> cache_;
};

}  // namespace nabt
