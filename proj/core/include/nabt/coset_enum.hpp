#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "nabt/hom.hpp"
#include "nabt/perm_group.hpp"
#include "nabt/presentation.hpp"

namespace nabt {

struct EnumLimits {
  /// Total coset definitions allowed (live or later merged away).
  std::size_t max_cosets = 1'000'000;
  /// Cap on the pending deduction stack; overflowing deductions are
  /// dropped, which only costs speed because every live coset is still
  /// scanned against every relator.
  std::optional<std::size_t> max_deductions;
};

/// A compacted coset table. Column 2i holds generator i, column 2i+1 its
/// inverse; coset 0 is the subgroup itself.
class CosetTable {
 public:
  CosetTable(std::size_t generator_count, std::size_t cosets, std::vector<std::uint32_t> entries,
             bool over_trivial_subgroup, std::size_t cosets_defined);

  std::size_t generator_count() const noexcept { return generators_; }
  std::size_t coset_count() const noexcept { return cosets_; }
  std::size_t column_count() const noexcept { return 2 * generators_; }
  std::uint32_t operator()(std::size_t coset, std::size_t column) const {
    return entries_[coset * column_count() + column];
  }
  /// Image of `coset` under generator `gen` raised to `exp` (+1 or -1).
  std::uint32_t act(std::size_t coset, std::uint32_t gen, int exp) const {
    return (*this)(coset, 2 * gen + (exp < 0 ? 1 : 0));
  }
  bool over_trivial_subgroup() const noexcept { return trivial_subgroup_; }
  std::size_t cosets_defined() const noexcept { return defined_; }

  /// Coset reached from `coset` by reading `w`.
  std::uint32_t trace(std::size_t coset, const Word& w) const;

  friend bool operator==(const CosetTable&, const CosetTable&) = default;

 private:
  std::size_t generators_;
  std::size_t cosets_;
  std::vector<std::uint32_t> entries_;
  bool trivial_subgroup_;
  std::size_t defined_;
};

/// Coset enumeration of `p` over the subgroup generated by `subgroup`.
/// HLT-style relator scanning with deduction processing and union-find
/// coincidence handling. Throws LimitExceeded when the definition budget
/// runs out.
CosetTable todd_coxeter(const FpGroup& p, const std::vector<Word>& subgroup = {},
                        const EnumLimits& limits = {});

/// Every column is a bijection and every relator closes at every coset.
bool audit_coset_table(const CosetTable& t, const FpGroup& p);

/// The presented group as a permutation group on cosets of the trivial
/// subgroup, with generator i of `p` sent to element `generator_images[i]`.
struct FpRealization {
  PermGroup group;
  std::vector<Elem> generator_images;
};

/// Throws IncompleteTable unless `t` enumerates the trivial subgroup;
/// throws InternalError if a relator of `p` fails in the result.
FpRealization perm_rep(const CosetTable& t, const FpGroup& p,
                       std::size_t element_bound = kDefaultElementBound);

struct FpOrder {
  std::optional<std::uint64_t> order;  // empty when the limits ran out
  std::size_t cosets_defined = 0;
};

FpOrder order_of_fp(const FpGroup& p, const EnumLimits& limits = {});

}  // namespace nabt
