#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace nabt {

using Point = std::uint32_t;

/// A permutation of {0, ..., degree-1}, stored as its image array.
///
/// Products compose left to right: `(p * q)(x) == q(p(x))`. With this
/// convention the right regular action and coset-table columns are
/// homomorphisms rather than anti-homomorphisms.
class Perm {
 public:
  Perm() = default;
  /// Throws InvalidArgument unless `images` is a bijection.
  explicit Perm(std::vector<Point> images);

  static Perm identity(std::size_t degree);
  /// Builds a permutation from disjoint cycles, e.g. {{0, 1}, {2, 3, 4}}.
  static Perm from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator()(Point x) const { return images_[x]; }
  std::span<const Point> images() const noexcept { return images_; }

  Perm inverse() const;
  bool is_identity() const noexcept;
  std::size_t order() const;

  /// Disjoint-cycle notation, identity rendered as "()".
  std::string to_cycle_string() const;

  friend Perm operator*(const Perm& a, const Perm& b);
  friend bool operator==(const Perm&, const Perm&) = default;
  friend std::strong_ordering operator<=>(const Perm& a, const Perm& b) {
    return a.images_ <=> b.images_;
  }

 private:
  std::vector<Point> images_;
};

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept;
};

}  // namespace nabt
