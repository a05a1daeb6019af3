#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "nabt/perm_group.hpp"

namespace nabt {

struct Letter {
  std::uint32_t gen;
  std::int8_t exp;  // +1 or -1
  friend bool operator==(const Letter&, const Letter&) = default;
};

/// A word in the free group on indexed generators.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  /// x_gen^power expanded into |power| letters.
  static Word power(std::uint32_t gen, int power);

  std::span<const Letter> letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  Word inverse() const;
  /// Cancels adjacent x x^-1 pairs until none remain.
  Word free_reduced() const;
  /// Free reduction followed by cancellation across the ends.
  Word cyclically_reduced() const;

  Word& operator*=(const Word& rhs);
  friend Word operator*(Word lhs, const Word& rhs) { return lhs *= rhs; }
  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

/// Generators and relators of a finitely presented group.
class FpGroup {
 public:
  FpGroup() = default;
  /// Throws InvalidArgument if a relator mentions an undeclared generator.
  FpGroup(std::vector<std::string> generator_names, std::vector<Word> relators);

  std::size_t generator_count() const noexcept { return names_.size(); }
  const std::vector<std::string>& generator_names() const noexcept { return names_; }
  const std::vector<Word>& relators() const noexcept { return relators_; }

  std::string word_to_string(const Word& w) const;
  std::string to_string() const;

 private:
  std::vector<std::string> names_;
  std::vector<Word> relators_;
};

/// Evaluates `w` in `group`, generator i mapping to `images[i]`.
Elem evaluate(const Word& w, const PermGroup& group, std::span<const Elem> images);

/// Index of the first relator of `p` that does not evaluate to the identity
/// under `images`, or -1 when every relator holds.
std::ptrdiff_t first_failing_relator(const FpGroup& p, const PermGroup& group,
                                     std::span<const Elem> images);

}  // namespace nabt
