#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "nabt/action.hpp"
#include "nabt/errors.hpp"
#include "nabt/presentation.hpp"
#include "nabt/smith.hpp"
#include "nabt/tensor.hpp"

namespace nabt::cli {

/// Malformed DSL text; positions are 1-based.
class ParseError : public InvalidArgument {
 public:
  ParseError(std::size_t line, std::size_t column, std::string expectation);
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& expectation() const noexcept { return expectation_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string expectation_;
};

struct PermSpec {
  std::size_t degree = 1;
  /// Generators, each a product of cycles on 0-based points.
  std::vector<std::vector<std::vector<Point>>> generators;
};

struct CorpusSpec {
  std::string name;
};

struct GroupSpec {
  std::string text;
  std::variant<PermSpec, FpGroup, CorpusSpec> form;
};

/// `perm: (0 1)(2 3), (0 2)` | `fp: <a,b | a^2, b^3, (a*b)^2>` | `corpus: Q8`.
GroupSpec parse_group_spec(const std::string& text);

/// A group spec resolved to a permutation group.
struct ResolvedGroup {
  GroupSpec spec;
  PermGroup group;
  /// Set for fp-form input.
  std::optional<std::size_t> cosets_defined;
};

/// fp-form groups are enumerated over the trivial subgroup and replaced by
/// their regular permutation representation.
ResolvedGroup resolve_group(const GroupSpec& spec, const TensorLimits& limits);

/// `trivial` | `conjugation` | `explicit: <images> ; <images> ...` where each
/// `<images>` lists, for one actor generator, the images of the target
/// generators as comma-separated cycle products.
struct ActionSpec {
  enum class Mode { trivial, conjugation, explicit_images };
  Mode mode = Mode::conjugation;
  std::vector<std::vector<PermSpec>> images;
  std::string text;
};

ActionSpec parse_action_spec(const std::string& text);

/// Rows separated by `/`, entries by `,`; e.g. `-1` or `0,1/1,0`.
IntMatrix parse_matrix(const std::string& text);

/// Builds both actions. Conjugation needs a common degree; G and H are then
/// taken as subgroups of the group they generate together. Returns the
/// actions over the groups actually used.
MutualActions build_mutual(const PermGroup& g, const PermGroup& h, const ActionSpec& gh, const ActionSpec& hg,
                           std::size_t element_bound);

/// Embeds `sub` into `ambient` (same degree). Throws InvalidArgument if
/// some element of `sub` is not in `ambient`.
Subgroup embed(const PermGroup& ambient, const PermGroup& sub);

}  // namespace nabt::cli
