#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "nabt/perm_group.hpp"

namespace nabt::groups {

/// Cn acting regularly on n points.
PermGroup cyclic(std::size_t n, std::size_t element_bound = kDefaultElementBound);
/// Dihedral group of order 2n acting on the vertices of an n-gon.
PermGroup dihedral(std::size_t n, std::size_t element_bound = kDefaultElementBound);
PermGroup symmetric(std::size_t n, std::size_t element_bound = kDefaultElementBound);
PermGroup alternating(std::size_t n, std::size_t element_bound = kDefaultElementBound);
PermGroup klein_four(std::size_t element_bound = kDefaultElementBound);
/// Q8 in its regular representation on 8 points.
PermGroup quaternion(std::size_t element_bound = kDefaultElementBound);
/// G x H on disjoint point sets (H shifted past G).
PermGroup direct_product(const PermGroup& g, const PermGroup& h);

/// Looks up names such as "C6", "V4", "S3", "D4", "Q8", "A4", "D6",
/// "C2xC4", "C3xC3", "C3xS3". "Dn" denotes the dihedral group of order 2n.
std::optional<PermGroup> by_name(const std::string& name,
                                 std::size_t element_bound = kDefaultElementBound);

}  // namespace nabt::groups
