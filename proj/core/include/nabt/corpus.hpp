#pragma once

#include <string>
#include <vector>

#include "nabt/action.hpp"
#include "nabt/subgroup.hpp"

namespace nabt {

struct CorpusGroup {
  std::string name;
  PermGroup group;
};

/// 1 -> kernel -> group -> group / kernel -> 1 with central kernel.
struct CorpusExtension {
  std::string name;
  PermGroup group;
  Subgroup kernel;
};

struct CorpusActionPair {
  std::string name;
  Action g_on_h;
  Action h_on_g;
  bool expect_compatible = true;
};

/// Two normal subgroups of a common group K.
struct CorpusTriple {
  std::string name;
  Subgroup g;
  Subgroup h;
};

struct Corpus {
  std::vector<CorpusGroup> groups;
  std::vector<CorpusExtension> extensions;
  std::vector<CorpusActionPair> action_pairs;
  std::vector<CorpusTriple> triples;

  /// C2, C3, C4, C5, C6, C8, C12, V4, C2xC4, S3, D4, Q8, A4, D6, C3xC3 with
  /// their central extensions, action pairs and normal-subgroup triples.
  static Corpus standard();

  const CorpusGroup* find(std::string_view name) const;
  bool empty() const {
    return groups.empty() && extensions.empty() && action_pairs.empty() && triples.empty();
  }
};

/// Throws NotCentral unless `kernel` lies in the center of `group`.
CorpusExtension make_extension(std::string name, const PermGroup& group, const Subgroup& kernel);

/// Label for a subgroup: "<name>" for the whole group, "1" for the trivial
/// subgroup, else "N<k>" with k its position in normal_subgroups() or
/// "S<order>" for non-normal subgroups.
std::string subgroup_label(const std::string& group_name, const Subgroup& s);

}  // namespace nabt
