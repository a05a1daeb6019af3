#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nabt/corpus.hpp"
#include "nabt/homology.hpp"
#include "nabt/report.hpp"
#include "nabt/tensor.hpp"

namespace nabt {

struct VerifyConfig {
  TensorLimits limits;
  std::size_t bar_bound = kDefaultBarBound;
  /// Largest |G| for the suites quantified over pairs (G, H normal in G).
  std::size_t pair_bound = 12;
};

/// G (x) H and H (x) H for H normal in G with conjugation actions, and the
/// map i: H (x) H -> G (x) H on symbols.
struct NormalPairTensors {
  Subgroup h;
  TensorGroup gh;
  TensorGroup hh;
  std::optional<GroupHom> i;
  /// Set when i fails to be well defined.
  std::string i_error;
};

NormalPairTensors normal_pair_tensors(const Subgroup& h, const TensorLimits& limits = {});

/// Suite names in canonical order.
const std::vector<std::string>& suite_names();

VerificationReport verify_compatibility(const CorpusActionPair& pair);
VerificationReport verify_tensor_product(const std::string& name, const MutualActions& ma, const VerifyConfig& config);
VerificationReport verify_tensor_square(const std::string& name, const PermGroup& g, const VerifyConfig& config);
VerificationReport verify_bjr_identities(const std::string& name, const NormalPairTensors& p);
VerificationReport verify_normal_abelian_quotient(const std::string& name, const NormalPairTensors& p);
VerificationReport verify_lemma26_sequence(const std::string& name, const Subgroup& g, const Subgroup& h,
                                           const TensorLimits& limits = {});
VerificationReport verify_circ_kernels(const std::string& name, const MutualActions& ma);
VerificationReport verify_schur_epimorphism(const CorpusExtension& e, const TensorLimits& limits = {});
VerificationReport verify_schur_classes(const std::string& name, const PermGroup& g);
VerificationReport verify_derivative_lcs(const std::string& name, const PermGroup& g);

/// Runs the selected suites (all when empty) over every applicable corpus
/// item. Throws InvalidArgument for an unknown suite name; LimitExceeded and
/// BoundExceeded propagate, other library errors become failed cases.
VerificationReport run_corpus(const Corpus& corpus, const std::vector<std::string>& suites,
                              const VerifyConfig& config = {});

}  // namespace nabt
