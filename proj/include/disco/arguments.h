#ifndef DISCO_ARGUMENTS_H_
#define DISCO_ARGUMENTS_H_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "disco/connective.h"
#include "disco/corpus.h"
#include "disco/decision_tree.h"
#include "disco/tree.h"

namespace disco {

enum class ConstituentLabel { kArg1Part, kArg2Part, kNone };

const char* ConstituentLabelName(ConstituentLabel label);
// Throws Error(kModel) for anything but the three label names.
ConstituentLabel ParseConstituentLabel(const std::string& name);

inline constexpr const char* kNodeFeatureNames[] = {"node_path", "node_context",
                                                    "node_position"};

struct NodeFeatureVector {
  ConnectiveFeatureVector connective;
  std::string node_path;
  std::string node_context;
  std::string node_position;  // "left" or "right"

  // All nine features by name.
  FeatureMap ToFeatureMap() const;
};

// Constituents whose parent lies on the path from `self_cat` to the root but
// which are not on that path themselves, in document order. The subtree of
// `self_cat` covers the connective and is never a candidate.
std::vector<NodeId> PruneCandidates(const ParseTree& tree, NodeId self_cat);

NodeFeatureVector ExtractNodeFeatures(NodeId node, const ConnectiveCandidate& connective,
                                      const Sentence& sentence);

// As above, reusing already computed connective features.
NodeFeatureVector ExtractNodeFeatures(NodeId node, const ConnectiveCandidate& connective,
                                      const Sentence& sentence,
                                      const ConnectiveFeatureVector& connective_features);

using ConstituentLabels = std::map<NodeId, ConstituentLabel>;

ConstituentLabels ClassifyConstituents(const std::vector<NodeId>& candidates,
                                       const std::vector<NodeFeatureVector>& features,
                                       const DecisionTree& argument_tree);

struct ArgumentSpans {
  std::vector<int> arg1_tokens;  // document-level, ascending
  std::vector<int> arg2_tokens;
};

// Merges labelled constituents into argument spans. Arg2 wins overlaps and
// connective tokens belong to neither argument. Without any Arg1 material
// Arg1 falls back to the whole previous sentence; in the first sentence the
// relation is dropped (nullopt).
std::optional<ArgumentSpans> MergeArguments(const ConstituentLabels& labels,
                                            const ConnectiveCandidate& connective,
                                            const Document& document);

// Training projection of gold spans onto a candidate: Arg1Part / Arg2Part when
// every covered token lies in that gold argument, otherwise None.
ConstituentLabel ProjectGoldLabel(const ParseTree& tree, NodeId node, int sentence_offset,
                                  const std::vector<int>& gold_arg1,
                                  const std::vector<int>& gold_arg2);

}  // namespace disco

#endif  // DISCO_ARGUMENTS_H_
