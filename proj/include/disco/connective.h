#ifndef DISCO_CONNECTIVE_H_
#define DISCO_CONNECTIVE_H_

#include <string>
#include <string_view>
#include <vector>

#include "disco/corpus.h"
#include "disco/decision_tree.h"
#include "disco/lexicon.h"
#include "disco/tree.h"

namespace disco {

// A lexicon match: contiguous tokens of one sentence.
struct ConnectiveCandidate {
  std::string doc_id;
  int sent_index = 0;
  TokenRange token_range;  // positions within the sentence
  std::string surface;     // lexicon key

  friend bool operator==(const ConnectiveCandidate&, const ConnectiveCandidate&) = default;
};

enum class CaseCategory { kAllLowercase, kAllUppercase, kInitialUppercase, kMixed };

const char* CaseCategoryName(CaseCategory category);

// Categorises the letters of `text`: no uppercase letter is all lowercase, no
// lowercase letter (and at least one uppercase) is all uppercase, only the
// first letter uppercase is initial uppercase, anything else is mixed.
CaseCategory CategorizeCase(std::string_view text);

inline constexpr const char* kConnectiveFeatureNames[] = {
    "conn_lowercase", "case_category", "self_cat", "self_cat_parent", "self_cat_left_sibling",
    "self_cat_right_sibling"};

struct ConnectiveFeatureVector {
  std::string conn_lowercase;
  std::string case_category;
  std::string self_cat_label;
  std::string self_cat_parent;
  std::string self_cat_left_sibling;
  std::string self_cat_right_sibling;

  FeatureMap ToFeatureMap() const;
  friend bool operator==(const ConnectiveFeatureVector&, const ConnectiveFeatureVector&) = default;
};

// The tree nodes a connective is anchored to. `self_cat` is the lowest node
// covering the connective tokens (the POS node of a one-word connective);
// `projection` is the top of the unary chain above it that still covers
// exactly the same tokens. Siblings and paths are read at the projection.
struct ConnectiveAnchor {
  NodeId self_cat = kNoNode;
  NodeId projection = kNoNode;
};

ConnectiveAnchor AnchorConnective(const ParseTree& tree, const TokenRange& range);

// Greedy longest-match, left to right, case-insensitive and token-aligned
// within each sentence. Output is ordered by (sentence, first token).
std::vector<ConnectiveCandidate> FindCandidates(const Document& document,
                                                const ConnectiveLexicon& lexicon);

ConnectiveFeatureVector ExtractConnectiveFeatures(const ConnectiveCandidate& candidate,
                                                  const Sentence& sentence);

// True when `usage_tree` labels the connective a discourse usage.
bool ClassifyUsage(const ConnectiveFeatureVector& features, const DecisionTree& usage_tree);

inline constexpr const char* kDiscourseUsage = "true";
inline constexpr const char* kNonDiscourseUsage = "false";

}  // namespace disco

#endif  // DISCO_CONNECTIVE_H_
