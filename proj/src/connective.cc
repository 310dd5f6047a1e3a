#include "disco/connective.h"

#include <algorithm>

#include "disco/error.h"

namespace disco {

const char* CaseCategoryName(CaseCategory category) {
  switch (category) {
    case CaseCategory::kAllLowercase: return "all lowercase";
    case CaseCategory::kAllUppercase: return "all uppercase";
    case CaseCategory::kInitialUppercase: return "initial uppercase";
    case CaseCategory::kMixed: return "mixed";
  }
  return "mixed";
}

CaseCategory CategorizeCase(std::string_view text) {
  int upper = 0;
  int lower = 0;
  bool first_letter_upper = false;
  bool seen_letter = false;
  for (char c : text) {
    bool is_upper = c >= 'A' && c <= 'Z';
    bool is_lower = c >= 'a' && c <= 'z';
    if (!is_upper && !is_lower) continue;
    if (!seen_letter) first_letter_upper = is_upper;
    seen_letter = true;
    upper += is_upper;
    lower += is_lower;
  }
  if (upper == 0) return CaseCategory::kAllLowercase;
  if (lower == 0) return CaseCategory::kAllUppercase;
  if (upper == 1 && first_letter_upper) return CaseCategory::kInitialUppercase;
  return CaseCategory::kMixed;
}

FeatureMap ConnectiveFeatureVector::ToFeatureMap() const {
  return {{kConnectiveFeatureNames[0], conn_lowercase},
          {kConnectiveFeatureNames[1], case_category},
          {kConnectiveFeatureNames[2], self_cat_label},
          {kConnectiveFeatureNames[3], self_cat_parent},
          {kConnectiveFeatureNames[4], self_cat_left_sibling},
          {kConnectiveFeatureNames[5], self_cat_right_sibling}};
}

ConnectiveAnchor AnchorConnective(const ParseTree& tree, const TokenRange& range) {
  NodeId self_cat = tree.SelfCat(range);
  return {self_cat, tree.MaximalProjection(self_cat)};
}

std::vector<ConnectiveCandidate> FindCandidates(const Document& document,
                                                const ConnectiveLexicon& lexicon) {
  std::vector<ConnectiveCandidate> out;
  if (lexicon.entries.empty()) return out;
  for (const Sentence& sentence : document.sentences()) {
    const int n = static_cast<int>(sentence.tokens.size());
    std::vector<std::string> lowered;
    lowered.reserve(n);
    for (const Token& t : sentence.tokens) lowered.push_back(ToLower(t.surface));

    int i = 0;
    while (i < n) {
      int matched = 0;
      std::string key;
      for (int len = std::min(lexicon.max_token_length, n - i); len >= 1; --len) {
        std::string probe = lowered[i];
        for (int k = 1; k < len; ++k) probe += " " + lowered[i + k];
        if (lexicon.Contains(probe)) {
          matched = len;
          key = std::move(probe);
          break;
        }
      }
      if (matched == 0) {
        ++i;
        continue;
      }
      out.push_back({document.doc_id(), sentence.sent_index, {i, i + matched}, std::move(key)});
      i += matched;
    }
  }
  return out;
}

ConnectiveFeatureVector ExtractConnectiveFeatures(const ConnectiveCandidate& candidate,
                                                  const Sentence& sentence) {
  const ParseTree& tree = sentence.tree;
  ConnectiveAnchor anchor = AnchorConnective(tree, candidate.token_range);
  auto label_or_null = [&tree](NodeId n) {
    return n == kNoNode ? std::string(kNullLabel) : tree.label(n);
  };

  std::string original;
  for (int i = candidate.token_range.begin; i < candidate.token_range.end; ++i) {
    if (!original.empty()) original += ' ';
    original += sentence.tokens[i].surface;
  }

  ConnectiveFeatureVector f;
  f.conn_lowercase = ToLower(original);
  f.case_category = CaseCategoryName(CategorizeCase(original));
  f.self_cat_label = tree.label(anchor.self_cat);
  f.self_cat_parent = label_or_null(tree.parent(anchor.self_cat));
  f.self_cat_left_sibling = label_or_null(tree.LeftSibling(anchor.projection));
  f.self_cat_right_sibling = label_or_null(tree.RightSibling(anchor.projection));
  return f;
}

bool ClassifyUsage(const ConnectiveFeatureVector& features, const DecisionTree& usage_tree) {
  return usage_tree.Predict(features.ToFeatureMap()) == kDiscourseUsage;
}

}  // namespace disco
