#include "disco/arguments.h"

#include <algorithm>
#include <set>

#include "disco/error.h"

namespace disco {

const char* ConstituentLabelName(ConstituentLabel label) {
  switch (label) {
    case ConstituentLabel::kArg1Part: return "Arg1Part";
    case ConstituentLabel::kArg2Part: return "Arg2Part";
    case ConstituentLabel::kNone: return "None";
  }
  return "None";
}

ConstituentLabel ParseConstituentLabel(const std::string& name) {
  if (name == "Arg1Part") return ConstituentLabel::kArg1Part;
  if (name == "Arg2Part") return ConstituentLabel::kArg2Part;
  if (name == "None") return ConstituentLabel::kNone;
  throw Error(ErrorKind::kModel, "argument tree produced unknown label \"" + name + "\"");
}

FeatureMap NodeFeatureVector::ToFeatureMap() const {
  FeatureMap map = connective.ToFeatureMap();
  map[kNodeFeatureNames[0]] = node_path;
  map[kNodeFeatureNames[1]] = node_context;
  map[kNodeFeatureNames[2]] = node_position;
  return map;
}

std::vector<NodeId> PruneCandidates(const ParseTree& tree, NodeId self_cat) {
  std::vector<NodeId> path = tree.PathToRoot(self_cat);
  std::set<NodeId> on_path(path.begin(), path.end());
  std::vector<NodeId> out;
  // Children of self_cat are the connective itself, so the walk starts above it.
  for (size_t i = 1; i < path.size(); ++i) {
    NodeId p = path[i];
    for (NodeId child : tree.node(p).children) {
      if (!on_path.contains(child)) out.push_back(child);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

NodeFeatureVector ExtractNodeFeatures(NodeId node, const ConnectiveCandidate& connective,
                                      const Sentence& sentence) {
  return ExtractNodeFeatures(node, connective, sentence,
                             ExtractConnectiveFeatures(connective, sentence));
}

NodeFeatureVector ExtractNodeFeatures(NodeId node, const ConnectiveCandidate& connective,
                                      const Sentence& sentence,
                                      const ConnectiveFeatureVector& connective_features) {
  const ParseTree& tree = sentence.tree;
  ConnectiveAnchor anchor = AnchorConnective(tree, connective.token_range);
  NodeFeatureVector f;
  f.connective = connective_features;
  f.node_path = tree.RenderPath(node, anchor.projection);
  f.node_context = tree.Context(node).Render();
  f.node_position = tree.node(node).span.begin < connective.token_range.begin ? "left" : "right";
  return f;
}

ConstituentLabels ClassifyConstituents(const std::vector<NodeId>& candidates,
                                       const std::vector<NodeFeatureVector>& features,
                                       const DecisionTree& argument_tree) {
  if (candidates.size() != features.size()) {
    throw Error(ErrorKind::kDomain, "one feature vector is required per candidate");
  }
  ConstituentLabels labels;
  for (size_t i = 0; i < candidates.size(); ++i) {
    labels[candidates[i]] = ParseConstituentLabel(argument_tree.Predict(features[i].ToFeatureMap()));
  }
  return labels;
}

std::optional<ArgumentSpans> MergeArguments(const ConstituentLabels& labels,
                                            const ConnectiveCandidate& connective,
                                            const Document& document) {
  const Sentence& sentence = document.sentences().at(connective.sent_index);
  const int offset = sentence.first_doc_index();
  std::set<int> connective_tokens;
  for (int i = connective.token_range.begin; i < connective.token_range.end; ++i) {
    connective_tokens.insert(offset + i);
  }

  std::set<int> arg1;
  std::set<int> arg2;
  for (const auto& [node, label] : labels) {
    if (label == ConstituentLabel::kNone) continue;
    TokenRange span = sentence.tree.node(node).span;
    for (int i = span.begin; i < span.end; ++i) {
      int token = offset + i;
      if (connective_tokens.contains(token)) continue;
      (label == ConstituentLabel::kArg2Part ? arg2 : arg1).insert(token);
    }
  }
  for (int token : arg2) arg1.erase(token);

  if (arg1.empty()) {
    if (connective.sent_index == 0) return std::nullopt;
    const Sentence& previous = document.sentences()[connective.sent_index - 1];
    for (const Token& t : previous.tokens) arg1.insert(t.doc_index);
  }
  if (arg2.empty()) {
    for (const Token& t : sentence.tokens) {
      if (!connective_tokens.contains(t.doc_index) && !arg1.contains(t.doc_index)) {
        arg2.insert(t.doc_index);
      }
    }
  }
  return ArgumentSpans{{arg1.begin(), arg1.end()}, {arg2.begin(), arg2.end()}};
}

ConstituentLabel ProjectGoldLabel(const ParseTree& tree, NodeId node, int sentence_offset,
                                  const std::vector<int>& gold_arg1,
                                  const std::vector<int>& gold_arg2) {
  TokenRange span = tree.node(node).span;
  auto covered_by = [&](const std::vector<int>& gold) {
    for (int i = span.begin; i < span.end; ++i) {
      if (std::find(gold.begin(), gold.end(), sentence_offset + i) == gold.end()) return false;
    }
    return true;
  };
  if (covered_by(gold_arg2)) return ConstituentLabel::kArg2Part;
  if (covered_by(gold_arg1)) return ConstituentLabel::kArg1Part;
  return ConstituentLabel::kNone;
}

}  // namespace disco
