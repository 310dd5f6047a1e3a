#ifndef DISCO_DECISION_TREE_H_
#define DISCO_DECISION_TREE_H_

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

namespace disco {

using FeatureMap = std::map<std::string, std::string>;
using ClassDistribution = std::map<std::string, int>;

struct Instance {
  FeatureMap features;
  std::string label;
};

// Entropy of a class distribution, in bits.
double Entropy(const ClassDistribution& distribution);

// C4.5 gain ratio of splitting `dataset` on `feature`: information gain over
// the label entropy divided by the split information, or 0 when the split
// information is 0.
double GainRatio(const std::vector<Instance>& dataset, const std::string& feature);

struct TrainOptions {
  int min_leaf = 2;
};

// Multiway categorical decision tree grown top-down by gain ratio. Leaves hold
// the majority label and the class distribution of their training support.
class DecisionTree {
 public:
  // Untrained: a leaf with an empty label.
  DecisionTree() = default;

  static DecisionTree Leaf(std::string label, ClassDistribution distribution);

  // Throws Error(kTraining) on an empty dataset, on instances whose feature
  // names differ, or on min_leaf < 1.
  static DecisionTree Train(const std::vector<Instance>& dataset, const TrainOptions& options);

  // Follows the branch for each tested value; unseen values take the branch
  // with the largest training support. Throws Error(kModel) when a tested
  // feature is absent from `features`.
  const std::string& Predict(const FeatureMap& features) const;

  bool is_leaf() const { return feature_.empty(); }
  const std::string& label() const { return label_; }
  const ClassDistribution& distribution() const { return distribution_; }
  const std::string& feature() const { return feature_; }
  const std::vector<std::string>& values() const { return values_; }
  const std::vector<DecisionTree>& children() const { return children_; }
  const std::string& majority_value() const { return values_[majority_child_]; }
  int support() const;

  int NodeCount() const;
  int LeafCount() const;
  int MaxDepth() const;

  nlohmann::json ToJson() const;
  static DecisionTree FromJson(const nlohmann::json& js);

 private:
  std::string label_;  // majority label of the training support
  ClassDistribution distribution_;
  // Branch nodes only; values_ is sorted and parallel to children_.
  std::string feature_;
  std::vector<std::string> values_;
  std::vector<DecisionTree> children_;
  int majority_child_ = 0;
};

}  // namespace disco

#endif  // DISCO_DECISION_TREE_H_
