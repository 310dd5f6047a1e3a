#include "disco/decision_tree.h"

#include <algorithm>
#include <cmath>

#include "disco/error.h"

namespace disco {
namespace {

// Gain ratios closer than this are treated as equal, so tie-breaking by
// feature name does not depend on summation order.
constexpr double kGainEpsilon = 1e-12;

using Indices = std::vector<int>;

std::string MajorityLabel(const ClassDistribution& distribution) {
  std::string best;
  int best_count = -1;
  for (const auto& [label, count] : distribution) {
    if (count > best_count) {
      best = label;
      best_count = count;
    }
  }
  return best;
}

ClassDistribution Distribution(const std::vector<Instance>& data, const Indices& subset) {
  ClassDistribution d;
  for (int i : subset) d[data[i].label] += 1;
  return d;
}

double GainRatioOf(const std::vector<Instance>& data, const Indices& subset,
                   const std::string& feature, double label_entropy) {
  std::map<std::string, ClassDistribution> by_value;
  for (int i : subset) by_value[data[i].features.at(feature)][data[i].label] += 1;
  if (by_value.size() < 2) return 0.0;

  const double n = static_cast<double>(subset.size());
  double conditional = 0.0;
  double split_info = 0.0;
  for (const auto& [value, dist] : by_value) {
    int count = 0;
    for (const auto& [label, c] : dist) count += c;
    double weight = count / n;
    conditional += weight * Entropy(dist);
    split_info -= weight * std::log2(weight);
  }
  if (split_info <= 0.0) return 0.0;
  double gain = label_entropy - conditional;
  return std::max(0.0, gain / split_info);
}

void CheckSchema(const std::vector<Instance>& dataset) {
  if (dataset.empty()) throw Error(ErrorKind::kTraining, "empty training dataset");
  const FeatureMap& first = dataset.front().features;
  for (size_t i = 1; i < dataset.size(); ++i) {
    const FeatureMap& f = dataset[i].features;
    bool same = f.size() == first.size() &&
                std::equal(f.begin(), f.end(), first.begin(),
                           [](const auto& a, const auto& b) { return a.first == b.first; });
    if (!same) {
      throw Error(ErrorKind::kTraining,
                  "instance " + std::to_string(i) + " has a different feature set than instance 0");
    }
  }
}

}  // namespace

double Entropy(const ClassDistribution& distribution) {
  double total = 0.0;
  for (const auto& [label, count] : distribution) total += count;
  if (total <= 0.0) return 0.0;
  double h = 0.0;
  for (const auto& [label, count] : distribution) {
    if (count <= 0) continue;
    double p = count / total;
    h -= p * std::log2(p);
  }
  return h;
}

double GainRatio(const std::vector<Instance>& dataset, const std::string& feature) {
  if (dataset.empty()) return 0.0;
  Indices all(dataset.size());
  for (size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  return GainRatioOf(dataset, all, feature, Entropy(Distribution(dataset, all)));
}

DecisionTree DecisionTree::Leaf(std::string label, ClassDistribution distribution) {
  DecisionTree t;
  t.label_ = std::move(label);
  t.distribution_ = std::move(distribution);
  return t;
}

DecisionTree DecisionTree::Train(const std::vector<Instance>& dataset,
                                 const TrainOptions& options) {
  CheckSchema(dataset);
  if (options.min_leaf < 1) throw Error(ErrorKind::kTraining, "min_leaf must be at least 1");

  std::vector<std::string> all_features;
  for (const auto& [name, value] : dataset.front().features) all_features.push_back(name);

  auto grow = [&](auto& self, const Indices& subset,
                  const std::vector<std::string>& available) -> DecisionTree {
    ClassDistribution dist = Distribution(dataset, subset);
    DecisionTree node = Leaf(MajorityLabel(dist), dist);
    if (dist.size() <= 1 || static_cast<int>(subset.size()) < 2 * options.min_leaf ||
        available.empty()) {
      return node;
    }

    double label_entropy = Entropy(dist);
    const std::string* best = nullptr;
    double best_ratio = 0.0;
    for (const std::string& f : available) {  // ascending by name
      double ratio = GainRatioOf(dataset, subset, f, label_entropy);
      if (ratio > best_ratio + kGainEpsilon) {
        best = &f;
        best_ratio = ratio;
      }
    }
    if (best == nullptr) return node;

    std::map<std::string, Indices> partition;
    for (int i : subset) partition[dataset[i].features.at(*best)].push_back(i);
    std::vector<std::string> remaining;
    for (const std::string& f : available) {
      if (f != *best) remaining.push_back(f);
    }

    node.feature_ = *best;
    size_t largest = 0;
    for (auto& [value, part] : partition) {
      if (part.size() > largest) {
        largest = part.size();
        node.majority_child_ = static_cast<int>(node.values_.size());
      }
      node.values_.push_back(value);
      node.children_.push_back(self(self, part, remaining));
    }
    return node;
  };

  Indices all(dataset.size());
  for (size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  return grow(grow, all, all_features);
}

const std::string& DecisionTree::Predict(const FeatureMap& features) const {
  const DecisionTree* node = this;
  while (!node->is_leaf()) {
    auto f = features.find(node->feature_);
    if (f == features.end()) {
      throw Error(ErrorKind::kModel, "feature \"" + node->feature_ +
                                         "\" tested by the tree is missing from the input");
    }
    auto it = std::lower_bound(node->values_.begin(), node->values_.end(), f->second);
    size_t child = (it != node->values_.end() && *it == f->second)
                       ? static_cast<size_t>(it - node->values_.begin())
                       : static_cast<size_t>(node->majority_child_);
    node = &node->children_[child];
  }
  return node->label_;
}

int DecisionTree::support() const {
  int n = 0;
  for (const auto& [label, count] : distribution_) n += count;
  return n;
}

int DecisionTree::NodeCount() const {
  int n = 1;
  for (const DecisionTree& c : children_) n += c.NodeCount();
  return n;
}

int DecisionTree::LeafCount() const {
  if (is_leaf()) return 1;
  int n = 0;
  for (const DecisionTree& c : children_) n += c.LeafCount();
  return n;
}

int DecisionTree::MaxDepth() const {
  int depth = 0;
  for (const DecisionTree& c : children_) depth = std::max(depth, 1 + c.MaxDepth());
  return depth;
}

nlohmann::json DecisionTree::ToJson() const {
  nlohmann::json js = {{"label", label_}, {"distribution", distribution_}};
  if (is_leaf()) {
    js["kind"] = "leaf";
    return js;
  }
  js["kind"] = "branch";
  js["feature"] = feature_;
  js["majority_value"] = majority_value();
  nlohmann::json children = nlohmann::json::object();
  for (size_t i = 0; i < values_.size(); ++i) children[values_[i]] = children_[i].ToJson();
  js["children"] = std::move(children);
  return js;
}

DecisionTree DecisionTree::FromJson(const nlohmann::json& js) {
  try {
    DecisionTree t;
    t.label_ = js.at("label").get<std::string>();
    t.distribution_ = js.at("distribution").get<ClassDistribution>();
    std::string kind = js.at("kind").get<std::string>();
    if (kind == "leaf") return t;
    if (kind != "branch") throw Error(ErrorKind::kModel, "unknown tree node kind " + kind);

    t.feature_ = js.at("feature").get<std::string>();
    if (t.feature_.empty()) throw Error(ErrorKind::kModel, "branch without a feature name");
    std::string majority = js.at("majority_value").get<std::string>();
    for (const auto& [value, child] : js.at("children").items()) {
      if (value == majority) t.majority_child_ = static_cast<int>(t.values_.size());
      t.values_.push_back(value);
      t.children_.push_back(FromJson(child));
    }
    if (t.values_.empty() ||
        std::find(t.values_.begin(), t.values_.end(), majority) == t.values_.end()) {
      throw Error(ErrorKind::kModel, "branch on " + t.feature_ +
                                         " has no child for its majority value");
    }
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::kModel, std::string("decision tree: ") + e.what());
  }
}

}  // namespace disco
