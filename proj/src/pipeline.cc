#include "disco/pipeline.h"

#include <algorithm>
#include <atomic>
#include <istream>
#include <ostream>
#include <set>
#include <thread>

#include <spdlog/spdlog.h>

#include "disco/arguments.h"
#include "disco/connective.h"
#include "disco/error.h"
#include "disco/sense.h"

namespace disco {
namespace {

std::vector<int> DocIndices(const Sentence& sentence, const TokenRange& range) {
  std::vector<int> out;
  for (int i = range.begin; i < range.end; ++i) out.push_back(sentence.tokens[i].doc_index);
  return out;
}

// Turns a gold connective into a matcher-style candidate. Returns false when
// the span is discontiguous or crosses a sentence boundary.
bool GoldCandidate(const Document& doc, const std::vector<int>& tokens,
                   ConnectiveCandidate* out) {
  std::vector<int> sorted = tokens;
  std::sort(sorted.begin(), sorted.end());
  for (size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i] != sorted[i - 1] + 1) return false;
  }
  const Token& first = doc.token(sorted.front());
  const Token& last = doc.token(sorted.back());
  if (first.sent_index != last.sent_index) return false;
  out->doc_id = doc.doc_id();
  out->sent_index = first.sent_index;
  out->token_range = {first.index_in_sentence, last.index_in_sentence + 1};
  out->surface = ConnectiveKey(doc, sorted);
  return true;
}

void CollectTestedFeatures(const DecisionTree& tree, std::set<std::string>* out) {
  if (tree.is_leaf()) return;
  out->insert(tree.feature());
  for (const DecisionTree& child : tree.children()) CollectTestedFeatures(child, out);
}

template <size_t N>
void CheckSchema(const DecisionTree& tree, const char* const (&names)[N],
                 const char* const* extra, size_t extra_count, const char* which) {
  std::set<std::string> allowed(std::begin(names), std::end(names));
  allowed.insert(extra, extra + extra_count);
  std::set<std::string> tested;
  CollectTestedFeatures(tree, &tested);
  for (const std::string& f : tested) {
    if (!allowed.contains(f)) {
      throw Error(ErrorKind::kModel,
                  std::string(which) + " tests feature \"" + f + "\" outside its schema");
    }
  }
}

}  // namespace

ParseStats& ParseStats::operator+=(const ParseStats& other) {
  candidates += other.candidates;
  discourse_usages += other.discourse_usages;
  dropped += other.dropped;
  relations += other.relations;
  return *this;
}

ParserModel TrainModel(const std::vector<Document>& documents,
                       const std::vector<DiscourseRelation>& gold, const TrainOptions& options,
                       TrainingSummary* summary) {
  DocumentMap index = IndexDocuments(documents);
  std::vector<const DiscourseRelation*> explicit_gold;
  for (const DiscourseRelation& r : gold) {
    if (r.relation_type == RelationType::kExplicit) explicit_gold.push_back(&r);
  }
  if (explicit_gold.empty()) {
    throw Error(ErrorKind::kTraining, "no explicit gold relations to train on");
  }

  ParserModel model;
  model.lexicon = MineLexicon(gold, index);

  std::map<std::string, std::set<std::vector<int>>> gold_connectives;
  for (const DiscourseRelation* r : explicit_gold) {
    std::vector<int> tokens = r->connective_tokens;
    std::sort(tokens.begin(), tokens.end());
    gold_connectives[r->doc_id].insert(std::move(tokens));
  }

  // Usage classifier: every lexicon match, positive iff it is a gold connective.
  std::vector<Instance> usage_data;
  int matched_gold = 0;
  for (const Document& doc : documents) {
    const auto& golds = gold_connectives[doc.doc_id()];
    for (const ConnectiveCandidate& c : FindCandidates(doc, model.lexicon)) {
      const Sentence& sentence = doc.sentences()[c.sent_index];
      bool positive = golds.contains(DocIndices(sentence, c.token_range));
      matched_gold += positive;
      usage_data.push_back({ExtractConnectiveFeatures(c, sentence).ToFeatureMap(),
                            positive ? kDiscourseUsage : kNonDiscourseUsage});
    }
  }
  int skipped = static_cast<int>(explicit_gold.size()) - matched_gold;
  if (skipped > 0) {
    spdlog::warn("{} gold explicit connectives are not reproduced by the lexicon matcher",
                 skipped);
  }

  // Argument classifier: pruned candidates of each gold connective.
  std::vector<Instance> argument_data;
  for (const DiscourseRelation* r : explicit_gold) {
    const Document& doc = *index.at(r->doc_id);
    ConnectiveCandidate c;
    if (!GoldCandidate(doc, r->connective_tokens, &c)) {
      spdlog::warn("relation {} in {}: discontiguous or cross-sentence connective skipped",
                   r->relation_id, r->doc_id);
      continue;
    }
    const Sentence& sentence = doc.sentences()[c.sent_index];
    ConnectiveFeatureVector conn = ExtractConnectiveFeatures(c, sentence);
    NodeId self_cat = AnchorConnective(sentence.tree, c.token_range).self_cat;
    for (NodeId node : PruneCandidates(sentence.tree, self_cat)) {
      ConstituentLabel label = ProjectGoldLabel(sentence.tree, node, sentence.first_doc_index(),
                                                r->arg1_tokens, r->arg2_tokens);
      argument_data.push_back({ExtractNodeFeatures(node, c, sentence, conn).ToFeatureMap(),
                               ConstituentLabelName(label)});
    }
  }

  model.usage_tree = usage_data.empty()
                         ? DecisionTree::Leaf(kNonDiscourseUsage, {})
                         : DecisionTree::Train(usage_data, options);
  model.argument_tree =
      argument_data.empty()
          ? DecisionTree::Leaf(ConstituentLabelName(ConstituentLabel::kNone), {})
          : DecisionTree::Train(argument_data, options);

  if (summary != nullptr) {
    summary->lexicon_size = static_cast<int>(model.lexicon.entries.size());
    summary->usage_instances = static_cast<int>(usage_data.size());
    summary->usage_positives = matched_gold;
    summary->argument_instances = static_cast<int>(argument_data.size());
    summary->skipped_gold_connectives = skipped;
    summary->usage_tree_nodes = model.usage_tree.NodeCount();
    summary->argument_tree_nodes = model.argument_tree.NodeCount();
  }
  return model;
}

std::vector<DiscourseRelation> ParseDocument(const Document& document, const ParserModel& model,
                                             ParseStats* stats) {
  ParseStats local;
  std::vector<DiscourseRelation> relations;
  for (const ConnectiveCandidate& c : FindCandidates(document, model.lexicon)) {
    ++local.candidates;
    const Sentence& sentence = document.sentences()[c.sent_index];
    ConnectiveFeatureVector conn = ExtractConnectiveFeatures(c, sentence);
    if (!ClassifyUsage(conn, model.usage_tree)) continue;
    ++local.discourse_usages;

    NodeId self_cat = AnchorConnective(sentence.tree, c.token_range).self_cat;
    std::vector<NodeId> nodes = PruneCandidates(sentence.tree, self_cat);
    std::vector<NodeFeatureVector> features;
    features.reserve(nodes.size());
    for (NodeId node : nodes) features.push_back(ExtractNodeFeatures(node, c, sentence, conn));
    ConstituentLabels labels = ClassifyConstituents(nodes, features, model.argument_tree);

    std::optional<ArgumentSpans> spans = MergeArguments(labels, c, document);
    if (!spans) {
      ++local.dropped;
      continue;
    }
    DiscourseRelation r;
    r.doc_id = document.doc_id();
    r.relation_id = static_cast<int>(relations.size());
    r.relation_type = RelationType::kExplicit;
    r.connective_tokens = DocIndices(sentence, c.token_range);
    r.arg1_tokens = std::move(spans->arg1_tokens);
    r.arg2_tokens = std::move(spans->arg2_tokens);
    relations.push_back(AnnotateSense(std::move(r), model.lexicon, c.surface));
  }
  local.relations = static_cast<int>(relations.size());
  if (stats != nullptr) *stats += local;
  return relations;
}

std::vector<DiscourseRelation> ParseCorpus(const std::vector<Document>& documents,
                                           const ParserModel& model, int parallelism,
                                           ParseStats* stats) {
  const size_t n = documents.size();
  std::vector<std::vector<DiscourseRelation>> per_doc(n);
  std::vector<ParseStats> per_doc_stats(n);
  std::atomic<size_t> next{0};
  std::vector<std::exception_ptr> errors(n);

  auto worker = [&] {
    for (size_t i = next++; i < n; i = next++) {
      try {
        per_doc[i] = ParseDocument(documents[i], model, &per_doc_stats[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  size_t threads = std::clamp<size_t>(static_cast<size_t>(std::max(parallelism, 1)), 1,
                                      std::max<size_t>(n, 1));
  {
    std::vector<std::jthread> pool;
    for (size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }

  std::vector<DiscourseRelation> out;
  for (size_t i = 0; i < n; ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    if (stats != nullptr) *stats += per_doc_stats[i];
    for (DiscourseRelation& r : per_doc[i]) out.push_back(std::move(r));
  }
  return out;
}

void SaveModel(const ParserModel& model, std::ostream& out) {
  nlohmann::json js = {{"format_version", model.format_version},
                       {"lexicon", LexiconToJson(model.lexicon)},
                       {"usage_tree", model.usage_tree.ToJson()},
                       {"argument_tree", model.argument_tree.ToJson()}};
  out << js.dump(1) << '\n';
}

ParserModel LoadModel(std::istream& in) {
  nlohmann::json js;
  try {
    js = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::kModel, std::string("model file: ") + e.what());
  }
  if (!js.is_object() || !js.contains("format_version") ||
      !js["format_version"].is_number_integer()) {
    throw Error(ErrorKind::kModel, "model file: missing format_version");
  }
  int version = js["format_version"].get<int>();
  if (version != kModelFormatVersion) {
    throw Error(ErrorKind::kModel, "model file has format_version " + std::to_string(version) +
                                       " but this build reads version " +
                                       std::to_string(kModelFormatVersion));
  }
  if (!js.contains("lexicon") || !js.contains("usage_tree") || !js.contains("argument_tree")) {
    throw Error(ErrorKind::kModel, "model file: missing lexicon or trees");
  }
  ParserModel model;
  model.format_version = version;
  model.lexicon = LexiconFromJson(js["lexicon"]);
  model.usage_tree = DecisionTree::FromJson(js["usage_tree"]);
  model.argument_tree = DecisionTree::FromJson(js["argument_tree"]);
  CheckSchema(model.usage_tree, kConnectiveFeatureNames, nullptr, 0, "usage tree");
  CheckSchema(model.argument_tree, kConnectiveFeatureNames, kNodeFeatureNames,
              std::size(kNodeFeatureNames), "argument tree");
  return model;
}

}  // namespace disco
