#ifndef DISCO_PIPELINE_H_
#define DISCO_PIPELINE_H_

#include <iosfwd>
#include <string>
#include <vector>

#include "disco/corpus.h"
#include "disco/decision_tree.h"
#include "disco/lexicon.h"

namespace disco {

inline constexpr int kModelFormatVersion = 1;

struct ParserModel {
  int format_version = kModelFormatVersion;
  ConnectiveLexicon lexicon;
  DecisionTree usage_tree;
  DecisionTree argument_tree;
};

struct TrainingSummary {
  int lexicon_size = 0;
  int usage_instances = 0;
  int usage_positives = 0;
  int argument_instances = 0;
  int skipped_gold_connectives = 0;  // spans the matcher cannot reproduce
  int usage_tree_nodes = 0;
  int argument_tree_nodes = 0;
};

// Builds both training sets from gold explicit relations and trains the
// usage and argument trees. Throws Error(kTraining) when there are no gold
// explicit relations.
ParserModel TrainModel(const std::vector<Document>& documents,
                       const std::vector<DiscourseRelation>& gold, const TrainOptions& options,
                       TrainingSummary* summary = nullptr);

struct ParseStats {
  int candidates = 0;
  int discourse_usages = 0;
  int dropped = 0;  // no Arg1 material in the first sentence
  int relations = 0;

  ParseStats& operator+=(const ParseStats& other);
};

// Runs the explicit-relation pipeline over one document. Relation ids count
// up from 0 within the document.
std::vector<DiscourseRelation> ParseDocument(const Document& document, const ParserModel& model,
                                             ParseStats* stats = nullptr);

// ParseDocument over every document on up to `parallelism` threads. The
// result is ordered by document, then relation id.
std::vector<DiscourseRelation> ParseCorpus(const std::vector<Document>& documents,
                                           const ParserModel& model, int parallelism,
                                           ParseStats* stats = nullptr);

void SaveModel(const ParserModel& model, std::ostream& out);

// Throws Error(kModel) on a format_version other than kModelFormatVersion or
// when a tree tests a feature its extractor does not produce.
ParserModel LoadModel(std::istream& in);

}  // namespace disco

#endif  // DISCO_PIPELINE_H_
