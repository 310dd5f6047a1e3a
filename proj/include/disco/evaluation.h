#ifndef DISCO_EVALUATION_H_
#define DISCO_EVALUATION_H_

#include <string>
#include <vector>

#include <json.hpp>

#include "disco/corpus.h"

namespace disco {

struct PRF {
  int true_positives = 0;
  int predicted_count = 0;
  int gold_count = 0;

  double precision() const;
  double recall() const;
  double f1() const;
};

struct EvaluationReport {
  PRF connective;
  PRF arg1;
  PRF arg2;
  PRF relation;

  nlohmann::json ToJson() const;
  std::string ToTable() const;
};

// Exact token-set scoring of explicit relations. Arg1 and Arg2 credit needs
// the connective to match as well; full-relation credit additionally needs
// both arguments and a sense found in the gold sense list. Each dimension
// pairs gold and predicted relations one-to-one, greedily in input order.
// Throws Error(kData) on a relation id repeated within a document.
EvaluationReport Score(const std::vector<DiscourseRelation>& gold,
                       const std::vector<DiscourseRelation>& predicted);

}  // namespace disco

#endif  // DISCO_EVALUATION_H_
