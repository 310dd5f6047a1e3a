#include "disco/sense.h"

#include "disco/error.h"

namespace disco {

DiscourseRelation AnnotateSense(DiscourseRelation relation, const ConnectiveLexicon& lexicon,
                                std::string_view connective) {
  if (relation.relation_type != RelationType::kExplicit) {
    throw Error(ErrorKind::kDomain, "sense annotation applies to explicit relations only");
  }
  relation.senses = {MostFrequentSense(lexicon, connective)};
  return relation;
}

DiscourseRelation AnnotateSense(DiscourseRelation relation, const ConnectiveLexicon& lexicon,
                                const Document& document) {
  std::string key = ConnectiveKey(document, relation.connective_tokens);
  return AnnotateSense(std::move(relation), lexicon, key);
}

}  // namespace disco
