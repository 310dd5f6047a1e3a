#ifndef DISCO_LEXICON_H_
#define DISCO_LEXICON_H_

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "disco/corpus.h"

namespace disco {

struct ConnectiveStats {
  int total_count = 0;
  std::map<std::string, int> sense_counts;

  friend bool operator==(const ConnectiveStats&, const ConnectiveStats&) = default;
};

// Connective surface forms observed in gold explicit relations, keyed by the
// lowercased, single-space-joined token surfaces.
struct ConnectiveLexicon {
  std::map<std::string, ConnectiveStats, std::less<>> entries;
  int max_token_length = 0;

  bool Contains(std::string_view key) const { return entries.find(key) != entries.end(); }
  friend bool operator==(const ConnectiveLexicon&, const ConnectiveLexicon&) = default;
};

// ASCII lowercasing; bytes outside ASCII are kept as is.
std::string ToLower(std::string_view text);

// Lowercased, space-joined surfaces of the given document tokens.
std::string ConnectiveKey(const Document& document, const std::vector<int>& doc_indices);

ConnectiveLexicon MineLexicon(const std::vector<DiscourseRelation>& gold,
                              const DocumentMap& documents);

// Sense with the highest count; ties go to the lexicographically smallest
// label. Throws Error(kLookup) for an unknown connective.
const std::string& MostFrequentSense(const ConnectiveLexicon& lexicon,
                                     std::string_view connective);

nlohmann::json LexiconToJson(const ConnectiveLexicon& lexicon);
ConnectiveLexicon LexiconFromJson(const nlohmann::json& js);

}  // namespace disco

#endif  // DISCO_LEXICON_H_
