#include "disco/lexicon.h"

#include <algorithm>

#include "disco/error.h"

namespace disco {

std::string ToLower(std::string_view text) {
  std::string out(text);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

std::string ConnectiveKey(const Document& document, const std::vector<int>& doc_indices) {
  std::string key;
  for (int index : doc_indices) {
    if (!key.empty()) key += ' ';
    key += ToLower(document.token(index).surface);
  }
  return key;
}

ConnectiveLexicon MineLexicon(const std::vector<DiscourseRelation>& gold,
                              const DocumentMap& documents) {
  ConnectiveLexicon lexicon;
  for (const DiscourseRelation& r : gold) {
    if (r.relation_type != RelationType::kExplicit) continue;
    if (r.connective_tokens.empty()) {
      throw Error(ErrorKind::kData, "explicit relation " + std::to_string(r.relation_id) +
                                        " in " + r.doc_id + " has no connective tokens");
    }
    auto doc = documents.find(r.doc_id);
    if (doc == documents.end()) {
      throw Error(ErrorKind::kMissingDocument, "relation " + std::to_string(r.relation_id) +
                                                   " refers to unknown document " + r.doc_id);
    }
    std::string key = ConnectiveKey(*doc->second, r.connective_tokens);
    ConnectiveStats& stats = lexicon.entries[key];
    stats.total_count += 1;
    for (const std::string& sense : r.senses) stats.sense_counts[sense] += 1;
    lexicon.max_token_length =
        std::max(lexicon.max_token_length, static_cast<int>(r.connective_tokens.size()));
  }
  return lexicon;
}

const std::string& MostFrequentSense(const ConnectiveLexicon& lexicon,
                                     std::string_view connective) {
  auto it = lexicon.entries.find(connective);
  if (it == lexicon.entries.end() || it->second.sense_counts.empty()) {
    throw Error(ErrorKind::kLookup,
                "connective \"" + std::string(connective) + "\" has no sense in the lexicon");
  }
  // std::map iterates labels in ascending order, so the first maximum wins ties.
  const std::string* best = nullptr;
  int best_count = -1;
  for (const auto& [sense, count] : it->second.sense_counts) {
    if (count > best_count) {
      best = &sense;
      best_count = count;
    }
  }
  return *best;
}

nlohmann::json LexiconToJson(const ConnectiveLexicon& lexicon) {
  nlohmann::json entries = nlohmann::json::object();
  for (const auto& [key, stats] : lexicon.entries) {
    entries[key] = {{"total_count", stats.total_count}, {"sense_counts", stats.sense_counts}};
  }
  return {{"max_token_length", lexicon.max_token_length}, {"entries", std::move(entries)}};
}

ConnectiveLexicon LexiconFromJson(const nlohmann::json& js) {
  try {
    ConnectiveLexicon lexicon;
    lexicon.max_token_length = js.at("max_token_length").get<int>();
    for (const auto& [key, value] : js.at("entries").items()) {
      ConnectiveStats stats;
      stats.total_count = value.at("total_count").get<int>();
      stats.sense_counts = value.at("sense_counts").get<std::map<std::string, int>>();
      lexicon.entries.emplace(key, std::move(stats));
    }
    return lexicon;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::kModel, std::string("lexicon: ") + e.what());
  }
}

}  // namespace disco
