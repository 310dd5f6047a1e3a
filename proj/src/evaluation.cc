#include "disco/evaluation.h"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <map>
#include <set>

#include "disco/error.h"

namespace disco {
namespace {

std::vector<int> Sorted(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// Explicit relations grouped by document, input order kept.
using ByDocument = std::map<std::string, std::vector<const DiscourseRelation*>>;

ByDocument GroupExplicit(const std::vector<DiscourseRelation>& relations, const char* which) {
  ByDocument groups;
  std::set<std::pair<std::string, int>> ids;
  for (const DiscourseRelation& r : relations) {
    if (!ids.insert({r.doc_id, r.relation_id}).second) {
      throw Error(ErrorKind::kData, std::string(which) + ": relation id " +
                                        std::to_string(r.relation_id) + " repeated in " +
                                        r.doc_id);
    }
    if (r.relation_type == RelationType::kExplicit) groups[r.doc_id].push_back(&r);
  }
  return groups;
}

using Match = std::function<bool(const DiscourseRelation&, const DiscourseRelation&)>;

PRF ScoreDimension(const ByDocument& gold, const ByDocument& predicted, const Match& match) {
  PRF prf;
  for (const auto& [doc, rels] : gold) prf.gold_count += static_cast<int>(rels.size());
  for (const auto& [doc, rels] : predicted) prf.predicted_count += static_cast<int>(rels.size());
  for (const auto& [doc, gold_rels] : gold) {
    auto it = predicted.find(doc);
    if (it == predicted.end()) continue;
    const auto& pred_rels = it->second;
    std::vector<bool> used(pred_rels.size(), false);
    for (const DiscourseRelation* g : gold_rels) {
      for (size_t p = 0; p < pred_rels.size(); ++p) {
        if (!used[p] && match(*g, *pred_rels[p])) {
          used[p] = true;
          ++prf.true_positives;
          break;
        }
      }
    }
  }
  return prf;
}

bool SameConnective(const DiscourseRelation& g, const DiscourseRelation& p) {
  return Sorted(g.connective_tokens) == Sorted(p.connective_tokens);
}

nlohmann::json PrfJson(const PRF& prf) {
  return {{"precision", prf.precision()}, {"recall", prf.recall()}, {"f1", prf.f1()},
          {"tp", prf.true_positives},     {"predicted", prf.predicted_count},
          {"gold", prf.gold_count}};
}

}  // namespace

double PRF::precision() const {
  return predicted_count == 0 ? 0.0 : static_cast<double>(true_positives) / predicted_count;
}

double PRF::recall() const {
  return gold_count == 0 ? 0.0 : static_cast<double>(true_positives) / gold_count;
}

double PRF::f1() const {
  double p = precision();
  double r = recall();
  return p + r > 0.0 ? 2.0 * p * r / (p + r) : 0.0;
}

nlohmann::json EvaluationReport::ToJson() const {
  return {{"connective", PrfJson(connective)},
          {"arg1", PrfJson(arg1)},
          {"arg2", PrfJson(arg2)},
          {"relation", PrfJson(relation)}};
}

std::string EvaluationReport::ToTable() const {
  std::string out = "dimension    precision  recall     f1         tp / pred / gold\n";
  auto row = [&out](const char* name, const PRF& prf) {
    char line[160];
    std::snprintf(line, sizeof(line), "%-12s %-10.4f %-10.4f %-10.4f %d / %d / %d\n", name,
                  prf.precision(), prf.recall(), prf.f1(), prf.true_positives,
                  prf.predicted_count, prf.gold_count);
    out += line;
  };
  row("connective", connective);
  row("arg1", arg1);
  row("arg2", arg2);
  row("relation", relation);
  return out;
}

EvaluationReport Score(const std::vector<DiscourseRelation>& gold,
                       const std::vector<DiscourseRelation>& predicted) {
  ByDocument g = GroupExplicit(gold, "gold");
  ByDocument p = GroupExplicit(predicted, "predicted");

  EvaluationReport report;
  report.connective = ScoreDimension(g, p, SameConnective);
  report.arg1 = ScoreDimension(g, p, [](const auto& a, const auto& b) {
    return SameConnective(a, b) && Sorted(a.arg1_tokens) == Sorted(b.arg1_tokens);
  });
  report.arg2 = ScoreDimension(g, p, [](const auto& a, const auto& b) {
    return SameConnective(a, b) && Sorted(a.arg2_tokens) == Sorted(b.arg2_tokens);
  });
  report.relation = ScoreDimension(g, p, [](const auto& a, const auto& b) {
    if (!SameConnective(a, b) || Sorted(a.arg1_tokens) != Sorted(b.arg1_tokens) ||
        Sorted(a.arg2_tokens) != Sorted(b.arg2_tokens) || b.senses.empty()) {
      return false;
    }
    return std::find(a.senses.begin(), a.senses.end(), b.senses.front()) != a.senses.end();
  });
  return report;
}

}  // namespace disco
