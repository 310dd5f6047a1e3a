#ifndef DISCO_CORPUS_H_
#define DISCO_CORPUS_H_

#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "disco/tree.h"

namespace disco {

struct Token {
  std::string surface;
  int char_begin = 0;  // Unicode scalar offsets into the raw text
  int char_end = 0;
  std::string pos;
  int doc_index = 0;
  int sent_index = 0;
  int index_in_sentence = 0;
};

struct Sentence {
  int sent_index = 0;
  std::vector<Token> tokens;
  ParseTree tree;

  // First doc_index of the sentence.
  int first_doc_index() const { return tokens.empty() ? 0 : tokens.front().doc_index; }
};

class Document {
 public:
  Document(std::string doc_id, std::string raw_text, std::vector<Sentence> sentences);

  const std::string& doc_id() const { return doc_id_; }
  const std::string& raw_text() const { return raw_text_; }
  const std::vector<Sentence>& sentences() const { return sentences_; }
  int num_tokens() const { return static_cast<int>(token_index_.size()); }

  // Token by document-level index. Throws Error(kDomain) when out of range.
  const Token& token(int doc_index) const;

  // Slice of the raw text between two scalar offsets, as UTF-8.
  std::string RawSlice(int char_begin, int char_end) const;
  int raw_length() const { return static_cast<int>(scalar_offsets_.size()) - 1; }

 private:
  std::string doc_id_;
  std::string raw_text_;
  std::vector<Sentence> sentences_;
  std::vector<std::pair<int, int>> token_index_;  // doc_index -> (sentence, position)
  std::vector<size_t> scalar_offsets_;  // byte offset of each scalar, plus end
};

using DocumentMap = std::map<std::string, const Document*, std::less<>>;
DocumentMap IndexDocuments(const std::vector<Document>& documents);

enum class RelationType { kExplicit, kImplicit, kAltLex, kEntRel };

const char* RelationTypeName(RelationType type);

struct DiscourseRelation {
  std::string doc_id;
  int relation_id = 0;
  RelationType relation_type = RelationType::kExplicit;
  std::vector<int> connective_tokens;
  std::vector<int> arg1_tokens;
  std::vector<int> arg2_tokens;
  std::vector<std::string> senses;

  friend bool operator==(const DiscourseRelation&, const DiscourseRelation&) = default;
};

// Reads the CoNLL parses file (a JSON object keyed by DocID). Documents come
// back in DocID order; only doc ids with both a parse and a raw text are
// returned, and a parse without raw text is an error. Dependency parses are
// ignored.
std::vector<Document> LoadParses(std::istream& parses_json,
                                 const std::map<std::string, std::string>& raw_texts);

// Reads every regular file of `dir` as a raw text keyed by its file name.
std::map<std::string, std::string> ReadRawTexts(const std::string& dir);

// Reads a relations file, one JSON object per line. TokenList entries may be
// plain document offsets or the shared task's 5-tuples.
std::vector<DiscourseRelation> LoadRelations(std::istream& relations_jsonl);

struct ExportOptions {
  // Emit [char_begin, char_end, doc_index, sent_index, index_in_sentence]
  // instead of bare document offsets.
  bool conll_tokenlist = false;
};

void ExportRelations(const std::vector<DiscourseRelation>& relations,
                     const DocumentMap& documents, std::ostream& out,
                     const ExportOptions& options = {});

std::string ExportRelationsToString(const std::vector<DiscourseRelation>& relations,
                                    const DocumentMap& documents,
                                    const ExportOptions& options = {});

}  // namespace disco

#endif  // DISCO_CORPUS_H_
