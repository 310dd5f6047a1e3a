#include "disco/corpus.h"

#include <filesystem>
#include <fstream>
#include <istream>
#include <sstream>

#include <json.hpp>

#include "disco/error.h"

namespace disco {
namespace {

using nlohmann::json;

std::vector<size_t> ScalarOffsets(std::string_view utf8) {
  std::vector<size_t> offsets;
  offsets.reserve(utf8.size() + 1);
  for (size_t i = 0; i < utf8.size(); ++i) {
    if ((static_cast<unsigned char>(utf8[i]) & 0xC0) != 0x80) offsets.push_back(i);
  }
  offsets.push_back(utf8.size());
  return offsets;
}

[[noreturn]] void FormatError(const std::string& doc_id, const std::string& what) {
  throw Error(ErrorKind::kInputFormat, "document " + doc_id + ": " + what);
}

Sentence ReadSentence(const std::string& doc_id, int sent_index, int first_doc_index,
                      const json& js) {
  if (!js.is_object() || !js.contains("parsetree") || !js["parsetree"].is_string() ||
      !js.contains("words") || !js["words"].is_array()) {
    FormatError(doc_id, "sentence " + std::to_string(sent_index) +
                            " lacks a parsetree string or a words array");
  }
  ParseTree tree = [&] {
    try {
      return ParseTree::Parse(js["parsetree"].get<std::string>());
    } catch (const Error& e) {
      FormatError(doc_id, "sentence " + std::to_string(sent_index) + ": " + e.what());
    }
  }();

  std::vector<Token> tokens;
  const json& words = js["words"];
  for (size_t i = 0; i < words.size(); ++i) {
    const json& w = words[i];
    if (!w.is_array() || w.size() < 2 || !w[0].is_string() || !w[1].is_object()) {
      FormatError(doc_id, "sentence " + std::to_string(sent_index) + " word " +
                              std::to_string(i) + " is not [surface, {attributes}]");
    }
    const json& attrs = w[1];
    try {
      Token t;
      t.surface = w[0].get<std::string>();
      t.char_begin = attrs.at("CharacterOffsetBegin").get<int>();
      t.char_end = attrs.at("CharacterOffsetEnd").get<int>();
      t.pos = attrs.at("PartOfSpeech").get<std::string>();
      t.doc_index = first_doc_index + static_cast<int>(i);
      t.sent_index = sent_index;
      t.index_in_sentence = static_cast<int>(i);
      tokens.push_back(std::move(t));
    } catch (const json::exception& e) {
      FormatError(doc_id, "sentence " + std::to_string(sent_index) + " word " +
                              std::to_string(i) + ": " + e.what());
    }
  }
  if (static_cast<int>(tokens.size()) != tree.num_tokens()) {
    throw Error(ErrorKind::kAlignment,
                "document " + doc_id + " sentence " + std::to_string(sent_index) + ": tree has " +
                    std::to_string(tree.num_tokens()) + " leaves but " +
                    std::to_string(tokens.size()) + " words");
  }
  return Sentence{sent_index, std::move(tokens), std::move(tree)};
}

std::vector<int> ReadTokenList(const json& span, int line_no, const char* field) {
  std::vector<int> out;
  if (span.is_null()) return out;
  if (!span.is_object()) {
    throw Error(ErrorKind::kInputFormat,
                "line " + std::to_string(line_no) + ": " + field + " is not an object");
  }
  auto it = span.find("TokenList");
  if (it == span.end()) return out;
  for (const json& entry : *it) {
    if (entry.is_number_integer()) {
      out.push_back(entry.get<int>());
    } else if (entry.is_array() && entry.size() == 5) {
      out.push_back(entry[2].get<int>());
    } else {
      throw Error(ErrorKind::kInputFormat, "line " + std::to_string(line_no) + ": " + field +
                                               " TokenList entry is neither an offset "
                                               "nor a 5-tuple");
    }
  }
  return out;
}

RelationType ParseRelationType(const std::string& name, int line_no) {
  if (name == "Explicit") return RelationType::kExplicit;
  if (name == "Implicit") return RelationType::kImplicit;
  if (name == "AltLex") return RelationType::kAltLex;
  if (name == "EntRel") return RelationType::kEntRel;
  throw Error(ErrorKind::kInputFormat,
              "line " + std::to_string(line_no) + ": unknown relation Type \"" + name + "\"");
}

}  // namespace

Document::Document(std::string doc_id, std::string raw_text, std::vector<Sentence> sentences)
    : doc_id_(std::move(doc_id)),
      raw_text_(std::move(raw_text)),
      sentences_(std::move(sentences)),
      scalar_offsets_(ScalarOffsets(raw_text_)) {
  for (size_t s = 0; s < sentences_.size(); ++s) {
    for (size_t i = 0; i < sentences_[s].tokens.size(); ++i) {
      token_index_.emplace_back(static_cast<int>(s), static_cast<int>(i));
    }
  }
}

const Token& Document::token(int doc_index) const {
  if (doc_index < 0 || doc_index >= num_tokens()) {
    throw Error(ErrorKind::kDomain, "document " + doc_id_ + ": token index " +
                                        std::to_string(doc_index) + " out of range");
  }
  auto [s, i] = token_index_[doc_index];
  return sentences_[s].tokens[i];
}

std::string Document::RawSlice(int char_begin, int char_end) const {
  if (char_begin < 0 || char_end < char_begin || char_end > raw_length()) {
    throw Error(ErrorKind::kDomain, "document " + doc_id_ + ": character range out of bounds");
  }
  size_t b = scalar_offsets_[char_begin];
  return raw_text_.substr(b, scalar_offsets_[char_end] - b);
}

DocumentMap IndexDocuments(const std::vector<Document>& documents) {
  DocumentMap map;
  for (const Document& d : documents) map.emplace(d.doc_id(), &d);
  return map;
}

const char* RelationTypeName(RelationType type) {
  switch (type) {
    case RelationType::kExplicit: return "Explicit";
    case RelationType::kImplicit: return "Implicit";
    case RelationType::kAltLex: return "AltLex";
    case RelationType::kEntRel: return "EntRel";
  }
  return "Explicit";
}

std::vector<Document> LoadParses(std::istream& parses_json,
                                 const std::map<std::string, std::string>& raw_texts) {
  json root;
  try {
    root = json::parse(parses_json);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::kInputFormat, std::string("parses file: ") + e.what());
  }
  if (!root.is_object()) {
    throw Error(ErrorKind::kInputFormat, "parses file: top level is not a JSON object");
  }

  std::vector<Document> documents;
  for (const auto& [doc_id, value] : root.items()) {
    auto raw = raw_texts.find(doc_id);
    if (raw == raw_texts.end()) {
      throw Error(ErrorKind::kMissingDocument, "document " + doc_id + ": no raw text");
    }
    if (!value.is_object() || !value.contains("sentences") || !value["sentences"].is_array()) {
      FormatError(doc_id, "missing sentences array");
    }
    std::vector<Sentence> sentences;
    int next_doc_index = 0;
    for (const json& js : value["sentences"]) {
      int sent_index = static_cast<int>(sentences.size());
      sentences.push_back(ReadSentence(doc_id, sent_index, next_doc_index, js));
      next_doc_index += static_cast<int>(sentences.back().tokens.size());
    }

    Document doc(doc_id, raw->second, std::move(sentences));
    int previous_end = 0;
    for (int i = 0; i < doc.num_tokens(); ++i) {
      const Token& t = doc.token(i);
      if (t.char_begin >= t.char_end || t.char_begin < previous_end ||
          t.char_end > doc.raw_length()) {
        throw Error(ErrorKind::kAlignment,
                    "document " + doc_id + " sentence " + std::to_string(t.sent_index) +
                        ": token " + std::to_string(t.index_in_sentence) +
                        " has character offsets out of order or outside the raw text");
      }
      previous_end = t.char_end;
    }
    documents.push_back(std::move(doc));
  }
  return documents;
}

std::map<std::string, std::string> ReadRawTexts(const std::string& dir) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) {
    throw Error(ErrorKind::kMissingDocument, "raw text directory " + dir + " not found");
  }
  std::map<std::string, std::string> texts;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    std::ifstream in(entry.path(), std::ios::binary);
    std::ostringstream content;
    content << in.rdbuf();
    texts.emplace(entry.path().filename().string(), content.str());
  }
  return texts;
}

std::vector<DiscourseRelation> LoadRelations(std::istream& relations_jsonl) {
  std::vector<DiscourseRelation> relations;
  std::string line;
  int line_no = 0;
  while (std::getline(relations_jsonl, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json js;
    try {
      js = json::parse(line);
    } catch (const json::parse_error& e) {
      throw Error(ErrorKind::kInputFormat, "line " + std::to_string(line_no) + ": " + e.what());
    }
    try {
      DiscourseRelation r;
      r.doc_id = js.at("DocID").get<std::string>();
      r.relation_id = js.at("ID").get<int>();
      r.relation_type = ParseRelationType(js.at("Type").get<std::string>(), line_no);
      r.senses = js.at("Sense").get<std::vector<std::string>>();
      r.connective_tokens = ReadTokenList(js.value("Connective", json()), line_no, "Connective");
      r.arg1_tokens = ReadTokenList(js.at("Arg1"), line_no, "Arg1");
      r.arg2_tokens = ReadTokenList(js.at("Arg2"), line_no, "Arg2");
      relations.push_back(std::move(r));
    } catch (const json::exception& e) {
      throw Error(ErrorKind::kInputFormat, "line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return relations;
}

void ExportRelations(const std::vector<DiscourseRelation>& relations,
                     const DocumentMap& documents, std::ostream& out,
                     const ExportOptions& options) {
  for (const DiscourseRelation& r : relations) {
    auto doc_it = documents.find(r.doc_id);
    if (doc_it == documents.end()) {
      throw Error(ErrorKind::kExport, "relation " + std::to_string(r.relation_id) +
                                          " refers to unknown document " + r.doc_id);
    }
    const Document& doc = *doc_it->second;
    auto span = [&](const std::vector<int>& indices) {
      json token_list = json::array();
      std::string raw_text;
      for (int index : indices) {
        if (index < 0 || index >= doc.num_tokens()) {
          throw Error(ErrorKind::kExport, "relation " + std::to_string(r.relation_id) +
                                              " in " + r.doc_id + ": token index " +
                                              std::to_string(index) + " out of range");
        }
        const Token& t = doc.token(index);
        if (options.conll_tokenlist) {
          token_list.push_back({t.char_begin, t.char_end, t.doc_index, t.sent_index,
                                t.index_in_sentence});
        } else {
          token_list.push_back(index);
        }
        if (!raw_text.empty()) raw_text += ' ';
        raw_text += t.surface;
      }
      return json{{"TokenList", std::move(token_list)}, {"RawText", std::move(raw_text)}};
    };
    json js = {
        {"DocID", r.doc_id},
        {"ID", r.relation_id},
        {"Type", RelationTypeName(r.relation_type)},
        {"Sense", r.senses},
        {"Connective", span(r.connective_tokens)},
        {"Arg1", span(r.arg1_tokens)},
        {"Arg2", span(r.arg2_tokens)},
    };
    out << js.dump() << '\n';
  }
}

std::string ExportRelationsToString(const std::vector<DiscourseRelation>& relations,
                                    const DocumentMap& documents,
                                    const ExportOptions& options) {
  std::ostringstream out;
  ExportRelations(relations, documents, out, options);
  return out.str();
}

}  // namespace disco
