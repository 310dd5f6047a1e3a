// Command-line front end for the explicit discourse parser.
//
//   disco train --relations R.jsonl --parses parses.json --raw DIR --out model.json
//   disco parse --model model.json --parses parses.json --raw DIR --out pred.jsonl
//   disco score --gold R.jsonl --pred pred.jsonl [--table]
//
// Exit codes: 0 success, 1 internal error, 2 usage or input error. Logs go to
// standard error; DISCO_LOG overrides --log-level.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

#include <CLI11.hpp>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "disco/corpus.h"
#include "disco/error.h"
#include "disco/evaluation.h"
#include "disco/pipeline.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitInput = 2;

// Failure to open or read a named file.
class FileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::ifstream OpenInput(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileError("cannot read " + path);
  return in;
}

void WriteOutput(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw FileError("cannot write " + path);
  out << content;
  if (!out) throw FileError("error writing " + path);
}

// Wraps library errors with the file they came from.
template <typename F>
auto WithFile(const std::string& path, F&& f) {
  try {
    return f();
  } catch (const disco::Error& e) {
    throw disco::Error(e.kind(), path + ": " + e.what());
  }
}

std::vector<disco::Document> LoadCorpus(const std::string& parses_path,
                                        const std::string& raw_dir) {
  auto raw = disco::ReadRawTexts(raw_dir);
  std::ifstream in = OpenInput(parses_path);
  return WithFile(parses_path, [&] { return disco::LoadParses(in, raw); });
}

std::vector<disco::DiscourseRelation> LoadRelationsFile(const std::string& path) {
  std::ifstream in = OpenInput(path);
  return WithFile(path, [&] { return disco::LoadRelations(in); });
}

struct TrainArgs {
  std::string relations, parses, raw, out;
  int min_leaf = 2;
};

struct ParseArgs {
  std::string model, parses, raw, out;
  bool conll_tokenlist = false;
  int parallelism = 1;
};

struct ScoreArgs {
  std::string gold, pred;
  bool table = false;
};

int RunTrain(const TrainArgs& args) {
  auto documents = LoadCorpus(args.parses, args.raw);
  auto gold = LoadRelationsFile(args.relations);
  disco::TrainingSummary summary;
  disco::ParserModel model =
      disco::TrainModel(documents, gold, {.min_leaf = args.min_leaf}, &summary);
  std::ostringstream out;
  disco::SaveModel(model, out);
  WriteOutput(args.out, out.str());
  spdlog::info(
      "trained on {} documents: lexicon {} connectives; usage instances {} ({} positive); "
      "argument instances {}; usage tree {} nodes; argument tree {} nodes; {} gold "
      "connectives not matched",
      documents.size(), summary.lexicon_size, summary.usage_instances, summary.usage_positives,
      summary.argument_instances, summary.usage_tree_nodes, summary.argument_tree_nodes,
      summary.skipped_gold_connectives);
  return kExitOk;
}

int RunParse(const ParseArgs& args) {
  std::ifstream model_in = OpenInput(args.model);
  disco::ParserModel model = WithFile(args.model, [&] { return disco::LoadModel(model_in); });
  auto documents = LoadCorpus(args.parses, args.raw);
  disco::ParseStats stats;
  auto relations = disco::ParseCorpus(documents, model, args.parallelism, &stats);
  std::string text = disco::ExportRelationsToString(relations, disco::IndexDocuments(documents),
                                                    {.conll_tokenlist = args.conll_tokenlist});
  WriteOutput(args.out, text);
  spdlog::info("parsed {} documents: {} candidates, {} discourse usages, {} dropped, {} relations",
               documents.size(), stats.candidates, stats.discourse_usages, stats.dropped,
               stats.relations);
  return kExitOk;
}

int RunScore(const ScoreArgs& args) {
  auto gold = LoadRelationsFile(args.gold);
  auto pred = LoadRelationsFile(args.pred);
  disco::EvaluationReport report = disco::Score(gold, pred);
  std::cout << report.ToJson().dump(2) << '\n';
  if (args.table) std::cout << report.ToTable();
  return kExitOk;
}

void ConfigureLogging(const std::string& flag_level) {
  auto logger = spdlog::stderr_color_mt("disco");
  spdlog::set_default_logger(logger);
  spdlog::set_pattern("[%l] %v");
  std::string level = flag_level;
  if (const char* env = std::getenv("DISCO_LOG"); env != nullptr && *env != '\0') level = env;
  spdlog::set_level(spdlog::level::from_str(level));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Explicit discourse relation parser: train, parse, score"};
  app.require_subcommand(1);
  std::string log_level = "info";
  app.add_option("--log-level", log_level, "trace, debug, info, warn, error, off")
      ->check(CLI::IsMember({"trace", "debug", "info", "warn", "error", "critical", "off"}));

  TrainArgs train;
  auto* train_cmd = app.add_subcommand("train", "Train a model from gold relations");
  train_cmd->add_option("--relations", train.relations, "gold relations (JSON lines)")->required();
  train_cmd->add_option("--parses", train.parses, "parses JSON")->required();
  train_cmd->add_option("--raw", train.raw, "directory of raw texts named by DocID")->required();
  train_cmd->add_option("--out", train.out, "model file to write")->required();
  train_cmd->add_option("--min-leaf", train.min_leaf, "minimum leaf support")
      ->check(CLI::PositiveNumber);

  ParseArgs parse;
  parse.parallelism = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  auto* parse_cmd = app.add_subcommand("parse", "Parse documents with a trained model");
  parse_cmd->add_option("--model", parse.model, "model file")->required();
  parse_cmd->add_option("--parses", parse.parses, "parses JSON")->required();
  parse_cmd->add_option("--raw", parse.raw, "directory of raw texts named by DocID")->required();
  parse_cmd->add_option("--out", parse.out, "relations file to write")->required();
  parse_cmd->add_flag("--conll-tokenlist", parse.conll_tokenlist,
                      "write TokenList entries as 5-tuples");
  parse_cmd->add_option("--parallelism", parse.parallelism, "worker threads")
      ->check(CLI::PositiveNumber);

  ScoreArgs score;
  auto* score_cmd = app.add_subcommand("score", "Score predicted relations against gold");
  score_cmd->add_option("--gold", score.gold, "gold relations")->required();
  score_cmd->add_option("--pred", score.pred, "predicted relations")->required();
  score_cmd->add_flag("--table", score.table, "also print a human-readable table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    ConfigureLogging(log_level);
    if (*train_cmd) return RunTrain(train);
    if (*parse_cmd) return RunParse(parse);
    return RunScore(score);
  } catch (const FileError& e) {
    spdlog::error("{}", e.what());
    return kExitInput;
  } catch (const disco::Error& e) {
    spdlog::error("{}: {}", disco::ErrorKindName(e.kind()), e.what());
    switch (e.kind()) {
      case disco::ErrorKind::kLookup:
      case disco::ErrorKind::kDomain:
      case disco::ErrorKind::kExport:
        return kExitInternal;
      default:
        return kExitInput;
    }
  } catch (const std::exception& e) {
    spdlog::error("internal error: {}", e.what());
    return kExitInternal;
  }
}
