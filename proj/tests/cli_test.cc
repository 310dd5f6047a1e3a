#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sys/wait.h>

#include <nlohmann/json.hpp>

#include "test_support.h"

namespace {

namespace fs = std::filesystem;
using disco::testing::FixtureDir;
using disco::testing::ReadFile;

struct RunResult {
  int exit_code;
  std::string out;
  std::string err;
};

class Sandbox {
 public:
  Sandbox() {
    std::random_device rd;
    dir_ = fs::temp_directory_path() / ("disco_cli_" + std::to_string(rd()));
    fs::create_directories(dir_);
  }
  ~Sandbox() { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  RunResult Run(const std::string& args, const std::string& env = "") const {
    std::string out = path("stdout.txt"), err = path("stderr.txt");
    std::string cmd = env + " \"" DISCO_CLI "\" " + args + " >\"" + out + "\" 2>\"" + err + "\"";
    int status = std::system(cmd.c_str());
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, ReadFile(out), ReadFile(err)};
  }

  std::string CorpusArgs() const {
    return "--parses \"" + FixtureDir() + "/parses.json\" --raw \"" + FixtureDir() + "/raw\"";
  }

  RunResult Train(const std::string& model, const std::string& extra = "") const {
    return Run("train --relations \"" + FixtureDir() + "/relations.jsonl\" " + CorpusArgs() +
               " --out \"" + path(model) + "\" " + extra);
  }

  RunResult Parse(const std::string& model, const std::string& out,
                  const std::string& extra = "") const {
    return Run("parse --model \"" + path(model) + "\" " + CorpusArgs() + " --out \"" +
               path(out) + "\" " + extra);
  }

 private:
  fs::path dir_;
};

TEST_CASE("train, parse and score the fixture end to end") {
  Sandbox box;
  RunResult train = box.Train("model.json", "--min-leaf 1");
  REQUIRE(train.exit_code == 0);
  CHECK(train.out.empty());
  CHECK(train.err.find("lexicon 8 connectives") != std::string::npos);

  RunResult parse = box.Parse("model.json", "pred.jsonl");
  REQUIRE(parse.exit_code == 0);
  CHECK(parse.err.find("12 relations") != std::string::npos);

  RunResult score = box.Run("score --gold \"" + FixtureDir() + "/relations.jsonl\" --pred \"" +
                            box.path("pred.jsonl") + "\" --table");
  REQUIRE(score.exit_code == 0);
  size_t table = score.out.find("dimension");
  REQUIRE(table != std::string::npos);
  nlohmann::json report = nlohmann::json::parse(score.out.substr(0, table));
  for (const char* dim : {"connective", "arg1", "arg2", "relation"}) {
    CAPTURE(dim);
    CHECK(report[dim]["f1"] == 1.0);
  }
}

TEST_CASE("outputs are byte-identical across runs and thread counts") {
  Sandbox box;
  REQUIRE(box.Train("a.json").exit_code == 0);
  REQUIRE(box.Train("b.json").exit_code == 0);
  CHECK(ReadFile(box.path("a.json")) == ReadFile(box.path("b.json")));
  REQUIRE(box.Parse("a.json", "p1.jsonl", "--parallelism 1").exit_code == 0);
  REQUIRE(box.Parse("a.json", "p4.jsonl", "--parallelism 4").exit_code == 0);
  CHECK(ReadFile(box.path("p1.jsonl")) == ReadFile(box.path("p4.jsonl")));
  REQUIRE(box.Parse("a.json", "conll.jsonl", "--conll-tokenlist").exit_code == 0);
  std::string first_line = ReadFile(box.path("conll.jsonl"));
  first_line = first_line.substr(0, first_line.find('\n'));
  nlohmann::json rel = nlohmann::json::parse(first_line);
  CHECK(rel["Connective"]["TokenList"][0].is_array());
  CHECK(rel["Connective"]["TokenList"][0].size() == 5);
}

TEST_CASE("missing inputs exit 2 and name the path") {
  Sandbox box;
  RunResult r = box.Run("train --relations /nonexistent/rel.jsonl " + box.CorpusArgs() +
                        " --out " + box.path("m.json"));
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("/nonexistent/rel.jsonl") != std::string::npos);
  CHECK_FALSE(fs::exists(box.path("m.json")));

  r = box.Parse("missing.json", "p.jsonl");
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("missing.json") != std::string::npos);
}

TEST_CASE("usage errors exit 2; help exits 0") {
  Sandbox box;
  CHECK(box.Run("").exit_code == 2);
  CHECK(box.Run("train --out x.json").exit_code == 2);
  CHECK(box.Run("frobnicate").exit_code == 2);
  CHECK(box.Run("train --min-leaf 0 --relations a --parses b --raw c --out d").exit_code == 2);
  CHECK(box.Run("--help").exit_code == 0);
}

TEST_CASE("a model with another format version is refused") {
  Sandbox box;
  REQUIRE(box.Train("model.json").exit_code == 0);
  nlohmann::json js = nlohmann::json::parse(ReadFile(box.path("model.json")));
  js["format_version"] = 99;
  std::ofstream(box.path("v99.json")) << js.dump();
  RunResult r = box.Parse("v99.json", "p.jsonl");
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("format_version 99") != std::string::npos);
}

TEST_CASE("an empty corpus parses to an empty relations file") {
  Sandbox box;
  REQUIRE(box.Train("model.json").exit_code == 0);
  fs::create_directories(box.path("raw"));
  std::ofstream(box.path("empty.json")) << "{}";
  RunResult r = box.Run("parse --model " + box.path("model.json") + " --parses " +
                        box.path("empty.json") + " --raw " + box.path("raw") + " --out " +
                        box.path("p.jsonl"));
  CHECK(r.exit_code == 0);
  CHECK(ReadFile(box.path("p.jsonl")).empty());
}

TEST_CASE("malformed relations exit 2 and name the line") {
  Sandbox box;
  std::ofstream(box.path("bad.jsonl")) << ReadFile(FixtureDir() + "/relations.jsonl")
                                       << "{\"DocID\": \n";
  RunResult r = box.Run("score --gold " + box.path("bad.jsonl") + " --pred " +
                        box.path("bad.jsonl"));
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("line 13") != std::string::npos);
}

TEST_CASE("DISCO_LOG overrides the log level") {
  Sandbox box;
  RunResult quiet = box.Run("--log-level info train --relations \"" + FixtureDir() +
                                "/relations.jsonl\" " + box.CorpusArgs() + " --out " +
                                box.path("m.json"),
                            "DISCO_LOG=off");
  CHECK(quiet.exit_code == 0);
  CHECK(quiet.err.empty());
}

}  // namespace
