#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "corpus.hpp"
#include "json.hpp"
#include "legfront/io.hpp"

using json = nlohmann::json;
using testing_support::corpus_dir;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "legfront");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = legfront::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string corpus(const char* name) { return (corpus_dir() / name).string(); }

}  // namespace

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"nonsense", corpus("unknot.front")}).code, 2);
  EXPECT_EQ(run({"pushoff", corpus("unknot.front")}).code, 2);
  EXPECT_EQ(run({"double", corpus("unknot.front"), "-n", "0"}).code, 2);
  EXPECT_EQ(run({"render", corpus("unknot.front"), "--format", "png"}).code, 2);
  EXPECT_EQ(run({"render", corpus("unknot.front"), "--json"}).code, 2);
}

TEST(Cli, HelpExitsZero) {
  const Result r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("invariants"), std::string::npos);
}

TEST(Cli, DomainErrorsExitOne) {
  const Result missing = run({"invariants", corpus("no_such_file.front")});
  EXPECT_EQ(missing.code, 1);
  EXPECT_EQ(missing.err.rfind("legfront: ", 0), 0u);
  EXPECT_EQ(run({"slice-check", corpus("hopf.front")}).code, 1);
  EXPECT_EQ(run({"genus-bound", corpus("trefoil.front"), "-f", "0", "-c", "3"}).code, 1);
  EXPECT_EQ(run({"stein-check", corpus("hopf.front"), "--framings", "0,0,0"}).code, 1);

  const auto bad = std::filesystem::temp_directory_path() / "legfront_cli_bad.front";
  legfront::write_text_file(bad, "L1 Q2 R1\n");
  const Result syntax = run({"invariants", bad.string()});
  EXPECT_EQ(syntax.code, 1);
  EXPECT_NE(syntax.err.find("line 1"), std::string::npos) << syntax.err;
  std::filesystem::remove(bad);
}

TEST(Cli, InvariantsOfTheTrefoil) {
  const Result r = run({"invariants", corpus("trefoil.front"), "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["kind"], "invariants");
  EXPECT_EQ(j["schema_version"], "1.0");
  EXPECT_EQ(j["components"][0]["tb"], 1);
  EXPECT_EQ(j["components"][0]["rot"], 0);
  EXPECT_EQ(j["components"][0]["writhe"], 3);
  const Result text = run({"invariants", corpus("trefoil.front")});
  EXPECT_EQ(text.code, 0);
  EXPECT_NE(text.out.find("tb"), std::string::npos);
}

TEST(Cli, SliceCheckOfTheTripleDouble) {
  const Result r = run({"slice-check", corpus("wh3_trefoil.front"), "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["verdict"], "NotSlice");
  EXPECT_EQ(j["tb"], 1);
  EXPECT_EQ(run({"slice-check", corpus("unknot.front")}).code, 0);
}

TEST(Cli, GridInputIsLegendrianized) {
  const Result r = run({"invariants", corpus("trefoil_left.grid"), "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out)["components"][0]["tb"], -6);
}

TEST(Cli, PushoffReportsTheLinkingNumber) {
  const Result r = run({"pushoff", corpus("trefoil.front"), "-r", "1", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_TRUE(j.contains("word"));
  const auto word = legfront::parse_front(j["word"].get<std::string>());
  EXPECT_GT(word.size(), 7u);
}

TEST(Cli, OutputFilesRoundTrip) {
  const auto path = std::filesystem::temp_directory_path() / "legfront_cli_double.front";
  const Result r = run({"double", corpus("trefoil.front"), "-n", "2", "-o", path.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  const Result inv = run({"invariants", path.string(), "--json"});
  EXPECT_EQ(json::parse(inv.out)["components"][0]["tb"], 1);
  std::filesystem::remove(path);
}

TEST(Cli, SteinAndGenus) {
  const json s =
      json::parse(run({"stein-check", corpus("trefoil.front"), "--framings", "0", "--json"}).out);
  EXPECT_EQ(s["handles"][0]["status"], "ExactStein");
  const json g =
      json::parse(run({"genus-bound", corpus("trefoil.front"), "-f", "0", "--json"}).out);
  EXPECT_EQ(g["bound"], 1);
}

TEST(Cli, OutputIsDeterministic) {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"fuzz", corpus("figure_eight.front"), "--steps", "300",
                                 "--seed", "5", "--json"},
        std::vector<std::string>{"render", corpus("trefoil.front"), "--format", "svg"},
        std::vector<std::string>{"invariants", corpus("bb5_c4.front"), "--json"}}) {
    const Result a = run(args);
    const Result b = run(args);
    EXPECT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
  }
}

TEST(Cli, VerifyAgreesOnTheCorpus) {
  for (const char* name : {"trefoil.front", "hopf.front", "figure_eight.front", "unlink3.front"}) {
    const Result r = run({"verify", corpus(name)});
    EXPECT_EQ(r.code, 0) << name << ' ' << r.err;
  }
}
