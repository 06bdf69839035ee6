#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "commands.hpp"
#include "homdil/io.hpp"
#include "homdil/report.hpp"

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = homdil::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& rel) { return std::string(HOMDIL_DATA_DIR) + "/" + rel; }

class TempDir {
 public:
  TempDir() : path_(fs::temp_directory_path() / ("homdil_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                                 ::testing::UnitTest::GetInstance()->current_test_info()->name())) {
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string write(const std::string& name, const std::string& text) const {
    const fs::path p = path_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

 private:
  fs::path path_;
};

}  // namespace

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"info"}).code, 2);
  EXPECT_EQ(run({"info", "--system", data("nope.json")}).code, 2);
  EXPECT_EQ(run({"verify", "--system", data("4.5i/system.json")}).code, 2);
  EXPECT_EQ(run({"equiv", "--system", data("4.5i/system.json"), data("4.5i/canonical.json")}).code, 2);
  EXPECT_EQ(run({"report", "4.9"}).code, 2);
}

TEST(Cli, HelpExitsZero) {
  const Result r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("strong-iso"), std::string::npos);
}

TEST(Cli, MalformedInputExitsTwoWithDiagnostic) {
  TempDir dir;
  const std::string broken = dir.write("broken.json", "{\"builtin\": \"transpose\", ");
  const Result r = run({"info", "--system", broken});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("error: "), std::string::npos);
  EXPECT_NE(r.err.find("broken.json"), std::string::npos);

  const std::string shape = dir.write("d.json", R"({"pi": [[[1]], [[0]], [[1]]], "S": [[1, 1]], "T": [[1]]})");
  const Result s = run({"verify", "--system", data("4.5i/system.json"), "--dilation", shape});
  EXPECT_EQ(s.code, 2);
  EXPECT_NE(s.err.find("dilation.S: shape 1x2"), std::string::npos);
}

TEST(Cli, InfoTextAndJson) {
  const Result text = run({"info", "--system", data("4.5ii/system.json")});
  ASSERT_EQ(text.code, 0) << text.err;
  EXPECT_NE(text.out.find("universal dilation dim: 6"), std::string::npos);
  EXPECT_NE(text.out.find("canonical dilation dim: 3"), std::string::npos);
  EXPECT_NE(text.out.find("M: span{e2, e4, e5}"), std::string::npos);
  EXPECT_NE(text.out.find("unique dilation class: no"), std::string::npos);
  const Result js = run({"info", "--system", data("4.5ii/system.json"), "--json"});
  ASSERT_EQ(js.code, 0);
  const json doc = json::parse(js.out);
  EXPECT_EQ(doc["universal_dim"], 6);
  EXPECT_EQ(doc["canonical_dim"], 3);
  EXPECT_EQ(doc["ker_S_dim"], 5);
}

TEST(Cli, ConstructionsRoundTripThroughVerify) {
  TempDir dir;
  for (const char* cmd : {"universal", "canonical", "principle"}) {
    const Result r = run({cmd, "--system", data("4.7i/system.json"), "--json"});
    ASSERT_EQ(r.code, 0) << cmd << r.err;
    const json doc = json::parse(r.out);
    const std::string file = dir.write(std::string(cmd) + ".json", r.out);
    const Result v = run({"verify", "--system", data("4.7i/system.json"), "--dilation", file, "--json"});
    EXPECT_EQ(v.code, 0) << cmd;
    const json vd = json::parse(v.out);
    EXPECT_TRUE(vd["valid"].get<bool>());
    EXPECT_EQ(vd["dim_w"], doc["dim_w"]);
  }
  const Result text = run({"canonical", "--system", data("4.7i/system.json")});
  EXPECT_NE(text.out.find("dim_w: 4"), std::string::npos);
  EXPECT_NE(text.out.find("irreducible: yes"), std::string::npos);
}

TEST(Cli, VerifyInvalidExitsOne) {
  TempDir dir;
  const std::string bad = dir.write("bad.json", R"({"pi": [[[1,0],[0,0]], [[0,0],[0,0]], [[0,0],[0,1]]], "S": [[1, 1]], "T": [[1],[1]]})");
  const Result r = run({"verify", "--system", data("4.5i/system.json"), "--dilation", bad});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("INVALID: dilation identity fails at E11"), std::string::npos);
  const Result j = run({"verify", "--system", data("4.5i/system.json"), "--dilation", bad, "--json"});
  EXPECT_EQ(j.code, 1);
  EXPECT_FALSE(json::parse(j.out)["valid"].get<bool>());
}

TEST(Cli, VerifyDisplayedSystems) {
  for (const auto& [sys, d] : std::vector<std::pair<std::string, std::string>>{
           {"4.5ii/system.json", "4.5ii/pi4.json"},
           {"4.7i/system.json", "4.7i/five_1.json"},
           {"4.7ii/system.json", "4.7ii/canonical.json"},
           {"4.8/system_d.json", "4.8/dilation_d.json"}}) {
    const Result r = run({"verify", "--system", data(sys), "--dilation", data(d)});
    EXPECT_EQ(r.code, 0) << d << r.out << r.err;
    EXPECT_NE(r.out.find("VALID dilation"), std::string::npos) << d;
  }
}

TEST(Cli, Equivalence) {
  const std::string sys = data("4.5ii/system.json");
  const Result no = run({"equiv", "--system", sys, data("4.5ii/pi5_1.json"), data("4.5ii/pi5_2.json")});
  EXPECT_EQ(no.code, 0);
  EXPECT_NE(no.out.find("INEQUIVALENT"), std::string::npos);
  EXPECT_NE(no.out.find("K1 = span{e2}"), std::string::npos);
  EXPECT_NE(no.out.find("K2 = span{e4}"), std::string::npos);
  const Result yes = run({"equiv", "--system", sys, data("4.5ii/canonical.json"), data("4.5ii/canonical.json"), "--json"});
  EXPECT_EQ(yes.code, 0);
  const json doc = json::parse(yes.out);
  EXPECT_EQ(doc["verdict"], "EQUIVALENT");
  EXPECT_TRUE(doc.contains("R"));
}

TEST(Cli, StrongIsoVerdicts) {
  TempDir dir;
  const std::string e2 = dir.write("e2.json", R"({"ambient_dim": 6, "basis": [[0,1,0,0,0,0]]})");
  const std::string e4 = dir.write("e4.json", R"({"ambient_dim": 6, "basis": [[0,0,0,1,0,0]]})");
  const std::string sys = data("4.5ii/system.json");
  const Result text = run({"strong-iso", "--system", sys, "--k1", e2, "--k2", e4});
  EXPECT_EQ(text.code, 0);
  EXPECT_NE(text.out.find("strongly isomorphic: no"), std::string::npos);
  const Result js = run({"strong-iso", "--system", sys, "--k1", e2, "--k2", e2, "--json"});
  EXPECT_EQ(json::parse(js.out)["verdict"], "yes");
  const std::string e3 = dir.write("e3.json", R"({"ambient_dim": 6, "basis": [[0,0,1,0,0,0]]})");
  EXPECT_EQ(run({"strong-iso", "--system", sys, "--k1", e3, "--k2", e3}).code, 2);
}

TEST(Cli, ClassifyTextMatchesJson) {
  const std::string sys = data("4.7i/system.json");
  const Result text = run({"classify", "--system", sys});
  const Result js = run({"classify", "--system", sys, "--json"});
  ASSERT_EQ(text.code, 0);
  ASSERT_EQ(js.code, 0);
  const json doc = json::parse(js.out);
  EXPECT_NE(text.out.find("M: " + doc["M"].get<std::string>()), std::string::npos);
  for (std::size_t i = 0; i < doc["classes"].size(); ++i) {
    EXPECT_NE(text.out.find("[" + std::to_string(i) + "] K = " + doc["classes"][i]["K"].get<std::string>()),
              std::string::npos);
  }
}

TEST(Cli, ReportAllAndVerdictParity) {
  const Result text = run({"report", "all"});
  const Result js = run({"report", "all", "--json"});
  EXPECT_EQ(text.code, 0);
  EXPECT_EQ(js.code, 0);
  const json docs = json::parse(js.out);
  ASSERT_EQ(docs.size(), homdil::report_ids().size());
  for (const auto& d : docs)
    for (const auto& e : d["entries"])
      EXPECT_NE(text.out.find("[" + e["status"].get<std::string>() + "] " + e["id"].get<std::string>()),
                std::string::npos);
}

TEST(Cli, JsonDeterministic) {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"report", "4.7i", "--json", "--seed", "3"},
        std::vector<std::string>{"classify", "--system", data("4.5ii/system.json"), "--json"}}) {
    EXPECT_EQ(run(args).out, run(args).out);
  }
}
