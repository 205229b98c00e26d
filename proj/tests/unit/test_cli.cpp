#include "realab/cli/commands.hpp"
#include "realab/cli/paper_check.hpp"

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sys/wait.h>

using realab::cli::json;
namespace fs = std::filesystem;

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(REALAB_CLI_PATH) + " " + args + " 2>/dev/null";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("realab_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

  fs::path dir_;
};

/// Checks the subset of JSON Schema used by the published report schema.
bool validate(const json& schema, const json& value, std::string& why, const std::string& at = "$") {
  if (schema.contains("type")) {
    const std::string t = schema["type"];
    const bool ok = (t == "object" && value.is_object()) || (t == "array" && value.is_array()) ||
                    (t == "string" && value.is_string());
    if (!ok) {
      why = at + ": expected " + t;
      return false;
    }
  }
  if (schema.contains("enum") &&
      std::find(schema["enum"].begin(), schema["enum"].end(), value) == schema["enum"].end()) {
    why = at + ": value not in enum";
    return false;
  }
  if (value.is_string()) {
    const std::string s = value;
    if (schema.contains("minLength") && s.size() < schema["minLength"].get<std::size_t>()) {
      why = at + ": too short";
      return false;
    }
    if (schema.contains("pattern") && !std::regex_search(s, std::regex(schema["pattern"].get<std::string>()))) {
      why = at + ": pattern mismatch";
      return false;
    }
  }
  if (value.is_array()) {
    if (schema.contains("minItems") && value.size() < schema["minItems"].get<std::size_t>()) {
      why = at + ": too few items";
      return false;
    }
    if (schema.contains("items"))
      for (std::size_t i = 0; i < value.size(); ++i)
        if (!validate(schema["items"], value[i], why, at + "[" + std::to_string(i) + "]")) return false;
  }
  if (value.is_object()) {
    if (schema.contains("required"))
      for (const auto& key : schema["required"])
        if (!value.contains(key.get<std::string>())) {
          why = at + ": missing " + key.get<std::string>();
          return false;
        }
    const json props = schema.value("properties", json::object());
    for (const auto& [key, v] : value.items()) {
      if (props.contains(key)) {
        if (!validate(props[key], v, why, at + "." + key)) return false;
      } else if (schema.contains("additionalProperties")) {
        const json& extra = schema["additionalProperties"];
        if (extra.is_boolean() && !extra.get<bool>()) {
          why = at + ": unexpected key " + key;
          return false;
        }
        if (extra.is_object() && !validate(extra, v, why, at + "." + key)) return false;
      }
    }
  }
  return true;
}

}  // namespace

TEST_F(CliTest, CohomologyConnectedThreefold) {
  const auto path = write("t.json", R"({"factors": ["connected", "connected", "connected"]})");
  const auto r = run("cohomology " + path + " --k 2");
  ASSERT_EQ(r.code, 0);
  const json j = json::parse(r.out);
  EXPECT_EQ(j["profile"]["ranks"], (json{{"1", "0"}, {"2", "0"}, {"3", "0"}, {"4", "1"}}));
  EXPECT_EQ(j["budget"], "0");
}

TEST_F(CliTest, CohomologySplitCurve) {
  const auto path = write("t.json", R"({"factors": ["split"]})");
  const auto r = run("cohomology " + path + " --k 1");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(json::parse(r.out)["profile"]["free_rank"], "1");
}

TEST_F(CliTest, MalformedInputsExitTwo) {
  EXPECT_EQ(run("cohomology " + write("a.json", R"({"g": 1, "h1": {"sigma": [[1, 1], [0, 1]]}})")).code, 2);
  EXPECT_EQ(run("cohomology " + write("b.json", "{not json")).code, 2);
  EXPECT_EQ(run("cohomology " + (dir_ / "missing.json").string()).code, 2);
  EXPECT_EQ(run("no-such-command").code, 2);
  EXPECT_EQ(run("principalize " + write("c.json", R"({"lattice": {"sigma": [[1, 0], [0, 1]]},
                                                      "form": [[0, 1], [-1, 0]]})")).code, 2);
}

TEST_F(CliTest, PrincipalizeTranscripts) {
  const auto one = run("principalize " + write("p1.json", R"({"lattice": {"sigma": [[1, 0], [0, -1]]},
                                                              "form": [[0, 1], [-1, 0]]})"));
  ASSERT_EQ(one.code, 0);
  EXPECT_TRUE(json::parse(one.out)["steps"].empty());

  const auto nine = run("principalize " + write("p9.json", R"({"lattice": {"sigma": [[1, 0], [0, -1]]},
                                                               "form": [[0, "9"], ["-9", 0]]})"));
  ASSERT_EQ(nine.code, 0);
  const json j = json::parse(nine.out);
  ASSERT_EQ(j["steps"].size(), 2u);
  EXPECT_EQ(j["steps"][0]["prime"], "3");
  EXPECT_EQ(j["steps"][1]["prime"], "3");
  EXPECT_EQ(j["degree"], "1");
}

TEST_F(CliTest, OtherSubcommands) {
  const auto torus = write("t.json", R"({"factors": ["split", "split", "split"]})");
  EXPECT_EQ(json::parse(run("pi0 " + torus).out)["pi0"], "8");
  EXPECT_EQ(json::parse(run("budget " + torus).out)["budget"], "12");

  const auto period = write("m.json", R"({"M": [[0, 1], [1, 0]]})");
  const json c = json::parse(run("classify " + period).out);
  EXPECT_EQ(c["type"], "(2,2)");

  const auto ppav = write("e.json", R"({"lattice": {"sigma": [[1,0,0,0],[0,1,0,0],[0,0,-1,0],[0,0,0,-1]]},
                                         "form": [[0,0,1,0],[0,0,0,1],[-1,0,0,0],[0,-1,0,0]]})");
  const json mc = json::parse(run("minimal-class " + ppav).out);
  EXPECT_EQ(mc["degree"], "2");
  EXPECT_EQ(mc["invariant"], "true");

  const auto elem = write("f.json", R"({"torus": {"factors": ["split"]}, "element": {"0": "1"}})");
  const auto f = run("fourier " + elem);
  EXPECT_EQ(f.code, 0);

  const auto kun = write("k.json", R"({"factors": [{"factors": ["split", "connected"]},
                                                   {"factors": ["connected"]}]})");
  const json k = json::parse(run("kunneth " + kun + " --n 3 --k 0").out);
  EXPECT_EQ(k["consistent"], "true");

  const json s = json::parse(run("hecke sunit --p 3 --q 5 --bound 30 --target 2 --tolerance 1/100").out);
  EXPECT_EQ(s["n"], "27");
  EXPECT_EQ(s["m"], "-18");
}

TEST_F(CliTest, HeckeApproachIsByteDeterministic) {
  const auto target = write("t.json", R"({"start": [[2, 1], [1, 3]], "target": [[5, -1], [-1, 1]]})");
  const std::string args = "hecke approach --g 2 --type 0 --p 3 --q 5 --target " + target +
                           " --budget 5000 --seed 7";
  const auto a = run(args);
  const auto b = run(args);
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  const json j = json::parse(a.out);
  EXPECT_EQ(j["generation_claimed"], "false");
  EXPECT_TRUE(j.contains("trace"));
}

TEST_F(CliTest, SelfCheckPassesAndIsDeterministic) {
  const auto a = run("paper-check");
  const auto b = run("paper-check");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(json::parse(a.out)["all_pass"], "true");
}

TEST_F(CliTest, CorruptedSignFailsBeauville) {
  const auto r = run("paper-check --corrupt-sign");
  EXPECT_EQ(r.code, 1);
  const json report = json::parse(r.out);
  bool beauville_failed = false;
  for (const auto& c : report["claims"])
    if (c["id"].get<std::string>().rfind("beauville", 0) == 0 && c["pass"] == "false")
      beauville_failed = true;
  EXPECT_TRUE(beauville_failed);
}

TEST(ClaimReport, ValidatesAgainstSchema) {
  std::ifstream in(REALAB_SCHEMA_PATH);
  ASSERT_TRUE(in.good());
  const json schema = json::parse(in);
  const json report = realab::cli::to_json(realab::cli::run_paper_check());
  std::string why;
  EXPECT_TRUE(validate(schema, report, why)) << why;

  std::set<std::string> ids;
  for (const auto& c : report["claims"]) EXPECT_TRUE(ids.insert(c["id"].get<std::string>()).second);

  json broken = report;
  broken["claims"][0]["provenance"] = "guess";
  EXPECT_FALSE(validate(schema, broken, why));
}
