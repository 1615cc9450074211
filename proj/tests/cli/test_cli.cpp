#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace fs = std::filesystem;
using nexakt::Json;
using nexakt::cli::run_command;

namespace {

const std::string kPresets = NEXAKT_PRESET_DIR;

std::string preset(const std::string& name) { return kPresets + "/" + name; }

struct Invocation {
  int code = -1;
  std::string out, err;
};

Invocation run(std::vector<std::string> args) {
  std::ostringstream out, err;
  Invocation r;
  r.code = run_command(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("nexakt-cli-" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
    ::unsetenv("NEXAKT_SEED");
  }
  void TearDown() override {
    fs::remove_all(dir_);
    ::unsetenv("NEXAKT_SEED");
  }
  std::string out(const std::string& sub = "") const { return (dir_ / sub).string(); }
  fs::path dir_;
};

}  // namespace

TEST_F(CliTest, DemoWritesPassingCertificate) {
  Invocation r = run({"demo", "a3-j2", "--out", out(), "--seed", "7"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("PASS [demo]"), std::string::npos) << r.out;
  Json cert = nexakt::load_json_file(out("demo-a3-j2.json"));
  EXPECT_EQ(cert["verdict"], "pass");
  EXPECT_EQ(cert["parameters"]["seed"], 7);
  EXPECT_EQ(cert["certificate_format"], 1);
  EXPECT_FALSE(cert.contains("timing_ms"));
  EXPECT_TRUE(cert["input_hashes"].is_object());
}

TEST_F(CliTest, CertificatesAreByteIdentical) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"demo", "preproj-a2"},
           {"nct", "check", "--algebra", preset("a3.json"), "--m", preset("m3.json"), "--complete"},
           {"ncoker", "--algebra", preset("a3.json"), "--m", preset("m3.json"), "--map", preset("s0_p1.json")}}) {
    std::vector<std::string> a = args, b = args;
    a.insert(a.end(), {"--seed", "11", "--out", out("a")});
    b.insert(b.end(), {"--seed", "11", "--out", out("b")});
    ASSERT_EQ(run(a).code, 0);
    ASSERT_EQ(run(b).code, 0);
  }
  std::size_t compared = 0;
  for (const auto& e : fs::directory_iterator(out("a"))) {
    EXPECT_EQ(slurp(e.path()), slurp(fs::path(out("b")) / e.path().filename())) << e.path();
    ++compared;
  }
  EXPECT_EQ(compared, 3u);
}

TEST_F(CliTest, SeedFromEnvironment) {
  ::setenv("NEXAKT_SEED", "42", 1);
  ASSERT_EQ(run({"demo", "a3-j2", "--out", out()}).code, 0);
  EXPECT_EQ(nexakt::load_json_file(out("demo-a3-j2.json"))["parameters"]["seed"], 42);
  ::setenv("NEXAKT_SEED", "forty-two", 1);
  EXPECT_EQ(run({"demo", "a3-j2", "--out", out()}).code, 2);
}

TEST_F(CliTest, JsonFormatPrintsTheCertificate) {
  Invocation r = run({"demo", "a3-j2", "--out", out(), "--format", "json"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, slurp(out("demo-a3-j2.json")));
}

TEST_F(CliTest, TimingIsOptIn) {
  ASSERT_EQ(run({"demo", "a3-j2", "--out", out(), "--timing"}).code, 0);
  EXPECT_TRUE(nexakt::load_json_file(out("demo-a3-j2.json")).contains("timing_ms"));
}

TEST_F(CliTest, RecheckReproducesAndDetectsTampering) {
  ASSERT_EQ(run({"verify-nexact", "--algebra", preset("a3.json"), "--m", preset("m3.json"), "--complex",
                 preset("nexact_s0.json"), "--out", out()})
                .code,
            0);
  Invocation ok = run({"recheck", out("verify-nexact.json"), "--out", out("re")});
  EXPECT_EQ(ok.code, 0) << ok.err << ok.out;

  Json cert = nexakt::load_json_file(out("verify-nexact.json"));
  cert["result"]["interior_checks"] = 15;
  std::ofstream(out("tampered.json")) << cert.dump();
  EXPECT_EQ(run({"recheck", out("tampered.json"), "--out", out("re")}).code, 1);
}

TEST_F(CliTest, FailingCheckExitsOne) {
  Invocation r = run({"verify-nexact", "--algebra", preset("a3.json"), "--m", preset("m3.json"), "--complex",
               preset("broken.json"), "--out", out()});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("FAIL"), std::string::npos);
  EXPECT_EQ(nexakt::load_json_file(out("verify-nexact.json"))["verdict"], "fail");

  Invocation nct = run({"nct", "check", "--algebra", preset("a3.json"), "--m", "P0,P1,P2,S1", "--complete", "--out", out()});
  EXPECT_EQ(nct.code, 1);
  EXPECT_NE(nct.out.find("not 2-CT"), std::string::npos) << nct.out;
}

TEST_F(CliTest, UsageAndInputErrorsExitTwo) {
  EXPECT_EQ(run({"ncoker", "--help"}).code, 0);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"demo", "no-such-preset", "--out", out()}).code, 2);
  EXPECT_EQ(run({"frobenius"}).code, 2);

  std::ofstream(out("bad.json")) << "{\"field\": {\"p\": 3},";
  Invocation bad = run({"algebra", "check", "--algebra", out("bad.json"), "--out", out()});
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("byte"), std::string::npos) << bad.err;

  EXPECT_EQ(run({"algebra", "check", "--algebra", preset("a3.json"), "--p", "4", "--out", out()}).code, 2);
  EXPECT_EQ(run({"nct", "check", "--algebra", preset("a3.json"), "--m", "P0,Q7", "--out", out()}).code, 2);
  EXPECT_EQ(run({"algebra", "check", "--algebra", preset("a3.json"), "--out", "/proc/nexakt-no-such-dir"}).code, 2);
}

TEST_F(CliTest, FieldOverride) {
  ASSERT_EQ(run({"algebra", "check", "--algebra", preset("a3.json"), "--p", "5", "--out", out()}).code, 0);
  Json cert = nexakt::load_json_file(out("algebra-check.json"));
  EXPECT_EQ(cert["parameters"]["p"], 5);
  EXPECT_EQ(cert["result"]["dimension"], 5);
}

TEST_F(CliTest, FrobeniusCommands) {
  const std::vector<std::string> base = {"--algebra", preset("pi2.json"), "--m", preset("m_pi2.json"), "--out", out()};
  auto with = [&](std::vector<std::string> head, std::vector<std::string> tail = {}) {
    head.insert(head.end(), base.begin(), base.end());
    head.insert(head.end(), tail.begin(), tail.end());
    return run(head).code;
  };
  EXPECT_EQ(with({"frobenius", "setup"}), 0);
  EXPECT_EQ(with({"frobenius", "angle"}, {"--map", preset("s1_p2.json")}), 0);
  EXPECT_EQ(with({"frobenius", "angle"}, {"--complex", preset("coresolution_s1.json")}), 0);
  EXPECT_EQ(with({"frobenius", "rotate"}, {"--map", preset("s1_p2.json"), "--times", "4"}), 0);
  EXPECT_EQ(with({"frobenius", "cone"}, {"--map", preset("s1_p2.json")}), 0);
  EXPECT_EQ(run({"frobenius", "setup", "--algebra", preset("a3.json"), "--m", preset("m3.json"), "--out", out()}).code,
            1);
}
