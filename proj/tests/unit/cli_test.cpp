#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include "hott/cli.hpp"
#include "test_support.hpp"

namespace hott::cli {
namespace {

namespace fs = std::filesystem;

struct CliResult {
  int status;
  std::string out;
  std::string err;
};

CliResult run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int status = run(args, out, err);
  return {status, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() / ("hott-cli-" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                         "-" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }

  std::string write(const std::string& name, const std::string& text) const {
    auto p = path_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

 private:
  fs::path path_;
};

std::string lib(const std::string& f) { return testing::stdlib_dir() + "/" + f; }

const char* kCircle = "hit S1 where\n  | point base : S1\n  | path loop : Id S1 base base\n";

TEST(Cli, CheckCorpusFile) {
  CliResult r = run_cli({"check", lib("paths.hott")});
  EXPECT_EQ(r.status, kOk) << r.err;
  EXPECT_NE(r.out.find("ok:"), std::string::npos);
}

TEST(Cli, CheckWholeManifest) {
  CliResult r = run_cli({"check", "--manifest", lib("MANIFEST")});
  EXPECT_EQ(r.status, kOk) << r.err;
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run_cli({"check", "missing.hott"}).status, kUsage);
  EXPECT_EQ(run_cli({}).status, kUsage);
  EXPECT_EQ(run_cli({"frobnicate"}).status, kUsage);
  EXPECT_EQ(run_cli({"check", "--jobs", "0", lib("paths.hott")}).status, kUsage);
  EXPECT_EQ(run_cli({"check", "--diag-format", "xml", lib("paths.hott")}).status, kUsage);
  EXPECT_EQ(run_cli({"norm", lib("nat.hott")}).status, kUsage);
}

TEST(Cli, MachineDiagnostics) {
  TempDir d;
  std::string f = d.write("bad.hott", "def a : Nat := zero\ndef b : Nat := nope\n");
  CliResult r = run_cli({"check", "--diag-format", "machine", f});
  EXPECT_EQ(r.status, kDiagnostics);
  EXPECT_EQ(r.out, "E-SCOPE\t" + f + "\t2\t16\tunknown identifier 'nope'\n");
}

TEST(Cli, HumanDiagnosticsGoToStderr) {
  TempDir d;
  std::string f = d.write("bad.hott", "def a : Nat := star\n");
  CliResult r = run_cli({"check", f});
  EXPECT_EQ(r.status, kDiagnostics);
  EXPECT_EQ(r.out, "");
  EXPECT_NE(r.err.find("E-TYPE"), std::string::npos);
  EXPECT_NE(r.err.find("1 error(s)"), std::string::npos);
}

TEST(Cli, UniverseViolation) {
  TempDir d;
  for (int n = 0; n < 3; ++n) {
    std::string s = std::to_string(n);
    std::string f = d.write("u.hott", "def t : Type " + s + " := Type " + s + "\n");
    CliResult r = run_cli({"check", "--diag-format", "machine", f});
    EXPECT_EQ(r.status, kDiagnostics);
    EXPECT_EQ(r.out.substr(0, 7), "E-UNIV\t");
  }
}

TEST(Cli, ExitZeroIffNoErrors) {
  TempDir d;
  std::vector<std::pair<std::string, bool>> cases = {
      {"def a : Nat := zero\n", true},
      {"def a : Nat := zero\ndef b : Id Nat a zero := refl zero\n", true},
      {"def a : Nat := zero\ndef b : Id Nat a 1 := refl zero\n", false},
      {"def a : Nat := (zero\n", false},
      {"", true},
  };
  for (const auto& [text, good] : cases) {
    std::string f = d.write("x.hott", text);
    CliResult r = run_cli({"check", "--diag-format", "machine", f});
    EXPECT_EQ(r.status == kOk, good) << text;
    EXPECT_EQ(r.out.empty(), good) << text;
  }
}

TEST(Cli, NoPrelude) {
  TempDir d;
  std::string f = d.write("p.hott", "def a (A : Type 0) (x : A) : Id A x x := inv (refl x)\n");
  EXPECT_EQ(run_cli({"check", f}).status, kOk);
  EXPECT_EQ(run_cli({"check", "--no-prelude", f}).status, kDiagnostics);
}

TEST(Cli, Norm) {
  CliResult r = run_cli({"norm", lib("paths.hott"), "--term", "concat-refl-refl"});
  EXPECT_EQ(r.status, kOk) << r.err;
  EXPECT_EQ(r.out, "refl {Nat} zero\n");
  r = run_cli({"norm", lib("nat.hott"), "--term", "four"});
  EXPECT_EQ(r.out, "succ (succ (succ (succ zero)))\n");
  EXPECT_EQ(run_cli({"norm", lib("nat.hott"), "--term", "five"}).status, kDiagnostics);
}

TEST(Cli, Winding) {
  CliResult r = run_cli({"winding", lib("circle-code.hott"), "--term", "loop5"});
  EXPECT_EQ(r.status, kOk) << r.err;
  EXPECT_EQ(r.out, "5\n");
  r = run_cli({"winding", lib("circle-code.hott"), "--term", "loop-cancel"});
  EXPECT_EQ(r.out, "0\n");
}

TEST(Cli, WindingRejectsFunext) {
  TempDir d;
  std::string f = d.write(
      "w.hott", std::string(kCircle) +
                    "def w : Id S1 base base := happly (funext {S1} {\\x. S1} {\\x. x} {\\x. x} (\\x. refl x)) base\n");
  CliResult r = run_cli({"winding", "--diag-format", "machine", f, "--term", "w"});
  EXPECT_EQ(r.status, kDiagnostics);
  EXPECT_EQ(r.out.substr(0, 11), "E-LOOPFORM\t");
}

TEST(Cli, JobsKeepOutputOrder) {
  TempDir d;
  std::vector<std::string> files;
  for (int i = 0; i < 5; ++i)
    files.push_back(d.write("f" + std::to_string(i) + ".hott",
                            "def a" + std::to_string(i) + " : Nat := " + (i % 2 ? "star" : "zero") + "\n"));
  std::vector<std::string> seq = {"check", "--diag-format", "machine"};
  seq.insert(seq.end(), files.begin(), files.end());
  std::vector<std::string> par = seq;
  par.insert(par.begin() + 1, {"--jobs", "4"});
  CliResult a = run_cli(seq);
  CliResult b = run_cli(par);
  EXPECT_EQ(a.status, kDiagnostics);
  EXPECT_EQ(a.status, b.status);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("f1.hott"), std::string::npos);
  EXPECT_LT(a.out.find("f1.hott"), a.out.find("f3.hott"));
}

}  // namespace
}  // namespace hott::cli
