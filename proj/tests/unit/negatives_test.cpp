#include <gtest/gtest.h>

#include <filesystem>
#include <regex>
#include <sstream>

#include "hott/cli.hpp"
#include "test_support.hpp"

namespace hott {
namespace {

namespace fs = std::filesystem;

std::vector<std::string> bad_files() {
  std::vector<std::string> out;
  for (const auto& e : fs::directory_iterator(testing::data_dir() + "/bad"))
    if (e.path().extension() == ".hott") out.push_back(e.path().string());
  std::sort(out.begin(), out.end());
  return out;
}

std::string expected_code(const std::string& path) {
  std::string text = stdlib::read_file(path);
  std::smatch m;
  static const std::regex header(R"(^-- expect: (E-[A-Z-]+))");
  return std::regex_search(text, m, header) ? m[1].str() : "";
}

TEST(Negatives, AtLeastTen) { EXPECT_GE(bad_files().size(), 10u); }

TEST(Negatives, EachFailsWithItsCode) {
  static const std::regex line(R"(^(E-[A-Z-]+)\t([^\t]+)\t([0-9]+)\t([0-9]+)\t(.+)$)");
  for (const auto& f : bad_files()) {
    std::string want = expected_code(f);
    ASSERT_FALSE(want.empty()) << f;
    std::ostringstream out, err;
    int status = cli::run({"check", "--diag-format", "machine", f}, out, err);
    EXPECT_EQ(status, cli::kDiagnostics) << f;
    std::istringstream lines(out.str());
    std::string l;
    std::size_t n = 0;
    while (std::getline(lines, l)) {
      std::smatch m;
      ASSERT_TRUE(std::regex_match(l, m, line)) << f << ": " << l;
      EXPECT_TRUE(is_known_code(m[1].str())) << l;
      EXPECT_EQ(m[2].str(), f);
      EXPECT_GE(std::stoul(m[3].str()), 1u);
      if (n++ == 0) {
        EXPECT_EQ(m[1].str(), want) << f;
      }
    }
    EXPECT_GE(n, 1u) << f;
  }
}

}  // namespace
}  // namespace hott
