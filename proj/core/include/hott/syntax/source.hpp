#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace hott {

struct SourceSpan {
  std::string file;
  std::size_t start = 0;
  std::size_t end = 0;
  std::size_t start_line = 1;
  std::size_t start_col = 1;
  std::size_t end_line = 1;
  std::size_t end_col = 1;
};

// Owns the text of one input file and maps byte offsets to 1-based
// line/column pairs.
class SourceFile {
 public:
  SourceFile(std::string path, std::string text);

  const std::string& path() const { return path_; }
  const std::string& text() const { return text_; }

  SourceSpan span(std::size_t start, std::size_t end) const;
  std::size_t line_of(std::size_t offset) const;
  std::size_t col_of(std::size_t offset) const;
  std::string_view line_text(std::size_t line) const;

 private:
  std::string path_;
  std::string text_;
  std::vector<std::size_t> line_starts_;
};

using SourceFilePtr = std::shared_ptr<const SourceFile>;

}  // namespace hott
