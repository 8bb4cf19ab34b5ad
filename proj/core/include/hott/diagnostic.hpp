#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hott/syntax/source.hpp"

namespace hott {

namespace code {
inline constexpr std::string_view parse = "E-PARSE";
inline constexpr std::string_view scope = "E-SCOPE";
inline constexpr std::string_view type = "E-TYPE";
inline constexpr std::string_view univ = "E-UNIV";
inline constexpr std::string_view hit_schema = "E-HIT-SCHEMA";
inline constexpr std::string_view loopform = "E-LOOPFORM";
inline constexpr std::string_view manifest = "E-MANIFEST";
}  // namespace code

bool is_known_code(std::string_view c);

enum class Severity { Error, Warning };

struct Diagnostic {
  Severity severity = Severity::Error;
  std::string code;
  std::string message;
  SourceSpan span;
  std::vector<SourceSpan> related;
};

class DiagnosticError : public std::runtime_error {
 public:
  explicit DiagnosticError(Diagnostic d);

  const Diagnostic& diagnostic() const { return diag_; }

 private:
  Diagnostic diag_;
};

[[noreturn]] void fail(std::string_view code, std::string message, SourceSpan span = {});

// A broken kernel invariant. Never caused by user input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

std::string format_human(const Diagnostic& d, const SourceFile* file);
std::string format_machine(const Diagnostic& d);

}  // namespace hott
