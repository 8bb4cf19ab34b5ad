#include "hott/diagnostic.hpp"

#include <array>
#include <sstream>

namespace hott {

bool is_known_code(std::string_view c) {
  static constexpr std::array codes{code::parse, code::scope,      code::type,    code::univ,
                                    code::hit_schema, code::loopform, code::manifest};
  for (auto k : codes)
    if (k == c) return true;
  return false;
}

DiagnosticError::DiagnosticError(Diagnostic d) : std::runtime_error(d.message), diag_(std::move(d)) {}

void fail(std::string_view c, std::string message, SourceSpan span) {
  throw DiagnosticError(Diagnostic{Severity::Error, std::string(c), std::move(message), std::move(span), {}});
}

std::string format_human(const Diagnostic& d, const SourceFile* file) {
  std::ostringstream out;
  const char* sev = d.severity == Severity::Error ? "error" : "warning";
  if (!d.span.file.empty())
    out << d.span.file << ':' << d.span.start_line << ':' << d.span.start_col << ": ";
  out << sev << '[' << d.code << "]: " << d.message << '\n';
  if (file && !d.span.file.empty()) {
    std::string_view line = file->line_text(d.span.start_line);
    if (!line.empty()) {
      out << "  | " << line << '\n' << "  | ";
      for (std::size_t i = 1; i < d.span.start_col; ++i) out << (line[i - 1] == '\t' ? '\t' : ' ');
      std::size_t width = 1;
      if (d.span.end_line == d.span.start_line && d.span.end_col > d.span.start_col)
        width = d.span.end_col - d.span.start_col;
      out << std::string(width, '^') << '\n';
    }
  }
  return out.str();
}

std::string format_machine(const Diagnostic& d) {
  std::string msg = d.message;
  for (char& c : msg)
    if (c == '\t' || c == '\n' || c == '\r') c = ' ';
  std::ostringstream out;
  out << d.code << '\t' << d.span.file << '\t' << d.span.start_line << '\t' << d.span.start_col << '\t'
      << msg << '\n';
  return out.str();
}

}  // namespace hott
