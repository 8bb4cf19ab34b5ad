#include "hott/stdlib/manifest.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace hott::stdlib {

const char* status_name(Status s) {
  switch (s) {
    case Status::Proved: return "proved";
    case Status::Postulated: return "postulated";
    case Status::Definition: return "definition";
  }
  return "?";
}

std::optional<Status> parse_status(std::string_view s) {
  if (s == "proved") return Status::Proved;
  if (s == "postulated") return Status::Postulated;
  if (s == "definition") return Status::Definition;
  return std::nullopt;
}

const ManifestEntry* Manifest::find(const std::string& name) const {
  for (const auto& e : entries)
    if (e.name == name) return &e;
  return nullptr;
}

std::vector<const ManifestEntry*> Manifest::in_file(const std::string& file) const {
  std::vector<const ManifestEntry*> out;
  for (const auto& e : entries)
    if (e.file == file) out.push_back(&e);
  return out;
}

namespace {

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = line.find(sep, start);
    out.push_back(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

SourceSpan line_span(const std::string& path, std::size_t line) {
  SourceSpan s;
  s.file = path;
  s.start_line = s.end_line = line;
  return s;
}

}  // namespace

Manifest parse_manifest(std::string_view text, const std::string& path) {
  Manifest m;
  m.path = path;
  std::size_t line_no = 0;
  for (std::string_view line : split(text, '\n')) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    auto fields = split(line, '\t');
    if (fields.size() != 4)
      fail(code::manifest, "expected 4 tab-separated fields, found " + std::to_string(fields.size()),
           line_span(path, line_no));
    auto status = parse_status(fields[2]);
    if (!status)
      fail(code::manifest, "unknown status '" + std::string(fields[2]) + "'", line_span(path, line_no));
    ManifestEntry e{std::string(fields[0]), std::string(fields[1]), *status, std::string(fields[3]), line_no};
    if (e.file.empty() || e.name.empty()) fail(code::manifest, "empty file or name", line_span(path, line_no));
    if (m.find(e.name))
      fail(code::manifest, "'" + e.name + "' is listed more than once", line_span(path, line_no));
    if (std::find(m.files.begin(), m.files.end(), e.file) == m.files.end()) m.files.push_back(e.file);
    m.entries.push_back(std::move(e));
  }
  return m;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Manifest read_manifest(const std::string& path) { return parse_manifest(read_file(path), path); }

std::set<std::string> parse_name_list(std::string_view text) {
  std::set<std::string> out;
  for (std::string_view line : split(text, '\n')) {
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.front()))) line.remove_prefix(1);
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.remove_suffix(1);
    if (!line.empty()) out.emplace(line);
  }
  return out;
}

std::set<std::string> read_name_list(const std::string& path) { return parse_name_list(read_file(path)); }

}  // namespace hott::stdlib
