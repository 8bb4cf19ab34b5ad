#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "hott/diagnostic.hpp"

namespace hott::stdlib {

enum class Status { Proved, Postulated, Definition };

const char* status_name(Status s);
std::optional<Status> parse_status(std::string_view s);

struct ManifestEntry {
  std::string file;
  std::string name;
  Status status = Status::Definition;
  std::string reference;
  std::size_t line = 0;
};

// Declarations of the corpus by file, in checking order.
struct Manifest {
  std::string path;
  std::vector<std::string> files;  // order of first appearance
  std::vector<ManifestEntry> entries;

  const ManifestEntry* find(const std::string& name) const;
  std::vector<const ManifestEntry*> in_file(const std::string& file) const;
};

// Line format: file TAB name TAB status TAB reference. Blank lines and lines
// starting with '#' are ignored. Throws DiagnosticError (E-MANIFEST).
Manifest parse_manifest(std::string_view text, const std::string& path);
Manifest read_manifest(const std::string& path);

// One name per line; '#' starts a comment.
std::set<std::string> parse_name_list(std::string_view text);
std::set<std::string> read_name_list(const std::string& path);

std::string read_file(const std::string& path);

}  // namespace hott::stdlib
