#pragma once

#include <set>
#include <string>
#include <vector>

#include "hott/stdlib/manifest.hpp"
#include "hott/stdlib/session.hpp"

namespace hott::stdlib {

// Checks the files in order. With jobs > 1, files that reference nothing
// declared by an earlier file of the same batch are checked in parallel off
// a snapshot of the session; results are merged in file order.
std::vector<FileResult> check_files(Session& s, const std::vector<SourceFilePtr>& files, unsigned jobs = 1);

struct CorpusReport {
  std::vector<FileResult> files;
  std::vector<Diagnostic> audit;
  std::size_t declarations = 0;
  double seconds = 0;

  bool ok() const;
};

// Manifest completeness, status honesty and the dependency-cone audit over
// the declarations of the given files.
std::vector<Diagnostic> audit(const Session& s, const Manifest& m, const std::set<std::string>& sanctioned,
                              const std::vector<std::string>& files);

// True iff `name` transitively depends on `dependency`.
bool depends_on(const Session& s, const std::string& name, const std::string& dependency);

// Checks every manifest file (resolved against `dir`) in manifest order into
// `s`, then audits. `s` should start empty: the manifest lists the prelude.
CorpusReport check_corpus(Session& s, const Manifest& m, const std::string& dir,
                          const std::set<std::string>& sanctioned, unsigned jobs = 1);

}  // namespace hott::stdlib
