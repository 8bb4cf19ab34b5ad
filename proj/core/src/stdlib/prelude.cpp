#include "hott/stdlib/prelude.hpp"

#include <cstdlib>

namespace hott::stdlib {

#ifndef HOTT_STDLIB_DIR
#define HOTT_STDLIB_DIR "stdlib"
#endif

const std::set<std::string>& prelude_axioms() {
  static const std::set<std::string> names{"ua", "ua-comp", "funext"};
  return names;
}

FileResult load_prelude(Session& s) {
  FileResult r = s.check_text(std::string(prelude_file), std::string(prelude_text));
  if (!r.ok()) throw InternalError("the prelude does not check: " + r.diagnostics.front().message);
  return r;
}

std::string default_stdlib_dir() {
  if (const char* dir = std::getenv("HOTT_STDLIB_DIR")) return dir;
  return HOTT_STDLIB_DIR;
}

}  // namespace hott::stdlib
