#pragma once

#include <string>
#include <string_view>

#include "hott/stdlib/session.hpp"

namespace hott::stdlib {

extern const std::string_view prelude_text;
inline constexpr std::string_view prelude_file = "prelude.hott";

// Axioms of the prelude that proved declarations may depend on.
const std::set<std::string>& prelude_axioms();

// Checks the embedded prelude into the session. A failure is a build error
// and raises InternalError.
FileResult load_prelude(Session& s);

// Directory holding the shipped corpus and manifest.
std::string default_stdlib_dir();

}  // namespace hott::stdlib
