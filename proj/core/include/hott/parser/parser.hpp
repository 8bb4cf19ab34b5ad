#pragma once

#include <vector>

#include "hott/parser/surface.hpp"
#include "hott/syntax/source.hpp"

namespace hott::parse {

// Throws DiagnosticError (E-PARSE) at the first offending token.
std::vector<SurfaceDeclPtr> parse_module(const SourceFile& src);

// Parses the whole input as a single term.
STerm parse_term(const SourceFile& src);

}  // namespace hott::parse
