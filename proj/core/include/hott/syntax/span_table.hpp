#pragma once

#include <unordered_map>

#include "hott/syntax/source.hpp"
#include "hott/syntax/term.hpp"

namespace hott {

// Source location of resolved term nodes, keyed by node identity.
using SpanTable = std::unordered_map<const TermNode*, SourceSpan>;

}  // namespace hott
