#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "hott/syntax/term.hpp"

namespace hott::parse {

struct PrintOptions {
  // Names that refer to globals; bound variables are renamed away from them.
  std::function<bool(std::string_view)> is_global;
};

// `names` gives display names for the free variables, outermost first, so
// Var 0 prints as names.back(). Output re-parses to an alpha-equal term.
std::string print(const Term& t, const std::vector<std::string>& names = {}, const PrintOptions& opts = {});

bool valid_identifier(std::string_view s);

}  // namespace hott::parse
