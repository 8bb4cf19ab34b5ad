#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hott/parser/surface.hpp"
#include "hott/syntax/span_table.hpp"
#include "hott/syntax/term.hpp"

namespace hott::parse {

// The global names visible to the resolver.
class GlobalScope {
 public:
  virtual ~GlobalScope() = default;
  // Number of universe parameters of a global, or nullopt when unknown.
  virtual std::optional<std::size_t> universe_arity(const std::string& name) const = 0;
  // Called once per resolved reference; may instantiate the global at the
  // given levels. May throw DiagnosticError.
  virtual void use(const std::string& name, const std::vector<Level>& levels, const SourceSpan& at) = 0;
};

using LevelAssignment = std::vector<std::pair<std::string, Level>>;

struct ResolveContext {
  GlobalScope& globals;
  const LevelAssignment& levels;
  SpanTable* spans = nullptr;
};

Level eval_level(const LevelExpr& e, const LevelAssignment& levels, const SourceSpan& at);

// `locals` lists the bound names in scope, innermost last. Throws
// DiagnosticError (E-SCOPE, E-UNIV).
Term resolve_term(const STerm& t, ResolveContext& ctx, std::vector<std::string>& locals);

// Wraps `t` in Pi binders for `params` (resolved left to right).
Term resolve_telescope(const std::vector<Binder>& params, const STerm& t, ResolveContext& ctx,
                       std::vector<std::string>& locals);

struct ResolvedDecl {
  Term type;
  Term body;  // null for axioms
};

// Declaration parameters become Pi binders of the type and lambdas of the
// body.
ResolvedDecl resolve_decl(const SurfaceDecl& d, ResolveContext& ctx);

}  // namespace hott::parse
