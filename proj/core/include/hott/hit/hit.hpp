#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hott/kernel/elaborate.hpp"
#include "hott/kernel/environment.hpp"
#include "hott/parser/resolve.hpp"
#include "hott/parser/surface.hpp"

namespace hott::hit {

struct CoreParam {
  std::string name;
  Plicity plicity = Plicity::Explicit;
  Term type;  // in the context of the preceding parameters
};

struct CoreArg {
  std::string name;
  Plicity plicity = Plicity::Explicit;
  Term type;  // in the context of the parameters and preceding arguments
  kernel::ArgKind kind = kernel::ArgKind::Plain;
  std::size_t function_arity = 0;
};

struct CoreCtor {
  std::string name;
  bool is_path = false;
  std::vector<CoreArg> args;
  Term lhs;  // path constructors: boundary in the context of parameters and arguments
  Term rhs;
  SourceSpan span;
};

// A HIT declaration validated at concrete universe levels.
struct CoreHit {
  std::string name;
  std::vector<Level> levels;
  Level level = 0;  // the universe the HIT lives in
  std::vector<CoreParam> params;
  std::vector<CoreCtor> ctors;
  SourceSpan span;

  kernel::HitSignature signature() const;
};

struct PointRule {
  std::string ctor;
  // Both sides live in the context: parameters, motive, methods, constructor
  // arguments.
  Term lhs;
  Term rhs;
  std::size_t depth = 0;
};

struct EliminatorSpec {
  std::string name;
  Term induction_type;
  std::vector<PointRule> point_rules;
  std::vector<std::pair<std::string, Term>> computation_axioms;
};

std::string eliminator_name(const std::string& hit);
std::string computation_name(const std::string& hit, const std::string& ctor);

// Checks the declaration at the given levels: strict positivity, dimension 1
// and well-typed boundaries. The type former and constructors are added to
// `env` as they are validated. Throws DiagnosticError (E-HIT-SCHEMA, or the
// underlying E-TYPE/E-SCOPE/E-UNIV).
CoreHit validate_signature(const parse::SurfaceDecl& decl, const std::vector<Level>& levels,
                           parse::GlobalScope& scope, kernel::Environment& env);

// Builds the induction principle and path computation axioms with the motive
// in `Type motive_level`. The result refers to the reserved `transport` and
// `apd`.
EliminatorSpec synthesize_eliminator(const CoreHit& hit, Level motive_level);

// Re-applies the spine of a saturated eliminator application so that a point
// constructor scrutinee reduces to the matching method.
kernel::Value apply_point_beta(const kernel::Evaluator& ev, const kernel::Value& elim_application);

}  // namespace hott::hit
