#pragma once

#include <string>
#include <vector>

#include "hott/kernel/environment.hpp"
#include "hott/kernel/eval.hpp"
#include "hott/syntax/span_table.hpp"

namespace hott::kernel {

// Typing context: display names and types (as values) of the bound
// variables, outermost first.
struct Context {
  std::vector<std::string> names;
  std::vector<Value> types;
  Env env;

  std::size_t depth() const { return names.size(); }
  void push(std::string name, Value type);
  void pop();
};

// Bidirectional checker. Produces fully explicit terms: implicit arguments
// are solved by matching and inserted, implicit lambdas are introduced when
// checking against an implicit function type.
class Elaborator {
 public:
  Elaborator(const Environment& env, const SpanTable* spans = nullptr, SourceSpan fallback = {});

  struct Typed {
    Term term;
    Value type;
  };

  Typed infer(Context& ctx, const Term& t);
  Term check(Context& ctx, const Term& t, const Value& type);
  Term check_type(Context& ctx, const Term& t, Level* level = nullptr);

  // Replaces solved metavariables; unsolved ones are reported as E-TYPE.
  Term finish(const Term& t, std::size_t depth);

  const Evaluator& evaluator() const { return ev_; }
  std::string show(const Context& ctx, const Value& v) const;
  std::string show_term(const Context& ctx, const Term& t) const;

 private:
  Typed spine(Context& ctx, const Term& t, const Value* expected);
  Typed infer_node(Context& ctx, const Term& t);
  Term check_node(Context& ctx, const Term& t, const Value& type);
  Level level_of(Context& ctx, const Value& type);
  std::size_t fresh_meta(const Context& ctx, Value type, std::string what);
  // A metavariable is a closed function of the context it was created in.
  Term meta_term(const Context& ctx, std::size_t id) const;
  Value motive_at(const Context& ctx, const Term& motive, const Value& v) const;
  Value eval(const Context& ctx, const Term& t) const { return ev_.eval(ctx.env, t); }
  void expect_conv(Context& ctx, const Value& actual, const Value& expected, const char* what);
  [[noreturn]] void error(std::string_view code, std::string msg) const;

  const Environment& env_;
  MetaStore metas_;
  Evaluator ev_;
  const SpanTable* spans_;
  SourceSpan current_;
};

struct CoreDecl {
  std::string name;
  std::vector<Level> levels;
  DeclKind kind = DeclKind::Axiom;  // Definition or Axiom
  Term type;
  Term body;
  SourceSpan span;
  const SpanTable* spans = nullptr;
};

// Checks the type (and body) of a resolved declaration. The result is ready
// to be added to `env`; the environment itself is not modified.
Decl check_declaration(const Environment& env, const CoreDecl& d);

// Convenience form returning the extended environment.
Environment declare(Environment env, const CoreDecl& d);

}  // namespace hott::kernel
