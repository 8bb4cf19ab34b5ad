#include <gtest/gtest.h>

#include "hott/diagnostic.hpp"
#include "hott/parser/parser.hpp"
#include "hott/parser/printer.hpp"
#include "hott/parser/resolve.hpp"
#include "test_support.hpp"

namespace hott::parse {
namespace {

std::vector<SurfaceDeclPtr> module(const std::string& text) { return parse_module(SourceFile("m.hott", text)); }

std::string parse_error(const std::string& text) {
  try {
    module(text);
  } catch (const DiagnosticError& e) {
    return e.diagnostic().code;
  }
  return "";
}

TEST(Parser, Declarations) {
  auto ds = module(
      "def id.{u} {A : Type u} (x : A) : A := x\n"
      "axiom k : Nat\n"
      "hit S (X : Type 0) where\n  | point b : S X\n  | path l (x : X) : Id (S X) b b\n");
  ASSERT_EQ(ds.size(), 3u);
  EXPECT_EQ(ds[0]->kind, DeclKind::Def);
  EXPECT_EQ(ds[0]->univars, std::vector<std::string>{"u"});
  ASSERT_EQ(ds[0]->params.size(), 2u);
  EXPECT_EQ(ds[0]->params[0].plicity, Plicity::Implicit);
  EXPECT_EQ(ds[1]->kind, DeclKind::Axiom);
  EXPECT_EQ(ds[1]->body, nullptr);
  ASSERT_EQ(ds[2]->ctors.size(), 2u);
  EXPECT_FALSE(ds[2]->ctors[0].is_path);
  EXPECT_TRUE(ds[2]->ctors[1].is_path);
  EXPECT_EQ(ds[2]->ctors[1].params.size(), 1u);
}

TEST(Parser, BinderGroups) {
  auto ds = module("def f (a b : Nat) {c : Nat} : Nat := a");
  ASSERT_EQ(ds[0]->params.size(), 3u);
  EXPECT_EQ(ds[0]->params[1].name, "b");
  EXPECT_EQ(ds[0]->params[2].plicity, Plicity::Implicit);
}

TEST(Parser, ApplicationIsLeftAssociativeArrowRight) {
  STerm t = parse_term(SourceFile("t", "f a {b} c"));
  const auto* app = as<sf::App>(t);
  ASSERT_NE(app, nullptr);
  const auto* inner = as<sf::App>(app->fn);
  ASSERT_NE(inner, nullptr);
  EXPECT_EQ(inner->plicity, Plicity::Implicit);
  STerm a = parse_term(SourceFile("t", "A -> B -> C"));
  const auto* pi = as<sf::Pi>(a);
  ASSERT_NE(pi, nullptr);
  EXPECT_NE(as<sf::Pi>(pi->codomain), nullptr);
}

TEST(Parser, EliminatorForms) {
  STerm t = parse_term(SourceFile("t", "J [z q. Id A x z] d y p"));
  const auto* j = as<sf::PrimApp>(t);
  ASSERT_NE(j, nullptr);
  EXPECT_EQ(j->prim, Prim::J);
  EXPECT_EQ(j->binder_names, (std::vector<std::string>{"z", "q"}));
  EXPECT_EQ(j->args.size(), 4u);
  STerm nt = parse_term(SourceFile("t", "natrec [k. Nat] zero (\\k r. succ r) n"));
  const auto* n = as<sf::PrimApp>(nt);
  ASSERT_NE(n, nullptr);
  EXPECT_EQ(n->prim, Prim::NatElim);
}

TEST(Parser, Spans) {
  SourceFile f("s.hott", "def a : Nat :=\n  succ zero\n");
  auto ds = parse_module(f);
  EXPECT_EQ(ds[0]->body->span.start_line, 2u);
  EXPECT_EQ(ds[0]->body->span.start_col, 3u);
  EXPECT_EQ(ds[0]->name_span.start_col, 5u);
}

TEST(Parser, Errors) {
  EXPECT_EQ(parse_error("def a : Nat := (succ zero"), "E-PARSE");
  EXPECT_EQ(parse_error("def : Nat := zero"), "E-PARSE");
  EXPECT_EQ(parse_error("def a Nat := zero"), "E-PARSE");
  EXPECT_EQ(parse_error("hit H where | bogus c : H"), "E-PARSE");
  EXPECT_EQ(parse_error("def a : Nat := refl.{1} zero"), "E-PARSE");
  EXPECT_EQ(parse_error("def a : Nat := zero"), "");
}

TEST(Printer, Basics) {
  EXPECT_EQ(print(mk::lam("x", mk::var(0))), "\\x. x");
  EXPECT_EQ(print(mk::arrow(mk::nat(), mk::nat())), "Nat -> Nat");
  EXPECT_EQ(print(mk::universe(2)), "Type 2");
  EXPECT_EQ(print(mk::app(mk::constant("f", {0, 1}), mk::zero(), Plicity::Implicit)), "f.{0 1} {zero}");
  EXPECT_EQ(print(mk::var(0), {"a", "b"}), "b");
}

TEST(Printer, RenamesShadowedBinders) {
  Term t = mk::lam("x", mk::lam("x", mk::app(mk::var(1), mk::var(0))));
  std::string s = print(t);
  EXPECT_NE(s, "\\x. \\x. x x");
  EXPECT_TRUE(valid_identifier("loop-neq-refl"));
  EXPECT_FALSE(valid_identifier("Type"));
}

class Globals : public GlobalScope {
 public:
  std::optional<std::size_t> universe_arity(const std::string& n) const override {
    if (n == "concat") return 1;
    if (n == "loop" || n == "base") return 0;
    return std::nullopt;
  }
  void use(const std::string&, const std::vector<Level>&, const SourceSpan&) override {}
};

Term resolve_text(const std::string& text) {
  Globals g;
  LevelAssignment lv;
  ResolveContext ctx{g, lv};
  std::vector<std::string> locals;
  return resolve_term(parse_term(SourceFile("t", text)), ctx, locals);
}

TEST(Resolve, ConcatLoopLoop) {
  Term t = resolve_text("concat loop loop");
  Term want = mk::app(mk::app(mk::constant("concat", {0}), mk::constant("loop")), mk::constant("loop"));
  EXPECT_TRUE(alpha_equal(t, want)) << print(t);
  EXPECT_EQ(print(t), "concat.{0} loop loop");
}

TEST(Resolve, LocalsBecomeIndices) {
  Term t = resolve_text("\\x y. x");
  EXPECT_TRUE(alpha_equal(t, mk::lam("x", mk::lam("y", mk::var(1)))));
}

TEST(Resolve, Errors) {
  auto code_of = [](const std::string& text) -> std::string {
    try {
      resolve_text(text);
    } catch (const DiagnosticError& e) {
      return e.diagnostic().code;
    }
    return "";
  };
  EXPECT_EQ(code_of("nope"), "E-SCOPE");
  EXPECT_EQ(code_of("concat.{0 1} loop loop"), "E-UNIV");
  EXPECT_EQ(code_of("Type u"), "E-SCOPE");
}

TEST(Resolve, PrintRoundTrip) {
  for (const char* text : {"\\x y. x", "(a : Nat) * Id Nat a zero", "concat.{0} {_} loop (concat loop loop)",
                           "J [z q. Id Nat zero z] (refl zero) zero (refl zero)", "natrec [k. Nat] zero (\\k r. succ r) zero"}) {
    Term t = resolve_text(text);
    Term back = resolve_text(print(t));
    EXPECT_TRUE(alpha_equal(t, back)) << text << " => " << print(t);
  }
}

}  // namespace
}  // namespace hott::parse
