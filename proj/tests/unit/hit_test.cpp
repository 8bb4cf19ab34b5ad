#include <gtest/gtest.h>

#include "hott/hit/hit.hpp"
#include "test_support.hpp"

namespace hott {
namespace {

using testing::check_with_prelude;
using testing::first_code;

const char* kCircle = "hit S1 where\n  | point base : S1\n  | path loop : Id S1 base base\n";
const char* kSusp =
    "hit Su (A : Type 0) where\n  | point n : Su A\n  | point s : Su A\n  | path m (a : A) : Id (Su A) n s\n";

std::string check(const std::string& text) {
  Session s;
  return first_code(check_with_prelude(s, text));
}

TEST(Hit, Names) {
  EXPECT_EQ(hit::eliminator_name("S1"), "S1-ind");
  EXPECT_EQ(hit::computation_name("S1", "loop"), "S1-ind-loop");
}

TEST(Hit, CircleDeclarations) {
  Session s;
  ASSERT_TRUE(check_with_prelude(s, kCircle).ok());
  const auto* sig = s.environment().hit("S1");
  ASSERT_NE(sig, nullptr);
  EXPECT_EQ(sig->num_params, 0u);
  ASSERT_EQ(sig->ctors.size(), 2u);
  EXPECT_FALSE(sig->ctors[0].is_path);
  EXPECT_TRUE(sig->ctors[1].is_path);
  EXPECT_EQ(sig->eliminator, "S1-ind");
  EXPECT_EQ(sig->computation_axioms, std::vector<std::string>{"S1-ind-loop"});
  const Template* elim = s.find("S1-ind");
  ASSERT_NE(elim, nullptr);
  EXPECT_EQ(elim->kind, TemplateKind::Eliminator);
  EXPECT_EQ(s.find("S1-ind-loop")->kind, TemplateKind::Computation);
  EXPECT_EQ(s.find("loop")->kind, TemplateKind::PathCtor);
  EXPECT_EQ(s.find("base")->kind, TemplateKind::PointCtor);
}

TEST(Hit, CircleEliminatorShape) {
  Session s;
  ASSERT_TRUE(check_with_prelude(s, kCircle).ok());
  auto d = s.instance("S1-ind", {0});
  ASSERT_NE(d, nullptr);
  EXPECT_EQ(d->kind, kernel::DeclKind::HitEliminator);
  EXPECT_EQ(d->arity, 4u);
  EXPECT_EQ(parse::print(d->type, {}, testing::print_options(s)),
            "(P : S1 -> Type 0) -> (m-base : P base) -> "
            "Id (P base) (transport.{0 0} {S1} P {base} {base} loop m-base) m-base -> (x : S1) -> P x");
}

TEST(Hit, ComputationAxiomShape) {
  Session s;
  ASSERT_TRUE(check_with_prelude(s, kCircle).ok());
  auto d = s.instance("S1-ind-loop", {0});
  EXPECT_EQ(d->kind, kernel::DeclKind::HitComputation);
  std::string ty = parse::print(d->type, {}, testing::print_options(s));
  EXPECT_NE(ty.find("apd.{0 0}"), std::string::npos) << ty;
  EXPECT_NE(ty.find("S1-ind.{0} P m-base m-loop x"), std::string::npos) << ty;
}

TEST(Hit, PointBetaWithArguments) {
  EXPECT_EQ(check(std::string(kSusp) +
                  "def t (A : Type 0) (P : Su A -> Type 0) (pn : P (n {A})) (ps : P (s {A}))"
                  " (pm : (a : A) -> Id (P (s {A})) (transport P (m a) pn) ps) :"
                  " Id (P (s {A})) (Su-ind {A} P pn ps pm (s {A})) ps := refl ps"),
            "");
}

TEST(Hit, PointBetaWithRecursiveArgument) {
  EXPECT_EQ(check(std::string(kCircle) +
                  "hit T (A : Type 0) where\n  | point tr (a : A) : T A\n  | point hub (r : S1 -> T A) : T A\n"
                  "  | path spoke (r : S1 -> T A) (x : S1) : Id (T A) (hub r) (r x)\n"
                  "axiom sp (r : S1 -> T Nat) (x : S1) (r' : S1 -> Nat) :"
                  " Id Nat (transport (\\v. Nat) (spoke r x) (succ (r' base))) (r' x)\n"
                  "def f : T Nat -> Nat := T-ind {Nat} (\\v. Nat) (\\a. a) (\\r r'. succ (r' base)) sp\n"
                  "def e : Id Nat (f (hub (\\y. tr zero))) (succ zero) := refl (succ zero)\n"),
            "");
}

TEST(Hit, DimensionTwoIsRejected) {
  EXPECT_EQ(check(std::string(kCircle) +
                  "hit T2 where\n  | point b : T2\n  | path p : Id T2 b b\n"
                  "  | path s : Id (Id T2 b b) p p\n"),
            "E-HIT-SCHEMA");
}

TEST(Hit, NonPositiveIsRejected) {
  EXPECT_EQ(check("hit Bad where\n  | point mk (f : Bad -> Nat) : Bad\n"), "E-HIT-SCHEMA");
  EXPECT_EQ(check("hit Bad where\n  | point mk (f : (Bad -> Nat) -> Bad) : Bad\n"), "E-HIT-SCHEMA");
}

TEST(Hit, BoundaryMustLandInTheType) {
  EXPECT_EQ(check("hit H where\n  | point b : H\n  | path p : Id Nat zero zero\n"), "E-HIT-SCHEMA");
  EXPECT_EQ(check("hit H where\n  | point b : Nat\n"), "E-HIT-SCHEMA");
}

TEST(Hit, PathConstructorTyping) {
  EXPECT_EQ(check(std::string(kCircle) + "def l2 : Id S1 base base := concat loop loop"), "");
  EXPECT_EQ(check(std::string(kCircle) + "def l2 : Id S1 base base := loop base"), "E-TYPE");
}

TEST(Hit, EliminatorIsStuckOnVariables) {
  Session s;
  ASSERT_TRUE(check_with_prelude(s, std::string(kCircle) +
                                        "axiom l : Id S1 (transport (\\x. S1) loop base) base\n"
                                        "def f : S1 -> S1 := S1-ind (\\x. S1) base l\n")
                  .ok());
  Term open = mk::lam("x", mk::app(mk::constant("f"), mk::var(0)));
  Term nf = testing::normalize(s, open);
  EXPECT_EQ(parse::print(nf, {}, testing::print_options(s)), "\\x. S1-ind.{0} (\\x1. S1) base l x");
  EXPECT_TRUE(alpha_equal(testing::normalize(s, mk::app(mk::constant("f"), mk::constant("base"))),
                          mk::constant("base")));
}

}  // namespace
}  // namespace hott
