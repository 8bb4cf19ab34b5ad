#include <gtest/gtest.h>

#include "test_support.hpp"

namespace hott {
namespace {

using testing::check_with_prelude;
using testing::first_code;

std::string check(const std::string& text) {
  Session s;
  return first_code(check_with_prelude(s, text));
}

TEST(Conversion, ConcatReflRefl) {
  EXPECT_EQ(check("def t (A : Type 0) (a : A) : Id (Id A a a) (concat (refl a) (refl a)) (refl a) := refl (refl a)"),
            "");
}

TEST(Conversion, TransportRefl) {
  EXPECT_EQ(check("def t (A : Type 0) (P : A -> Type 0) (a : A) (u : P a) : Id (P a) (transport P (refl a) u) u := "
                  "refl u"),
            "");
}

TEST(Conversion, JOnRefl) {
  EXPECT_EQ(check("def t (A : Type 0) (a : A) (C : (z : A) -> Id A a z -> Type 0) (d : C a (refl a)) : "
                  "Id (C a (refl a)) (J [z q. C z q] d a (refl a)) d := refl d"),
            "");
}

TEST(Conversion, CircleEliminatorAtBase) {
  EXPECT_EQ(check("hit S1 where\n  | point base : S1\n  | path loop : Id S1 base base\n"
                  "def t (P : S1 -> Type 0) (b : P base) (l : Id (P base) (transport P loop b) b) : "
                  "Id (P base) (S1-ind P b l base) b := refl b"),
            "");
}

TEST(Conversion, ApdOnRefl) {
  EXPECT_EQ(check("def t (A : Type 0) (P : A -> Type 0) (f : (x : A) -> P x) (a : A) : "
                  "Id (Id (P a) (f a) (f a)) (apd f (refl a)) (refl (f a)) := refl (refl (f a))"),
            "");
}

TEST(Conversion, EtaForFunctionsAndPairs) {
  EXPECT_EQ(check("def e (f : Nat -> Nat) : Id (Nat -> Nat) f (\\x. f x) := refl f"), "");
  EXPECT_EQ(check("def e (p : (a : Nat) * Nat) : Id ((a : Nat) * Nat) p (fst p, snd p) := refl p"), "");
}

TEST(Conversion, PrimitiveComputation) {
  EXPECT_EQ(check("def e : Id Nat (natrec [k. Nat] zero (\\k r. succ (succ r)) (succ (succ zero)))"
                  " (succ (succ (succ (succ zero)))) := refl (succ (succ (succ (succ zero))))"),
            "");
  EXPECT_EQ(check("def e : Id Nat (sum-elim [w. Nat] (\\a. a) (\\b. zero) (inl (succ zero) : Sum Nat Unit))"
                  " (succ zero) := refl (succ zero)"),
            "");
  EXPECT_EQ(check("def e : Id Nat (unit-elim [v. Nat] (succ zero) star) (succ zero) := refl (succ zero)"), "");
  EXPECT_EQ(check("def e : Id Nat (fst ((zero, succ zero) : (a : Nat) * Nat)) zero := refl zero"), "");
}

TEST(Conversion, DistinctNormalFormsAreRejected) {
  EXPECT_EQ(check("def e : Id Nat zero (succ zero) := refl zero"), "E-TYPE");
  EXPECT_EQ(check("def e (A : Type 0) (x y : A) (p : Id A x y) : Id (Id A x y) p p := refl (refl x)"), "E-TYPE");
}

TEST(Universes, TypeInTypeIsRejected) {
  EXPECT_EQ(check("def t : Type 0 := Type 0"), "E-UNIV");
  for (int n = 1; n <= 3; ++n) {
    std::string s = std::to_string(n);
    EXPECT_EQ(check("def t : Type " + s + " := Type " + s), "E-UNIV") << n;
  }
  EXPECT_EQ(check("def t : Type 1 := Type 0"), "");
  EXPECT_EQ(check("def t : Type 2 := Type 0"), "E-UNIV");
}

TEST(Universes, PolymorphicInstances) {
  EXPECT_EQ(check("def idt.{u} (A : Type u) : Type u := A\ndef a : Type 1 := idt.{1} (Type 0)\n"
                  "def b : Type 0 := idt Nat"),
            "");
  EXPECT_EQ(check("def idt.{u} (A : Type u) : Type u := A\ndef a : Type 0 := idt (Type 0)"), "E-UNIV");
}

TEST(Typing, Errors) {
  EXPECT_EQ(check("def f : Nat := g"), "E-SCOPE");
  EXPECT_EQ(check("def f : Nat := zero\ndef f : Nat := zero"), "E-SCOPE");
  EXPECT_EQ(check("def f : Nat := star"), "E-TYPE");
  EXPECT_EQ(check("def f : Nat -> Nat := \\x. x x"), "E-TYPE");
  EXPECT_EQ(check("axiom k (A : Type 0) (x : A) (p : Id A x x) : Id (Id A x x) p (refl x)"), "");
}

TEST(Typing, ImplicitArgumentsAreSolved) {
  EXPECT_EQ(check("def t (A : Type 0) (x y z : A) (p : Id A x y) (q : Id A y z) : Id A z x := inv (concat p q)"),
            "");
  EXPECT_EQ(check("def t (f : Nat -> Nat) (m n : Nat) (r : Id Nat m n) : Id Nat (f m) (f n) := ap f r"), "");
}

TEST(Evaluator, NormalizeUnfoldsDefinitions) {
  Session s;
  ASSERT_TRUE(check_with_prelude(s, "def two : Nat := succ (succ zero)\ndef k : Nat -> Nat := \\n. succ n").ok());
  Term t = mk::app(mk::constant("k"), mk::constant("two"));
  EXPECT_TRUE(alpha_equal(testing::normalize(s, t), mk::nat_lit(3)));
  EXPECT_TRUE(testing::convertible(s, t, mk::nat_lit(3)));
  EXPECT_FALSE(testing::convertible(s, t, mk::nat_lit(2)));
}

TEST(Session, FailingDeclarationLeavesSessionUnchanged) {
  Session s;
  auto r = check_with_prelude(s, "def a : Nat := zero\ndef b : Nat := star\ndef c : Nat := zero");
  ASSERT_EQ(r.diagnostics.size(), 1u);
  EXPECT_NE(s.find("a"), nullptr);
  EXPECT_EQ(s.find("b"), nullptr);
  EXPECT_EQ(s.find("c"), nullptr);
  EXPECT_EQ(r.diagnostics[0].span.start_line, 2u);
}

TEST(Session, DependencyCone) {
  Session s;
  ASSERT_TRUE(check_with_prelude(s, "axiom k : Nat\ndef a : Nat := k\ndef b : Nat := succ a").ok());
  auto cone = s.dependency_cone("b");
  EXPECT_TRUE(cone.count("a"));
  EXPECT_TRUE(cone.count("k"));
  EXPECT_FALSE(cone.count("b"));
  EXPECT_TRUE(stdlib::depends_on(s, "b", "k"));
  EXPECT_FALSE(stdlib::depends_on(s, "a", "b"));
}

}  // namespace
}  // namespace hott
