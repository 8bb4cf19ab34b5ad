#include <gtest/gtest.h>

#include "hott/diagnostic.hpp"
#include "hott/syntax/source.hpp"
#include "hott/syntax/term.hpp"

namespace hott {
namespace {

TEST(Term, AlphaEqualIgnoresBinderNames) {
  Term a = mk::lam("x", mk::var(0));
  Term b = mk::lam("y", mk::var(0));
  EXPECT_TRUE(alpha_equal(a, b));
  EXPECT_FALSE(alpha_equal(a, mk::lam("x", mk::zero())));
}

TEST(Term, AlphaEqualRespectsPlicityAndLevels) {
  EXPECT_FALSE(alpha_equal(mk::app(mk::var(0), mk::zero()), mk::app(mk::var(0), mk::zero(), Plicity::Implicit)));
  EXPECT_FALSE(alpha_equal(mk::constant("c", {0}), mk::constant("c", {1})));
  EXPECT_TRUE(alpha_equal(mk::constant("c", {2}), mk::constant("c", {2})));
}

TEST(Term, ShiftMovesOnlyFreeIndices) {
  Term t = mk::lam("x", mk::app(mk::var(0), mk::var(1)));
  Term s = shift(t, 0, 2);
  EXPECT_TRUE(alpha_equal(s, mk::lam("x", mk::app(mk::var(0), mk::var(3)))));
  EXPECT_TRUE(alpha_equal(shift(s, 0, -2), t));
}

TEST(Term, ShiftUnderflowIsInternalError) { EXPECT_THROW(shift(mk::var(0), 0, -1), InternalError); }

TEST(Term, SubstituteIsBetaReduction) {
  Term body = mk::app(mk::var(0), mk::var(1));
  Term r = substitute(body, 0, mk::var(5));
  EXPECT_TRUE(alpha_equal(r, mk::app(mk::var(5), mk::var(0))));
}

TEST(Term, SubstituteShiftsReplacementUnderBinders) {
  Term body = mk::lam("y", mk::var(1));
  Term r = substitute(body, 0, mk::var(0));
  EXPECT_TRUE(alpha_equal(r, mk::lam("y", mk::var(1))));
}

TEST(Term, ArrowShiftsCodomain) {
  Term a = mk::arrow(mk::var(0), mk::var(0));
  const auto* pi = as<tm::Pi>(a);
  ASSERT_NE(pi, nullptr);
  EXPECT_TRUE(alpha_equal(pi->codomain, mk::var(1)));
}

TEST(Term, WellScopedCountsBinders) {
  Term t = mk::pi("x", mk::nat(), mk::id(mk::nat(), mk::var(0), mk::var(1)));
  EXPECT_FALSE(well_scoped(t));
  EXPECT_TRUE(well_scoped(t, 1));
  EXPECT_TRUE(well_scoped(mk::j("z", "q", mk::id(mk::nat(), mk::var(1), mk::var(0)), mk::zero(), mk::zero(),
                                mk::refl(mk::nat(), mk::zero()))));
}

TEST(Term, OccursFree) {
  Term t = mk::lam("x", mk::app(mk::var(0), mk::var(2)));
  EXPECT_TRUE(occurs_free(t, 1));
  EXPECT_FALSE(occurs_free(t, 0));
}

TEST(Term, NatLiteral) {
  EXPECT_TRUE(alpha_equal(mk::nat_lit(2), mk::succ(mk::succ(mk::zero()))));
  EXPECT_EQ(term_size(mk::nat_lit(3)), 4u);
}

TEST(Source, LineAndColumn) {
  SourceFile f("a.hott", "ab\ncd\n\nxyz");
  EXPECT_EQ(f.line_of(0), 1u);
  EXPECT_EQ(f.line_of(3), 2u);
  EXPECT_EQ(f.col_of(4), 2u);
  EXPECT_EQ(f.line_of(7), 4u);
  EXPECT_EQ(f.line_text(2), "cd");
  SourceSpan s = f.span(3, 5);
  EXPECT_EQ(s.start_line, 2u);
  EXPECT_EQ(s.start_col, 1u);
  EXPECT_EQ(s.file, "a.hott");
}

TEST(Diagnostic, MachineFormatIsTabSeparated) {
  SourceFile f("x.hott", "def a : Nat := b\n");
  Diagnostic d{Severity::Error, std::string(code::scope), "unknown identifier b", f.span(15, 16), {}};
  EXPECT_EQ(format_machine(d), "E-SCOPE\tx.hott\t1\t16\tunknown identifier b\n");
  std::string human = format_human(d, &f);
  EXPECT_NE(human.find("x.hott:1:16"), std::string::npos);
  EXPECT_NE(human.find("E-SCOPE"), std::string::npos);
}

TEST(Diagnostic, KnownCodes) {
  for (auto c : {code::parse, code::scope, code::type, code::univ, code::hit_schema, code::loopform, code::manifest})
    EXPECT_TRUE(is_known_code(c));
  EXPECT_FALSE(is_known_code("E-NOPE"));
}

}  // namespace
}  // namespace hott
