#include <gtest/gtest.h>

#include <random>

#include "properties.hpp"

namespace hott {
namespace {

using testing::corpus;

std::string first(const testing::PropertyReport& r) { return r.failures.empty() ? "" : r.failures.front(); }

TEST(Properties, NormalizationIsIdempotentAndTypePreserving) {
  auto r = testing::normalization_properties(corpus().session);
  EXPECT_GT(r.checked, 100u);
  EXPECT_TRUE(r.failures.empty()) << r.failures.size() << " failures, first: " << first(r);
}

TEST(Properties, PrintParseResolveRoundTrip) {
  auto r = testing::round_trip_property(corpus().session);
  EXPECT_GT(r.checked, 200u);
  EXPECT_TRUE(r.failures.empty()) << r.failures.size() << " failures, first: " << first(r);
}

Term random_nat_term(std::mt19937_64& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, depth > 0 ? 3 : 0);
  switch (pick(rng)) {
    case 1:
      return mk::succ(random_nat_term(rng, depth - 1));
    case 2:
      return mk::app(mk::app(mk::constant("add"), random_nat_term(rng, depth - 1)), random_nat_term(rng, depth - 1));
    case 3:
      return mk::app(mk::lam("n", mk::succ(mk::var(0)), Plicity::Explicit, mk::nat()), random_nat_term(rng, depth - 1));
    default:
      return mk::zero();
  }
}

std::size_t value_of(const Term& t) {
  std::size_t n = 0;
  Term cur = t;
  while (const auto* s = as<tm::Succ>(cur)) {
    ++n;
    Term next = s->pred;
    cur = next;
  }
  EXPECT_TRUE(is<tm::Zero>(cur));
  return n;
}

std::size_t oracle_value(const Term& t) {
  if (is<tm::Zero>(t)) return 0;
  if (const auto* s = as<tm::Succ>(t)) return 1 + oracle_value(s->pred);
  const auto* app = as<tm::App>(t);
  if (is<tm::Lambda>(app->fn)) return 1 + oracle_value(app->arg);
  const auto* inner = as<tm::App>(app->fn);
  return oracle_value(inner->arg) + oracle_value(app->arg);
}

TEST(Properties, ArithmeticAgreesWithOracle) {
  auto& s = corpus().session;
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    Term t = random_nat_term(rng, 4);
    Term nf = testing::normalize(s, t);
    EXPECT_EQ(value_of(nf), oracle_value(t)) << parse::print(t);
    EXPECT_TRUE(alpha_equal(testing::normalize(s, nf), nf));
    EXPECT_NO_THROW(testing::check_closed(s, nf, mk::nat()));
  }
}

}  // namespace
}  // namespace hott
