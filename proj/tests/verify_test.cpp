#include <gtest/gtest.h>

#include "sl2idem/verify.hpp"

using namespace sl2idem;

namespace {

void expect_all_pass(const std::vector<CheckResult>& results) {
  for (const auto& c : results) EXPECT_TRUE(c.pass) << c.name << ": " << c.detail;
}

}  // namespace

TEST(Suites, BasicPassesOnSmallContexts) {
  for (auto [p, r, rp] : std::vector<std::tuple<Word, Word, Word>>{{2, 1, 1}, {2, 3, 3}, {3, 1, 2}, {5, 1, 1}})
    expect_all_pass(run_suite(AlgebraCtx::make(p, r, rp), Suite::Basic, kDefaultSeed));
}

TEST(Suites, FullPassesOnSmallContexts) {
  for (auto [p, r, rp] : std::vector<std::tuple<Word, Word, Word>>{{2, 2, 2}, {3, 1, 1}, {3, 2, 2}})
    expect_all_pass(run_suite(AlgebraCtx::make(p, r, rp), Suite::Full, kDefaultSeed));
}

TEST(Suites, BasicLabelCountReportsTotal) {
  const auto results = run_suite(AlgebraCtx::make(2, 3, 3), Suite::Basic, 1);
  ASSERT_FALSE(results.empty());
  EXPECT_EQ(results[0].name, "label-count");
  EXPECT_NE(results[0].detail.find("27 idempotents"), std::string::npos);
}

TEST(Suites, DetectsBrokenDecomposition) {
  const auto ctx = AlgebraCtx::make(3, 1, 1);
  auto items = build_all_idempotents(ctx);
  items.pop_back();
  const auto results = check_decomposition(items, ctx);
  bool any_fail = false;
  for (const auto& c : results) any_fail = any_fail || !c.pass;
  EXPECT_TRUE(any_fail);

  items = build_all_idempotents(ctx);
  items[0].element = items[0].element + items[1].element.scaled(2);
  EXPECT_FALSE(check_decomposition(items, ctx)[1].pass);
}

TEST(Suites, PolynomialIdentitiesAcrossPrimes) {
  for (Word p : {3u, 5u, 7u, 11u, 13u}) expect_all_pass(check_polynomial_identities(p));
  for (const auto& c : check_polynomial_identities(2)) EXPECT_TRUE(c.skipped);
}

TEST(Suites, ProductFormulaAndIndependence) {
  for (Word p : {2u, 3u, 5u}) EXPECT_TRUE(check_yx_product_formula(p).pass);
  for (Word p : {2u, 3u}) EXPECT_TRUE(check_multiplication_independence(p).pass);
  EXPECT_TRUE(check_multiplication_independence(5).skipped);
}

TEST(RandomElements, SeededAndWithinContext) {
  const auto ctx = AlgebraCtx::make(3, 2, 2);
  Rng a(99), b(99);
  for (int t = 0; t < 10; ++t) {
    const auto u = random_element(ctx, a), v = random_element(ctx, b);
    EXPECT_EQ(u, v);
    EXPECT_LE(u.term_count(), 4u);
    EXPECT_EQ(random_basis_element(ctx, a).term_count(), random_basis_element(ctx, b).term_count());
  }
}
