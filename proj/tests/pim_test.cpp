#include <gtest/gtest.h>

#include <map>
#include <stdexcept>

#include "sl2idem/echelon.hpp"
#include "sl2idem/pim.hpp"
#include "sl2idem/verify.hpp"

using namespace sl2idem;

TEST(Echelon, RankAndMembership) {
  EchelonBasis b(5);
  EXPECT_TRUE(b.insert({{0, 1}, {3, 2}}));
  EXPECT_TRUE(b.insert({{3, 1}, {7, 4}}));
  EXPECT_FALSE(b.insert({{0, 2}, {3, 4}}));
  EXPECT_TRUE(b.contains({{0, 1}, {3, 3}, {7, 4}}));
  EXPECT_FALSE(b.contains({{7, 1}}));
  EXPECT_FALSE(b.insert({}));
  EXPECT_EQ(b.rank(), 2u);
  for (const auto& [pivot, row] : b.rows()) {
    EXPECT_EQ(row.front().first, pivot);
    EXPECT_EQ(row.front().second, 1u);
  }
}

TEST(Echelon, DenseRank) {
  FpMatrix m(3, 3, 3);
  m.at(0, 0) = 1, m.at(0, 1) = 2;
  m.at(1, 0) = 2, m.at(1, 1) = 1;  // twice row 0 mod 3
  m.at(2, 2) = 1;
  EXPECT_EQ(m.rank(), 2u);
  EXPECT_EQ(FpMatrix::identity(4, 7).rank(), 4u);
  EXPECT_EQ(FpMatrix::identity(3, 3) * m, m);
}

TEST(WeylAction, DocumentedValues) {
  const auto c2 = AlgebraCtx::make(2, 1, 1);
  const auto x = weyl_action(gen_x(1, c2), WeylModule{1});
  EXPECT_EQ(x.at(0, 1), 1u);
  EXPECT_EQ(x.at(0, 0), 0u);
  EXPECT_EQ(x.at(1, 0), 0u);
  EXPECT_EQ(x.at(1, 1), 0u);
  const auto c3 = AlgebraCtx::make(3, 1, 1);
  const auto h = weyl_action(gen_hbinom(1, c3), WeylModule{1});
  EXPECT_EQ(h.at(0, 0), 1u);
  EXPECT_EQ(h.at(1, 1), 2u);
  EXPECT_EQ(h.at(0, 1), 0u);
}

TEST(WeylAction, DividedPowersOfGenerators) {
  // Y^(1)^m = m! Y^(m) on every V(lambda).
  const auto ctx = AlgebraCtx::make(5, 1, 1);
  for (Word lam = 0; lam <= 8; ++lam) {
    const WeylModule v{lam};
    FpMatrix y = FpMatrix::identity(v.dim(), 5), x = y;
    for (Word m = 1; m < 5; ++m) {
      y = y * weyl_action(gen_y(1, ctx), v);
      x = x * weyl_action(gen_x(1, ctx), v);
      EXPECT_EQ(y, weyl_action(gen_y(m, ctx).scaled(factorial_mod_p(m, 5).value()), v));
      EXPECT_EQ(x, weyl_action(gen_x(m, ctx).scaled(factorial_mod_p(m, 5).value()), v));
    }
  }
}

TEST(WeylAction, HomomorphismOnRandomProducts) {
  for (auto [p, r, rp] : std::vector<std::tuple<Word, Word, Word>>{{2, 1, 1}, {2, 2, 2}, {3, 1, 2}, {3, 2, 2}, {5, 1, 1}}) {
    Rng rng(p * 31 + r * 7 + rp);
    const auto res = check_weyl_homomorphism(AlgebraCtx::make(p, r, rp), rng, 200);
    EXPECT_TRUE(res.pass) << res.detail;
  }
}

TEST(LeftIdeal, DocumentedDimensions) {
  const auto ctx = AlgebraCtx::make(2, 1, 1);
  EXPECT_EQ(left_ideal_span(one(ctx)).dim(), 8u);
  EXPECT_EQ(left_ideal_span(build_e1(make_pair_aj(1, 0, 2), ctx)).dim(), 2u);
  EXPECT_EQ(left_ideal_span(build_e1(make_pair_aj(0, 1, 2), ctx)).dim(), 4u);
}

TEST(TopX, DocumentedValues) {
  const auto ctx = AlgebraCtx::make(2, 1, 1);
  EXPECT_EQ(top_x_exponent(build_e1(make_pair_aj(1, 0, 2), ctx)), 1u);
  EXPECT_EQ(top_x_exponent(build_e1(make_pair_aj(1, 2, 2), ctx)), 0u);
  const auto big = AlgebraCtx::make(3, 2, 2);
  EXPECT_EQ(top_x_exponent(one(big)), 8u);
  EXPECT_THROW(top_x_exponent(zero(big)), std::invalid_argument);
}

TEST(TopX, MatchesClosedFormForEveryLabel) {
  for (auto [p, r] : std::vector<std::pair<Word, Word>>{{2, 1}, {2, 2}, {3, 1}, {3, 2}, {5, 1}}) {
    const auto ctx = AlgebraCtx::make(p, r);
    EXPECT_TRUE(check_top_x_exponents(build_all_idempotents(ctx), ctx).pass);
  }
}

TEST(Weight, DocumentedValues) {
  const auto ctx = AlgebraCtx::make(3, 2, 2);
  for (Word a = 0; a < 9; ++a) EXPECT_EQ(weight_of_idempotent(mu_r(a, 2, ctx)), a);
  const auto c2 = AlgebraCtx::make(2, 1, 1);
  EXPECT_EQ(weight_of_idempotent(build_e1(make_pair_aj(1, 0, 2), c2)), 1u);
  EXPECT_THROW(weight_of_idempotent(one(c2)), std::invalid_argument);
  EXPECT_THROW(weight_of_idempotent(zero(c2)), std::invalid_argument);
}

TEST(Weight, CasesBAndDCarryTheirDigits) {
  const auto ctx = AlgebraCtx::make(3, 2, 3);
  for (const auto& item : build_all_idempotents(ctx)) {
    bool bd = true;
    for (const auto& pr : item.label.pairs) bd = bd && (pr.tag == CaseTag::B || pr.tag == CaseTag::D);
    if (!bd) continue;
    const Word expect = item.label.pairs[0].a + 3 * item.label.pairs[1].a + 9 * *item.label.a_prime;
    EXPECT_EQ(weight_of_idempotent(item.element), expect) << format_label(item.label);
  }
}

TEST(ClosedFormLabel, DocumentedValues) {
  const auto ctx = AlgebraCtx::make(2, 1, 2);
  auto lab = pim_label_closed_form(TupleLabel{{make_pair_aj(1, 0, 2)}, 0}, ctx);
  EXPECT_EQ(lab.betas, (std::vector<Word>{1}));
  EXPECT_EQ(lab.lambda_prime, 1u);
  EXPECT_EQ(lab.lambda_double_prime, 1u);
  EXPECT_EQ(lab.dim, 2u);
  EXPECT_EQ(weight_sum(TupleLabel{{make_pair_aj(1, 0, 2)}, 0}, 2), -1);
  // a' = p^{r'-r} - 1 wraps to 0.
  lab = pim_label_closed_form(TupleLabel{{make_pair_aj(1, 0, 2)}, 1}, ctx);
  EXPECT_EQ(lab.lambda_double_prime, 0u);

  const auto c3 = AlgebraCtx::make(3, 1, 2);
  for (Word ap = 0; ap < 3; ++ap) {
    lab = pim_label_closed_form(TupleLabel{{make_pair_aj(0, 2, 3)}, ap}, c3);
    EXPECT_EQ(lab.betas, (std::vector<Word>{0}));
    EXPECT_EQ(lab.lambda_double_prime, ap);
    EXPECT_EQ(lab.dim, 6u);
  }
}

TEST(ClosedFormLabel, CensusForThree) {
  const auto ctx = AlgebraCtx::make(3, 1, 1);
  std::map<Word, int> mult;
  std::uint64_t total = 0;
  for (const auto& l : enumerate_labels(ctx)) {
    const auto lab = pim_label_closed_form(l, ctx);
    ++mult[lab.lambda_prime];
    total += lab.dim;
  }
  EXPECT_EQ(mult, (std::map<Word, int>{{0, 1}, {1, 2}, {2, 3}}));
  EXPECT_EQ(total, 27u);
}

TEST(ClosedFormLabel, DimensionFormula) {
  EXPECT_EQ(pim_dimension({2, 2}, 3), 9u);
  EXPECT_EQ(pim_dimension({0, 2}, 3), 18u);
  EXPECT_EQ(pim_dimension({0, 1}, 3), 36u);
}

TEST(Invariants, RecoverLabelFromWeightAndTopExponent) {
  const auto ctx = AlgebraCtx::make(2, 1, 2);
  // b = -1 < 0, so nu = -1 + 2 + 0.
  const TupleLabel l{{make_pair_aj(1, 0, 2)}, 0};
  EXPECT_EQ(predicted_weight(l, ctx), 1u);
  const auto inv = pim_label_from_invariants(1, 1, ctx);
  EXPECT_TRUE(inv.consistent);
  EXPECT_EQ(inv.lambda_prime, 1);
  EXPECT_EQ(inv.lambda_double_prime, 1u);
  EXPECT_FALSE(pim_label_from_invariants(0, 0, AlgebraCtx::make(3, 1, 1)).consistent);
}

TEST(PimTable, EveryRowPassesAndCensusMatches) {
  for (auto [p, r, rp] : std::vector<std::tuple<Word, Word, Word>>{{2, 1, 1}, {2, 2, 2}, {2, 1, 2}, {3, 1, 1}, {3, 1, 2}, {5, 1, 1}}) {
    const auto ctx = AlgebraCtx::make(p, r, rp);
    for (const auto& c : check_pims(ctx)) EXPECT_TRUE(c.pass) << p << r << rp << " " << c.name << " " << c.detail;
  }
}

TEST(PimTable, CharacteristicTwoRows) {
  const auto rows = pim_table(AlgebraCtx::make(2, 1, 1));
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[0].computed_dim, 4u);
  EXPECT_EQ(rows[1].computed_dim, 2u);
  EXPECT_EQ(rows[2].computed_dim, 2u);
}
