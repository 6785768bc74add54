#include <gtest/gtest.h>

#include <stdexcept>

#include "sl2idem/fpoly.hpp"
#include "sl2idem/idem.hpp"

using namespace sl2idem;

namespace {

Poly P(std::vector<Word> c, Word p) { return Poly(std::move(c), p); }

// prod over i in F_p of (x - i^2), multiplied out factor by factor.
Poly brute_psi(Word p) {
  Poly acc = Poly::constant(Fp(1, p));
  for (Word i = 0; i < p; ++i) acc = acc * Poly::linear_factor(Fp(i, p) * Fp(i, p));
  return acc;
}

}  // namespace

TEST(Poly, RingOperations) {
  EXPECT_TRUE(P({1, 0, 1}, 5).eval(Fp(2, 5)).is_zero());
  auto [q, r] = divrem(P({0, 0, 1}, 7), Poly::x(7));
  EXPECT_EQ(q, Poly::x(7));
  EXPECT_TRUE(r.is_zero());
  EXPECT_EQ(Poly::linear_factor(Fp(1, 3)) * Poly::linear_factor(Fp(2, 3)), P({2, 0, 1}, 3));
  EXPECT_THROW(divrem(Poly::x(3), Poly(3)), std::domain_error);
  EXPECT_EQ(Poly(5).degree(), -1);
}

TEST(Poly, DivremReconstructs) {
  const Poly num = P({3, 1, 4, 1, 5, 9, 2, 6}, 11), den = P({5, 3, 5}, 11);
  auto [q, r] = divrem(num, den);
  EXPECT_LT(r.degree(), den.degree());
  EXPECT_EQ(q * den + r, num);
}

TEST(Poly, ShiftArgumentMatchesEvaluation) {
  const Poly f = P({4, 0, 2, 1}, 7);
  const Fp c(3, 7);
  const Poly g = f.shift_argument(c);
  for (Word x = 0; x < 7; ++x) EXPECT_EQ(g.eval(Fp(x, 7)), f.eval(Fp(x, 7) + c));
}

TEST(Phi, DocumentedValues) {
  for (Word a = 0; a < 5; ++a) EXPECT_EQ(build_phi(Fp(a, 5), 0), Poly::constant(Fp(1, 5)));
  EXPECT_EQ(build_phi(Fp(0, 5), 2), P({0, 3, 1}, 5));
  EXPECT_EQ(build_phi(Fp(1, 3), 1), Poly::x(3));
}

TEST(Psi, DocumentedValues) {
  EXPECT_EQ(build_psi(3), P({0, 1, 1, 1}, 3));
  EXPECT_EQ(build_psi_j(0, 3), P({1, 1, 1}, 3));
  EXPECT_EQ(build_psi_j(1, 3), P({0, 2, 2}, 3));
  EXPECT_THROW(build_psi(2), std::invalid_argument);
  EXPECT_THROW(build_psi_j(0, 2), std::invalid_argument);
}

TEST(Psi, DegreesAndBruteForceProduct) {
  for (Word p : {3u, 5u, 7u, 11u, 13u}) {
    EXPECT_EQ(build_psi(p), brute_psi(p));
    EXPECT_EQ(build_psi(p).degree(), static_cast<int>(p));
    for (Word j = 0; j <= (p - 1) / 2; ++j) EXPECT_EQ(build_psi_j(j, p).degree(), static_cast<int>(p - 1));
  }
}

TEST(Psi, ShiftedPsiEqualsPhiTop) {
  for (Word p : {3u, 5u, 7u, 11u})
    for (Word a = 0; a < p; ++a)
      EXPECT_EQ(build_psi(p).shift_argument(half_shift_square(Fp(a, p))), build_phi(Fp(a, p), p));
}

TEST(Psi, PartitionOfUnityAndOrthogonality) {
  for (Word p : {3u, 5u, 7u, 11u, 13u}) {
    const Word half = (p - 1) / 2;
    Poly sum(p);
    for (Word j = 0; j <= half; ++j) sum = sum + build_psi_j(j, p);
    EXPECT_EQ(sum, Poly::constant(Fp(1, p)));
    for (Word m = 0; m <= half; ++m)
      for (Word n = 0; n <= half; ++n) {
        Poly lhs = build_psi_j(m, p) * build_psi_j(n, p);
        if (m == n) lhs = lhs - build_psi_j(m, p);
        EXPECT_TRUE(divrem(lhs, build_psi(p)).second.is_zero()) << "p=" << p << " m=" << m << " n=" << n;
      }
  }
}

TEST(PhiBasis, ExpansionReconstructsPolynomial) {
  const Word p = 7;
  const Poly f = P({1, 6, 0, 3, 2, 5, 4}, p);
  for (Word a = 0; a < p; ++a) {
    const auto c = expand_in_phi_basis(f, Fp(a, p));
    ASSERT_EQ(c.size(), p);
    Poly back(p);
    for (Word m = 0; m < p; ++m) back = back + build_phi(Fp(a, p), m).scaled(Fp(c[m], p));
    EXPECT_EQ(back, f);
  }
}

TEST(PhiBasis, BasisVectorsAndConstants) {
  const Word p = 5;
  auto c = expand_in_phi_basis(Poly::constant(Fp(1, p)), Fp(2, p));
  EXPECT_EQ(c, (std::vector<Word>{1, 0, 0, 0, 0}));
  for (Word k = 0; k < p; ++k) {
    c = expand_in_phi_basis(build_phi(Fp(3, p), k), Fp(3, p));
    for (Word m = 0; m < p; ++m) EXPECT_EQ(c[m], m == k ? 1u : 0u);
  }
}

TEST(Divisibility, DocumentedValues) {
  EXPECT_EQ(n_by_divisibility(Fp(0, 3), 1, 3), 0u);
  EXPECT_EQ(n_by_divisibility(Fp(0, 3), 0, 3), 1u);
  EXPECT_EQ(n_by_divisibility(Fp(2, 5), 2, 5), 3u);
}

TEST(Divisibility, MatchesClosedForms) {
  for (Word p : {3u, 5u, 7u, 11u, 13u})
    for (const auto& pr : enumerate_pairs(p)) {
      EXPECT_EQ(n_by_divisibility(Fp(pr.a, p), pr.two_j / 2, p), n_closed(pr, p));
      EXPECT_EQ(n_by_divisibility(-Fp(pr.a, p), pr.two_j / 2, p), n_tilde_closed(pr, p));
    }
}

TEST(Divisibility, LeadingPhiCoefficientNonzero) {
  for (Word p : {3u, 5u, 7u})
    for (const auto& pr : enumerate_pairs(p)) {
      const Fp a(pr.a, p);
      const auto c = expand_in_phi_basis(build_psi_j(pr.two_j / 2, p).shift_argument(half_shift_square(a)), a);
      const Word n = n_closed(pr, p);
      for (Word m = 0; m < n; ++m) EXPECT_EQ(c[m], 0u);
      EXPECT_NE(c[n], 0u);
    }
}
