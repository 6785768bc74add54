#ifndef SL2IDEM_PIM_HPP
#define SL2IDEM_PIM_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "sl2idem/echelon.hpp"
#include "sl2idem/hyperalg.hpp"
#include "sl2idem/idem.hpp"

namespace sl2idem {

/// Weyl module V(lambda) with basis v_i = Y^(i) v_lambda, 0 <= i <= lambda.
struct WeylModule {
  Word lambda = 0;
  Word dim() const { return lambda + 1; }
};

/// Matrix of u on V(lambda); column i is the image of v_i.
///   Y^(m) v_i = C(i+m, m) v_{i+m},  X^(m) v_i = C(lambda-i+m, m) v_{i-m},
/// and a weight function f acts on v_i by f[(lambda - 2i) mod p^{r'}].
FpMatrix weyl_action(const HyperElem& u, const WeylModule& v);

/// Coordinates of u in the basis Y^(m) 1_lambda X^(m'), where 1_lambda is the
/// weight indicator: index ((m * p^r) + m') * p^{r'} + lambda.
SparseVec coordinates(const HyperElem& u);

struct IdealBasis {
  EchelonBasis basis;
  std::size_t dim() const { return basis.rank(); }
};

/// Smallest subspace containing e and closed under left multiplication by
/// X^(p^i), Y^(p^i) (i < r) and C(H, p^l) (l < r').
IdealBasis left_ideal_span(const HyperElem& e);

/// Largest n < p^r with X^(n) e != 0. Throws std::invalid_argument on e = 0.
Word top_x_exponent(const HyperElem& e);

/// The nu in [0, p^{r'}) with mu_nu e = e, where mu_nu projects onto weights
/// congruent to nu mod p^{r'}. Throws std::invalid_argument when e is not a
/// weight vector.
Word weight_of_idempotent(const HyperElem& e);

/// PIM named by (lambda', lambda'') with lambda' = sum beta_i p^i.
struct PimLabel {
  std::vector<Word> betas;
  Word lambda_prime = 0;
  Word lambda_double_prime = 0;
  std::uint64_t dim = 0;

  friend bool operator==(const PimLabel&, const PimLabel&) = default;
};

// Product over digits of (beta = p-1 ? p : 2p).
std::uint64_t pim_dimension(const std::vector<Word>& betas, Word p);

// p - 2j - 1 for B/C, 2j - 1 for A/D.
Word beta_of(const PairAJ& pair, Word p);

/// sum b_i p^i for the label's pairs (may be negative).
std::int64_t weight_sum(const TupleLabel& label, Word p);

/// sum b_i p^i + a' p^r, plus p^r when the sum is negative, mod p^{r'}.
Word predicted_weight(const TupleLabel& label, const AlgebraCtx& ctx);

/// sum (p - 1 - n~(a_i, j_i)) p^i
Word predicted_top_x_exponent(const TupleLabel& label, Word p);

PimLabel pim_label_closed_form(const TupleLabel& label, const AlgebraCtx& ctx);

/// (lambda', lambda'') recovered from a generator's weight nu and top X
/// exponent t. `consistent` is false when lambda' leaves [0, p^r); such
/// labels are flagged, not resolved.
struct InvariantLabel {
  std::int64_t lambda_prime = 0;
  Word lambda_double_prime = 0;
  bool consistent = false;
};
InvariantLabel pim_label_from_invariants(Word nu, Word t, const AlgebraCtx& ctx);

struct PimRow {
  TupleLabel label;
  Word nu = 0;
  Word t = 0;
  PimLabel predicted;
  InvariantLabel observed;
  std::uint64_t computed_dim = 0;
  bool weight_ok = false;
  bool top_ok = false;
  bool pass = false;
};

/// One row per label in enumerate_labels order.
std::vector<PimRow> pim_table(const AlgebraCtx& ctx);

}  // namespace sl2idem

#endif  // SL2IDEM_PIM_HPP
