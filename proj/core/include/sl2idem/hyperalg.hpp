#ifndef SL2IDEM_HYPERALG_HPP
#define SL2IDEM_HYPERALG_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <vector>

#include "sl2idem/modp.hpp"

namespace sl2idem {

namespace detail {
struct CtxTables;
}

/// The algebra U_{r,r'}: divided powers X^(m), Y^(m) with m < p^r and the
/// torus part U^0_{r'} spanned by C(H, n), n < p^{r'}. rprime == r is U_r.
///
/// Contexts are cheap to copy; the binomial tables they carry are shared
/// and immutable.
class AlgebraCtx {
 public:
  // Throws std::invalid_argument on a non-prime p, r == 0, rprime < r, or a
  // context too large to tabulate.
  static AlgebraCtx make(Word p, Word r, Word rprime);
  static AlgebraCtx make(Word p, Word r) { return make(p, r, r); }

  Word p() const { return p_; }
  Word r() const { return r_; }
  Word rprime() const { return rprime_; }

  // p^r: exclusive bound on divided-power exponents.
  Word exponent_bound() const { return exponent_bound_; }
  // p^{r'}: number of U^0_{r'} weights.
  Word weight_count() const { return weight_count_; }
  // p^{2r + r'}
  std::uint64_t dimension() const;

  // C(x, n) mod p for 0 <= x, n < p^{r'}.
  Word pascal(Word x, Word n) const;
  // C(top, bottom) mod p for top < 2 p^r, bottom < p^r.
  Word exponent_binom(Word top, Word bottom) const;

  friend bool operator==(const AlgebraCtx& a, const AlgebraCtx& b) {
    return a.p_ == b.p_ && a.r_ == b.r_ && a.rprime_ == b.rprime_;
  }

 private:
  AlgebraCtx() = default;

  Word p_ = 0;
  Word r_ = 0;
  Word rprime_ = 0;
  Word exponent_bound_ = 0;
  Word weight_count_ = 0;
  std::shared_ptr<const detail::CtxTables> tables_;
};

// Largest p^{r'} and p^{2r+r'} accepted by AlgebraCtx::make.
inline constexpr Word kMaxWeightCount = 2048;
inline constexpr std::uint64_t kMaxDimension = std::uint64_t{1} << 24;

/// An element of U^0_{r'} in evaluation form: values()[lambda] is its
/// eigenvalue on weight lambda, for lambda in [0, p^{r'}).
class WeightFn {
 public:
  WeightFn() = default;
  explicit WeightFn(std::vector<Word> values) : values_(std::move(values)) {}

  static WeightFn constant(Word c, Word size) { return WeightFn(std::vector<Word>(size, c)); }

  std::span<const Word> values() const { return values_; }
  Word operator[](std::size_t i) const { return values_[i]; }
  std::size_t size() const { return values_.size(); }
  bool is_zero() const;

  friend bool operator==(const WeightFn&, const WeightFn&) = default;

 private:
  std::vector<Word> values_;
};

/// lambda -> f((lambda + s) mod p^{r'}). Moving f past X^(n) from left to
/// right shifts by +2n; past Y^(n) by -2n.
WeightFn shift_weightfn(const WeightFn& f, std::int64_t s);

// Pointwise product, scaled.
WeightFn pointwise(const WeightFn& f, const WeightFn& g, Word p);

/// Coordinates of f in the basis C(H, n), n < p^{r'}.
std::vector<Word> weightfn_to_coeffs(const WeightFn& f, const AlgebraCtx& ctx);
WeightFn coeffs_to_weightfn(std::span<const Word> coeffs, const AlgebraCtx& ctx);

struct TermKey {
  Word yexp = 0;
  Word xexp = 0;
  friend auto operator<=>(const TermKey&, const TermKey&) = default;
};

/// Sum of Y^(m) f_{m,m'} X^(m') over a finite set of (m, m'), stored with no
/// identically-zero weight function.
class HyperElem {
 public:
  using TermMap = std::map<TermKey, WeightFn>;

  explicit HyperElem(AlgebraCtx ctx) : ctx_(std::move(ctx)) {}
  // Validates ranges and drops zero terms.
  HyperElem(AlgebraCtx ctx, TermMap terms);

  const AlgebraCtx& ctx() const { return ctx_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  HyperElem operator+(const HyperElem& o) const;
  HyperElem operator-(const HyperElem& o) const;
  HyperElem operator*(const HyperElem& o) const;
  HyperElem& operator+=(const HyperElem& o) { return *this = *this + o; }
  HyperElem scaled(Word c) const;

  friend bool operator==(const HyperElem& a, const HyperElem& b) {
    return a.ctx_ == b.ctx_ && a.terms_ == b.terms_;
  }

 private:
  AlgebraCtx ctx_;
  TermMap terms_;
};

HyperElem zero(const AlgebraCtx& ctx);
HyperElem one(const AlgebraCtx& ctx);
HyperElem gen_x(Word n, const AlgebraCtx& ctx);
HyperElem gen_y(Word n, const AlgebraCtx& ctx);
HyperElem gen_hbinom(Word n, const AlgebraCtx& ctx);
// Y^(m) C(H, n) X^(m')
HyperElem basis_element(Word m, Word n, Word mprime, const AlgebraCtx& ctx);
HyperElem from_weightfn(WeightFn f, const AlgebraCtx& ctx);

/// Normal-form product. Each pair of terms is expanded with the commutation
/// rule for X^(a) Y^(b); exponents that leave [0, p^r) come with a binomial
/// coefficient that vanishes mod p and are dropped. Throws
/// std::invalid_argument on a context mismatch.
HyperElem multiply(const HyperElem& u, const HyperElem& v);

// Parts of u keyed by degree m' - m.
std::map<std::int64_t, HyperElem> degree_decompose(const HyperElem& u);

/// Frobenius: U_{r,r'} -> U_{r-1,r'-1}. Requires r >= 2.
HyperElem fr(const HyperElem& u);
// Same map through the C(H, n) coordinates.
HyperElem fr_via_coeffs(const HyperElem& u);

/// Splitting of Fr: Y^(m) C(H,n) X^(m') -> Y^(mp) C(H,np) X^(m'p), landing
/// in U_{r+1,r'+1}. On weight functions this is g(lambda) -> g(floor(lambda/p)).
HyperElem fr_prime(const HyperElem& u);

// Same map computed through the C(H, n) coordinates; used to cross-check.
HyperElem fr_prime_via_coeffs(const HyperElem& u);

/// Natural inclusion U_{s,s'} into a larger context.
HyperElem embed(const HyperElem& u, const AlgebraCtx& target);

}  // namespace sl2idem

#endif  // SL2IDEM_HYPERALG_HPP
