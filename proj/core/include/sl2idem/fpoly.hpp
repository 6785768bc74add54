#ifndef SL2IDEM_FPOLY_HPP
#define SL2IDEM_FPOLY_HPP

#include <utility>
#include <vector>

#include "sl2idem/modp.hpp"

namespace sl2idem {

/// Dense univariate polynomial over F_p. coeffs()[i] is the coefficient of
/// x^i; the highest stored coefficient is nonzero unless the polynomial is 0.
class Poly {
 public:
  explicit Poly(Word p);
  Poly(std::vector<Word> coeffs, Word p);

  static Poly constant(Fp c);
  static Poly x(Word p);
  // x - root
  static Poly linear_factor(Fp root);

  Word modulus() const { return p_; }
  const std::vector<Word>& coeffs() const { return coeffs_; }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Word coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly scaled(Fp c) const;

  Fp eval(Fp x) const;
  // f(x + c)
  Poly shift_argument(Fp c) const;

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  void trim();
  void check_same_field(const Poly& o) const;

  std::vector<Word> coeffs_;
  Word p_;
};

// Throws std::domain_error when the divisor is zero.
std::pair<Poly, Poly> divrem(const Poly& num, const Poly& den);

/// prod_{i=0}^{n-1} (x - i(i+a+1)); 1 for n = 0.
Poly build_phi(Fp a, Word n);

/// prod over all i in F_p of (x - i^2). Odd p only.
Poly build_psi(Word p);

/// psi_0 = prod_{i in S\{0}} (x - i^2)^2 and, for 1 <= j <= (p-1)/2,
/// psi_j = 2x(x + j^2) prod_{i in S\{0,j}} (x - i^2)^2, where
/// S = {0, ..., (p-1)/2}. Odd p only.
Poly build_psi_j(Word j, Word p);

/// ((a+1)/2)^2 in F_p (p odd).
Fp half_shift_square(Fp a);

/// Coefficients c_0..c_{p-1} with f = sum_m c_m phi_{a,m}; deg f <= p-1.
/// The phi_{a,m} are monic of degree m, so back-substitution from the top
/// degree is exact.
std::vector<Word> expand_in_phi_basis(const Poly& f, Fp a);

/// Largest n with phi_{a,n} dividing psi_j(x + ((a+1)/2)^2), found by
/// peeling off one linear factor x - i(i+a+1) at a time.
Word n_by_divisibility(Fp a, Word j, Word p);

}  // namespace sl2idem

#endif  // SL2IDEM_FPOLY_HPP
