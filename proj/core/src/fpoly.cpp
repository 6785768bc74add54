#include "sl2idem/fpoly.hpp"

#include <stdexcept>

namespace sl2idem {

Poly::Poly(Word p) : p_(p) {}

Poly::Poly(std::vector<Word> coeffs, Word p) : coeffs_(std::move(coeffs)), p_(p) {
  for (auto& c : coeffs_) c %= p_;
  trim();
}

Poly Poly::constant(Fp c) { return Poly({c.value()}, c.modulus()); }

Poly Poly::x(Word p) { return Poly({0, 1}, p); }

Poly Poly::linear_factor(Fp root) { return Poly({(-root).value(), 1}, root.modulus()); }

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

void Poly::check_same_field(const Poly& o) const {
  if (p_ != o.p_) throw std::invalid_argument("polynomials over different fields");
}

Poly Poly::operator+(const Poly& o) const {
  check_same_field(o);
  std::vector<Word> out(std::max(coeffs_.size(), o.coeffs_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = (coeff(i) + o.coeff(i)) % p_;
  return Poly(std::move(out), p_);
}

Poly Poly::operator-(const Poly& o) const {
  check_same_field(o);
  std::vector<Word> out(std::max(coeffs_.size(), o.coeffs_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = (coeff(i) + p_ - o.coeff(i)) % p_;
  return Poly(std::move(out), p_);
}

Poly Poly::operator*(const Poly& o) const {
  check_same_field(o);
  if (is_zero() || o.is_zero()) return Poly(p_);
  std::vector<Word> out(coeffs_.size() + o.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
      out[i + j] = (out[i + j] + mul_mod(coeffs_[i], o.coeffs_[j], p_)) % p_;
  return Poly(std::move(out), p_);
}

Poly Poly::scaled(Fp c) const {
  if (c.modulus() != p_) throw std::invalid_argument("scalar from a different field");
  std::vector<Word> out(coeffs_);
  for (auto& v : out) v = mul_mod(v, c.value(), p_);
  return Poly(std::move(out), p_);
}

Fp Poly::eval(Fp x) const {
  if (x.modulus() != p_) throw std::invalid_argument("evaluation point from a different field");
  std::uint64_t acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = (acc * x.value() + *it) % p_;
  return Fp(static_cast<std::int64_t>(acc), p_);
}

Poly Poly::shift_argument(Fp c) const {
  // Horner in the ring: f(x+c) = (...(a_n (x+c) + a_{n-1})(x+c) + ...).
  Poly arg({c.value(), 1}, p_);
  Poly acc(p_);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * arg + Poly({*it}, p_);
  return acc;
}

std::pair<Poly, Poly> divrem(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw std::domain_error("polynomial division by zero");
  if (num.modulus() != den.modulus()) throw std::invalid_argument("polynomials over different fields");
  const Word p = num.modulus();
  std::vector<Word> rem = num.coeffs();
  if (num.degree() < den.degree()) return {Poly(p), num};
  const int dd = den.degree();
  const Word lead_inv = inv_mod(den.coeffs().back(), p);
  std::vector<Word> quot(static_cast<std::size_t>(num.degree() - dd + 1), 0);
  for (int k = num.degree(); k >= dd; --k) {
    Word c = mul_mod(rem[k], lead_inv, p);
    quot[k - dd] = c;
    if (c == 0) continue;
    for (int i = 0; i <= dd; ++i) {
      Word sub = mul_mod(c, den.coeffs()[i], p);
      rem[k - dd + i] = (rem[k - dd + i] + p - sub) % p;
    }
  }
  return {Poly(std::move(quot), p), Poly(std::move(rem), p)};
}

namespace {

Fp phi_root(Fp a, Word i) {
  const Word p = a.modulus();
  return Fp(i, p) * (Fp(i + 1, p) + a);
}

void require_odd_prime(Word p) {
  require_prime(p);
  if (p == 2) throw std::invalid_argument("psi polynomials are defined for odd p only");
}

}  // namespace

Poly build_phi(Fp a, Word n) {
  const Word p = a.modulus();
  if (n > p) throw std::out_of_range("build_phi: n must not exceed p");
  Poly acc = Poly::constant(Fp(1, p));
  for (Word i = 0; i < n; ++i) acc = acc * Poly::linear_factor(phi_root(a, i));
  return acc;
}

Poly build_psi(Word p) {
  require_odd_prime(p);
  Poly acc = Poly::constant(Fp(1, p));
  for (Word i = 0; i < p; ++i) acc = acc * Poly::linear_factor(Fp(i, p) * Fp(i, p));
  return acc;
}

Poly build_psi_j(Word j, Word p) {
  require_odd_prime(p);
  const Word half = (p - 1) / 2;
  if (j > half) throw std::out_of_range("build_psi_j: j must lie in 0..(p-1)/2");
  Poly acc = Poly::constant(Fp(1, p));
  if (j != 0) {
    const Fp jsq = Fp(j, p) * Fp(j, p);
    acc = Poly({0, 2}, p) * Poly({jsq.value(), 1}, p);
  }
  for (Word i = 1; i <= half; ++i) {
    if (i == j) continue;
    Poly f = Poly::linear_factor(Fp(i, p) * Fp(i, p));
    acc = acc * f * f;
  }
  return acc;
}

Fp half_shift_square(Fp a) {
  const Word p = a.modulus();
  if (p == 2) throw std::invalid_argument("(a+1)/2 is undefined in F_2");
  Fp h = (a + Fp(1, p)) * Fp(2, p).inverse();
  return h * h;
}

std::vector<Word> expand_in_phi_basis(const Poly& f, Fp a) {
  const Word p = a.modulus();
  if (f.modulus() != p) throw std::invalid_argument("polynomial over a different field");
  if (f.degree() > static_cast<int>(p) - 1)
    throw std::invalid_argument("expand_in_phi_basis: degree must be at most p-1");
  std::vector<Word> c(p, 0);
  Poly rem = f;
  for (int m = f.degree(); m >= 0; --m) {
    Word top = rem.coeff(static_cast<std::size_t>(m));
    if (top == 0) continue;
    c[m] = top;
    rem = rem - build_phi(a, static_cast<Word>(m)).scaled(Fp(top, p));
  }
  return c;
}

Word n_by_divisibility(Fp a, Word j, Word p) {
  require_odd_prime(p);
  Poly f = build_psi_j(j, p).shift_argument(half_shift_square(a));
  Word n = 0;
  while (n < p) {
    auto [q, r] = divrem(f, Poly::linear_factor(phi_root(a, n)));
    if (!r.is_zero()) break;
    f = std::move(q);
    ++n;
  }
  return n;
}

}  // namespace sl2idem
