#ifndef SL2IDEM_MODP_HPP
#define SL2IDEM_MODP_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

namespace sl2idem {

using Word = std::uint32_t;

bool is_prime(std::uint64_t n);

// Throws std::invalid_argument("p must be prime") unless p is prime.
void require_prime(std::uint64_t p);

// Integer power with overflow check; throws std::overflow_error.
std::uint64_t checked_pow(std::uint64_t base, unsigned exponent);

/// An element of the prime field F_p. The modulus travels with the value so
/// that mixing elements of different fields is caught at runtime.
class Fp {
 public:
  Fp(std::int64_t value, Word modulus);

  Word value() const { return value_; }
  Word modulus() const { return modulus_; }
  bool is_zero() const { return value_ == 0; }

  Fp operator+(const Fp& o) const;
  Fp operator-(const Fp& o) const;
  Fp operator*(const Fp& o) const;
  Fp operator-() const;
  Fp& operator+=(const Fp& o) { return *this = *this + o; }
  Fp& operator-=(const Fp& o) { return *this = *this - o; }
  Fp& operator*=(const Fp& o) { return *this = *this * o; }

  Fp pow(std::uint64_t e) const;
  // Throws std::domain_error on zero.
  Fp inverse() const;

  friend bool operator==(const Fp&, const Fp&) = default;

 private:
  void check_same_field(const Fp& o) const;

  Word value_;
  Word modulus_;
};

// Raw helpers on canonical residues in [0, p).
Word mod_reduce(std::int64_t v, Word p);
Word mul_mod(Word a, Word b, Word p);
Word pow_mod(Word a, std::uint64_t e, Word p);
Word inv_mod(Word a, Word p);

/// Base-p digits, least significant first.
using PDigits = std::vector<Word>;

// Pads to len; throws std::out_of_range if n >= p^len.
PDigits digits_base_p(std::uint64_t n, Word p, std::size_t len);

// m! mod p for 0 <= m <= p-1; throws std::out_of_range otherwise.
Fp factorial_mod_p(Word m, Word p);

/// C(upper, lower) mod p, with C(z, k) = z(z-1)...(z-k+1)/k! read as an
/// integer-valued polynomial in z. Negative upper arguments go through
/// C(z, k) = (-1)^k C(k-z-1, k); lower < 0 gives 0. The non-negative case
/// is evaluated digitwise by Lucas' theorem.
Fp binom_mod_p(std::int64_t upper, std::int64_t lower, Word p);

// Same value as a raw residue.
Word binom_mod_p_raw(std::int64_t upper, std::int64_t lower, Word p);

}  // namespace sl2idem

#endif  // SL2IDEM_MODP_HPP
