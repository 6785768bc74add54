#include "sl2idem/modp.hpp"

#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>

namespace sl2idem {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

void require_prime(std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
}

std::uint64_t checked_pow(std::uint64_t base, unsigned exponent) {
  std::uint64_t result = 1;
  for (unsigned i = 0; i < exponent; ++i) {
    if (base != 0 && result > std::numeric_limits<std::uint64_t>::max() / base)
      throw std::overflow_error("integer power overflows 64 bits");
    result *= base;
  }
  return result;
}

Word mod_reduce(std::int64_t v, Word p) {
  std::int64_t r = v % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  return static_cast<Word>(r);
}

Word mul_mod(Word a, Word b, Word p) {
  return static_cast<Word>(static_cast<std::uint64_t>(a) * b % p);
}

Word pow_mod(Word a, std::uint64_t e, Word p) {
  std::uint64_t base = a % p;
  std::uint64_t acc = 1 % p;
  while (e) {
    if (e & 1) acc = acc * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<Word>(acc);
}

Word inv_mod(Word a, Word p) {
  if (a % p == 0) throw std::domain_error("inverse of zero in F_p");
  // p prime: Fermat.
  return pow_mod(a, p - 2, p);
}

Fp::Fp(std::int64_t value, Word modulus) : value_(0), modulus_(modulus) {
  if (modulus < 2) throw std::invalid_argument("modulus must be at least 2");
  value_ = mod_reduce(value, modulus);
}

void Fp::check_same_field(const Fp& o) const {
  if (modulus_ != o.modulus_)
    throw std::invalid_argument("F_p elements with different moduli");
}

Fp Fp::operator+(const Fp& o) const {
  check_same_field(o);
  return Fp(static_cast<std::int64_t>(value_) + o.value_, modulus_);
}

Fp Fp::operator-(const Fp& o) const {
  check_same_field(o);
  return Fp(static_cast<std::int64_t>(value_) - o.value_, modulus_);
}

Fp Fp::operator*(const Fp& o) const {
  check_same_field(o);
  return Fp(mul_mod(value_, o.value_, modulus_), modulus_);
}

Fp Fp::operator-() const { return Fp(-static_cast<std::int64_t>(value_), modulus_); }

Fp Fp::pow(std::uint64_t e) const { return Fp(pow_mod(value_, e, modulus_), modulus_); }

Fp Fp::inverse() const { return Fp(inv_mod(value_, modulus_), modulus_); }

PDigits digits_base_p(std::uint64_t n, Word p, std::size_t len) {
  PDigits digits(len, 0);
  for (std::size_t i = 0; i < len; ++i) {
    digits[i] = static_cast<Word>(n % p);
    n /= p;
  }
  if (n != 0)
    throw std::out_of_range("digits_base_p: n does not fit in " + std::to_string(len) +
                            " base-" + std::to_string(p) + " digits");
  return digits;
}

Fp factorial_mod_p(Word m, Word p) {
  if (m >= p) throw std::out_of_range("factorial_mod_p: m must be below p");
  std::uint64_t acc = 1 % p;
  for (Word i = 2; i <= m; ++i) acc = acc * i % p;
  return Fp(static_cast<std::int64_t>(acc), p);
}

namespace {

// Pascal triangle mod p restricted to single digits.
class DigitBinomials {
 public:
  explicit DigitBinomials(Word p) : p_(p), table_(static_cast<std::size_t>(p) * p, 0) {
    for (Word n = 0; n < p; ++n) {
      at(n, 0) = 1 % p;
      for (Word k = 1; k <= n; ++k) {
        Word above = at(n - 1, k - 1);
        Word left = k < n ? at(n - 1, k) : 0;
        at(n, k) = (above + left) % p;
      }
    }
  }
  Word operator()(Word n, Word k) const { return table_[static_cast<std::size_t>(n) * p_ + k]; }

 private:
  Word& at(Word n, Word k) { return table_[static_cast<std::size_t>(n) * p_ + k]; }
  Word p_;
  std::vector<Word> table_;
};

constexpr Word kTableLimit = 4096;

const DigitBinomials& digit_binomials(Word p) {
  static std::mutex mutex;
  static std::map<Word, std::unique_ptr<DigitBinomials>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[p];
  if (!slot) slot = std::make_unique<DigitBinomials>(p);
  return *slot;
}

Word small_binom_direct(Word n, Word k, Word p) {
  std::uint64_t num = 1, den = 1;
  for (Word i = 0; i < k; ++i) {
    num = num * ((n - i) % p) % p;
    den = den * ((i + 1) % p) % p;
  }
  return mul_mod(static_cast<Word>(num), inv_mod(static_cast<Word>(den), p), p);
}

Word lucas(std::uint64_t n, std::uint64_t k, Word p) {
  if (k > n) return 0;
  const DigitBinomials* table = p <= kTableLimit ? &digit_binomials(p) : nullptr;
  std::uint64_t acc = 1 % p;
  while (k > 0) {
    Word nd = static_cast<Word>(n % p);
    Word kd = static_cast<Word>(k % p);
    if (kd > nd) return 0;
    Word b = table ? (*table)(nd, kd) : small_binom_direct(nd, kd, p);
    acc = acc * b % p;
    n /= p;
    k /= p;
  }
  return static_cast<Word>(acc);
}

}  // namespace

Word binom_mod_p_raw(std::int64_t upper, std::int64_t lower, Word p) {
  if (lower < 0) return 0;
  if (upper >= 0) return lucas(static_cast<std::uint64_t>(upper), static_cast<std::uint64_t>(lower), p);
  // C(z, k) = (-1)^k C(k - z - 1, k)
  std::uint64_t reflected = static_cast<std::uint64_t>(lower) + static_cast<std::uint64_t>(-(upper + 1));
  Word v = lucas(reflected, static_cast<std::uint64_t>(lower), p);
  if ((lower & 1) && v != 0) v = p - v;
  return v;
}

Fp binom_mod_p(std::int64_t upper, std::int64_t lower, Word p) {
  return Fp(binom_mod_p_raw(upper, lower, p), p);
}

}  // namespace sl2idem
