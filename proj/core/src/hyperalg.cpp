#include "sl2idem/hyperalg.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <string>
#include <tuple>

namespace sl2idem {

namespace detail {

struct CtxTables {
  Word p;
  Word exponent_bound;
  Word weight_count;
  // pascal[n * L + x] = C(x, n) mod p, so a fixed n reads contiguously.
  std::vector<Word> pascal;
  // exponent[top * P + bottom] = C(top, bottom) mod p, top < 2P.
  std::vector<Word> exponent;
};

namespace {

std::shared_ptr<const CtxTables> build_tables(Word p, Word P, Word L) {
  auto t = std::make_shared<CtxTables>();
  t->p = p;
  t->exponent_bound = P;
  t->weight_count = L;
  t->pascal.assign(static_cast<std::size_t>(L) * L, 0);
  for (Word n = 0; n < L; ++n)
    for (Word x = 0; x < L; ++x)
      t->pascal[static_cast<std::size_t>(n) * L + x] = binom_mod_p_raw(x, n, p);
  t->exponent.assign(static_cast<std::size_t>(2) * P * P, 0);
  for (Word top = 0; top < 2 * P; ++top)
    for (Word bottom = 0; bottom < P; ++bottom)
      t->exponent[static_cast<std::size_t>(top) * P + bottom] = binom_mod_p_raw(top, bottom, p);
  return t;
}

}  // namespace
}  // namespace detail

AlgebraCtx AlgebraCtx::make(Word p, Word r, Word rprime) {
  require_prime(p);
  if (r == 0) throw std::invalid_argument("r must be at least 1");
  if (rprime < r) throw std::invalid_argument("rprime must be at least r");
  const std::uint64_t P = checked_pow(p, r);
  const std::uint64_t L = checked_pow(p, rprime);
  if (L > kMaxWeightCount || P * P > kMaxDimension / L)
    throw std::invalid_argument("context (p=" + std::to_string(p) + ", r=" + std::to_string(r) +
                                ", rprime=" + std::to_string(rprime) + ") is too large");

  static std::mutex mutex;
  static std::map<std::tuple<Word, Word, Word>, std::shared_ptr<const detail::CtxTables>> cache;

  AlgebraCtx ctx;
  ctx.p_ = p;
  ctx.r_ = r;
  ctx.rprime_ = rprime;
  ctx.exponent_bound_ = static_cast<Word>(P);
  ctx.weight_count_ = static_cast<Word>(L);
  std::lock_guard lock(mutex);
  auto& slot = cache[{p, r, rprime}];
  if (!slot) slot = detail::build_tables(p, ctx.exponent_bound_, ctx.weight_count_);
  ctx.tables_ = slot;
  return ctx;
}

std::uint64_t AlgebraCtx::dimension() const {
  return static_cast<std::uint64_t>(exponent_bound_) * exponent_bound_ * weight_count_;
}

Word AlgebraCtx::pascal(Word x, Word n) const {
  return tables_->pascal[static_cast<std::size_t>(n) * weight_count_ + x];
}

Word AlgebraCtx::exponent_binom(Word top, Word bottom) const {
  return tables_->exponent[static_cast<std::size_t>(top) * exponent_bound_ + bottom];
}

bool WeightFn::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](Word v) { return v == 0; });
}

WeightFn shift_weightfn(const WeightFn& f, std::int64_t s) {
  const auto L = static_cast<std::int64_t>(f.size());
  if (L == 0) return f;
  std::int64_t off = s % L;
  if (off < 0) off += L;
  std::vector<Word> out(f.size());
  for (std::int64_t lam = 0; lam < L; ++lam) out[lam] = f[(lam + off) % L];
  return WeightFn(std::move(out));
}

WeightFn pointwise(const WeightFn& f, const WeightFn& g, Word p) {
  if (f.size() != g.size()) throw std::invalid_argument("weight functions of different length");
  std::vector<Word> out(f.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = mul_mod(f[i], g[i], p);
  return WeightFn(std::move(out));
}

std::vector<Word> weightfn_to_coeffs(const WeightFn& f, const AlgebraCtx& ctx) {
  const Word L = ctx.weight_count();
  const Word p = ctx.p();
  if (f.size() != L) throw std::invalid_argument("weight function length does not match context");
  // values[x] = sum_{n <= x} c_n C(x, n), with C(x, x) = 1.
  std::vector<Word> c(L, 0);
  for (Word x = 0; x < L; ++x) {
    std::uint64_t acc = f[x];
    for (Word n = 0; n < x; ++n) {
      Word b = ctx.pascal(x, n);
      if (b != 0 && c[n] != 0) acc += p - mul_mod(c[n], b, p);
    }
    c[x] = static_cast<Word>(acc % p);
  }
  return c;
}

WeightFn coeffs_to_weightfn(std::span<const Word> coeffs, const AlgebraCtx& ctx) {
  const Word L = ctx.weight_count();
  const Word p = ctx.p();
  if (coeffs.size() != L) throw std::invalid_argument("coefficient vector length does not match context");
  std::vector<Word> values(L, 0);
  for (Word x = 0; x < L; ++x) {
    std::uint64_t acc = 0;
    for (Word n = 0; n <= x; ++n) {
      if (coeffs[n] == 0) continue;
      acc += mul_mod(coeffs[n] % p, ctx.pascal(x, n), p);
    }
    values[x] = static_cast<Word>(acc % p);
  }
  return WeightFn(std::move(values));
}

HyperElem::HyperElem(AlgebraCtx ctx, TermMap terms) : ctx_(std::move(ctx)) {
  const Word P = ctx_.exponent_bound();
  const Word L = ctx_.weight_count();
  for (auto& [key, f] : terms) {
    if (key.yexp >= P || key.xexp >= P)
      throw std::out_of_range("divided-power exponent outside [0, p^r)");
    if (f.size() != L) throw std::invalid_argument("weight function length does not match context");
    for (Word v : f.values())
      if (v >= ctx_.p()) throw std::invalid_argument("weight function value is not reduced mod p");
    if (!f.is_zero()) terms_.emplace(key, std::move(f));
  }
}

namespace {

void require_same_ctx(const HyperElem& u, const HyperElem& v) {
  if (!(u.ctx() == v.ctx())) throw std::invalid_argument("elements belong to different contexts");
}

HyperElem combine(const HyperElem& u, const HyperElem& v, bool subtract) {
  require_same_ctx(u, v);
  const Word p = u.ctx().p();
  HyperElem::TermMap out = u.terms();
  for (const auto& [key, g] : v.terms()) {
    auto it = out.find(key);
    if (it == out.end()) {
      if (!subtract) {
        out.emplace(key, g);
      } else {
        std::vector<Word> neg(g.values().begin(), g.values().end());
        for (auto& x : neg) x = x == 0 ? 0 : p - x;
        out.emplace(key, WeightFn(std::move(neg)));
      }
      continue;
    }
    std::vector<Word> sum(it->second.values().begin(), it->second.values().end());
    for (std::size_t i = 0; i < sum.size(); ++i)
      sum[i] = subtract ? (sum[i] + p - g[i]) % p : (sum[i] + g[i]) % p;
    it->second = WeightFn(std::move(sum));
  }
  return HyperElem(u.ctx(), std::move(out));
}

}  // namespace

HyperElem HyperElem::operator+(const HyperElem& o) const { return combine(*this, o, false); }
HyperElem HyperElem::operator-(const HyperElem& o) const { return combine(*this, o, true); }
HyperElem HyperElem::operator*(const HyperElem& o) const { return multiply(*this, o); }

HyperElem HyperElem::scaled(Word c) const {
  const Word p = ctx_.p();
  c %= p;
  TermMap out;
  if (c == 0) return HyperElem(ctx_);
  for (const auto& [key, f] : terms_) {
    std::vector<Word> vals(f.values().begin(), f.values().end());
    for (auto& x : vals) x = mul_mod(x, c, p);
    out.emplace(key, WeightFn(std::move(vals)));
  }
  return HyperElem(ctx_, std::move(out));
}

HyperElem zero(const AlgebraCtx& ctx) { return HyperElem(ctx); }

HyperElem one(const AlgebraCtx& ctx) {
  return from_weightfn(WeightFn::constant(1, ctx.weight_count()), ctx);
}

HyperElem from_weightfn(WeightFn f, const AlgebraCtx& ctx) {
  HyperElem::TermMap t;
  t.emplace(TermKey{0, 0}, std::move(f));
  return HyperElem(ctx, std::move(t));
}

HyperElem basis_element(Word m, Word n, Word mprime, const AlgebraCtx& ctx) {
  if (n >= ctx.weight_count()) throw std::out_of_range("C(H, n) index outside [0, p^r')");
  std::vector<Word> vals(ctx.weight_count());
  for (Word x = 0; x < ctx.weight_count(); ++x) vals[x] = ctx.pascal(x, n);
  HyperElem::TermMap t;
  t.emplace(TermKey{m, mprime}, WeightFn(std::move(vals)));
  return HyperElem(ctx, std::move(t));
}

HyperElem gen_x(Word n, const AlgebraCtx& ctx) { return basis_element(0, 0, n, ctx); }
HyperElem gen_y(Word n, const AlgebraCtx& ctx) { return basis_element(n, 0, 0, ctx); }
HyperElem gen_hbinom(Word n, const AlgebraCtx& ctx) { return basis_element(0, n, 0, ctx); }

HyperElem multiply(const HyperElem& u, const HyperElem& v) {
  require_same_ctx(u, v);
  const AlgebraCtx& ctx = u.ctx();
  const Word p = ctx.p();
  const Word P = ctx.exponent_bound();
  const Word L = ctx.weight_count();

  // Sparse accumulator over (M, M') slots.
  std::map<TermKey, std::vector<std::uint64_t>> acc;

  for (const auto& [k1, f1] : u.terms()) {
    const Word m1 = k1.yexp;
    const Word a = k1.xexp;
    for (const auto& [k2, f2] : v.terms()) {
      const Word b = k2.yexp;
      const Word m2p = k2.xexp;
      // Y^(m1) f1 [X^(a) Y^(b)] f2 X^(m2p), and
      // X^(a) Y^(b) = sum_i Y^(b-i) C(H - a - b + 2i, i) X^(a-i).
      const Word imax = std::min(a, b);
      for (Word i = 0; i <= imax; ++i) {
        const Word M = m1 + b - i;
        const Word Mp = a - i + m2p;
        const Word kappa = mul_mod(ctx.exponent_binom(M, m1), ctx.exponent_binom(Mp, m2p), p);
        if (M >= P || Mp >= P) {
          if (kappa != 0) throw std::logic_error("carry out of p^r with nonzero coefficient");
          continue;
        }
        if (kappa == 0) continue;
        // f1 Y^(b-i) = Y^(b-i) shift(f1, -2(b-i)); X^(a-i) f2 = shift(f2, -2(a-i)) X^(a-i).
        const auto wrap = [L](std::int64_t s) {
          std::int64_t r = s % static_cast<std::int64_t>(L);
          return static_cast<Word>(r < 0 ? r + L : r);
        };
        Word j1 = wrap(-2 * static_cast<std::int64_t>(b - i));
        Word j2 = wrap(-2 * static_cast<std::int64_t>(a - i));
        Word jc = wrap(2 * static_cast<std::int64_t>(i) - a - b);
        auto& slot = acc[TermKey{M, Mp}];
        if (slot.empty()) slot.assign(L, 0);
        for (Word lam = 0; lam < L; ++lam) {
          const Word x1 = f1[j1];
          const Word x2 = f2[j2];
          const Word g = ctx.pascal(jc, i);
          if (x1 != 0 && x2 != 0 && g != 0) {
            std::uint64_t t = static_cast<std::uint64_t>(x1) * x2 % p;
            t = t * g % p;
            slot[lam] += t * kappa % p;
          }
          if (++j1 == L) j1 = 0;
          if (++j2 == L) j2 = 0;
          if (++jc == L) jc = 0;
        }
      }
    }
  }

  HyperElem::TermMap out;
  for (auto& [key, sums] : acc) {
    std::vector<Word> vals(L);
    bool nonzero = false;
    for (Word lam = 0; lam < L; ++lam) {
      vals[lam] = static_cast<Word>(sums[lam] % p);
      nonzero |= vals[lam] != 0;
    }
    if (nonzero) out.emplace(key, WeightFn(std::move(vals)));
  }
  return HyperElem(ctx, std::move(out));
}

std::map<std::int64_t, HyperElem> degree_decompose(const HyperElem& u) {
  std::map<std::int64_t, HyperElem::TermMap> parts;
  for (const auto& [key, f] : u.terms())
    parts[static_cast<std::int64_t>(key.xexp) - static_cast<std::int64_t>(key.yexp)].emplace(key, f);
  std::map<std::int64_t, HyperElem> out;
  for (auto& [d, t] : parts) out.emplace(d, HyperElem(u.ctx(), std::move(t)));
  return out;
}

namespace {

AlgebraCtx frobenius_target(const AlgebraCtx& src) {
  if (src.r() < 2) throw std::invalid_argument("Frobenius needs r >= 2 (target context would be empty)");
  return AlgebraCtx::make(src.p(), src.r() - 1, src.rprime() - 1);
}

}  // namespace

HyperElem fr(const HyperElem& u) {
  const AlgebraCtx& src = u.ctx();
  const AlgebraCtx dst = frobenius_target(src);
  const Word p = src.p();
  HyperElem::TermMap out;
  for (const auto& [key, f] : u.terms()) {
    if (key.yexp % p != 0 || key.xexp % p != 0) continue;
    // C(p mu, np) = C(mu, n) and C(p mu, k) = 0 for p not dividing k.
    std::vector<Word> vals(dst.weight_count());
    for (Word mu = 0; mu < dst.weight_count(); ++mu) vals[mu] = f[static_cast<std::size_t>(mu) * p];
    WeightFn g(std::move(vals));
    if (!g.is_zero()) out.emplace(TermKey{key.yexp / p, key.xexp / p}, std::move(g));
  }
  return HyperElem(dst, std::move(out));
}

HyperElem fr_via_coeffs(const HyperElem& u) {
  const AlgebraCtx& src = u.ctx();
  const AlgebraCtx dst = frobenius_target(src);
  const Word p = src.p();
  HyperElem::TermMap out;
  for (const auto& [key, f] : u.terms()) {
    if (key.yexp % p != 0 || key.xexp % p != 0) continue;
    const auto c = weightfn_to_coeffs(f, src);
    std::vector<Word> reduced(dst.weight_count(), 0);
    for (Word n = 0; n < dst.weight_count(); ++n) reduced[n] = c[static_cast<std::size_t>(n) * p];
    WeightFn g = coeffs_to_weightfn(reduced, dst);
    if (!g.is_zero()) out.emplace(TermKey{key.yexp / p, key.xexp / p}, std::move(g));
  }
  return HyperElem(dst, std::move(out));
}

HyperElem fr_prime(const HyperElem& u) {
  const AlgebraCtx& src = u.ctx();
  const Word p = src.p();
  const AlgebraCtx dst = AlgebraCtx::make(p, src.r() + 1, src.rprime() + 1);
  HyperElem::TermMap out;
  for (const auto& [key, f] : u.terms()) {
    std::vector<Word> vals(dst.weight_count());
    for (Word lam = 0; lam < dst.weight_count(); ++lam) vals[lam] = f[lam / p];
    out.emplace(TermKey{key.yexp * p, key.xexp * p}, WeightFn(std::move(vals)));
  }
  return HyperElem(dst, std::move(out));
}

HyperElem fr_prime_via_coeffs(const HyperElem& u) {
  const AlgebraCtx& src = u.ctx();
  const Word p = src.p();
  const AlgebraCtx dst = AlgebraCtx::make(p, src.r() + 1, src.rprime() + 1);
  HyperElem::TermMap out;
  for (const auto& [key, f] : u.terms()) {
    const auto c = weightfn_to_coeffs(f, src);
    std::vector<Word> spread(dst.weight_count(), 0);
    for (Word n = 0; n < src.weight_count(); ++n) spread[static_cast<std::size_t>(n) * p] = c[n];
    out.emplace(TermKey{key.yexp * p, key.xexp * p}, coeffs_to_weightfn(spread, dst));
  }
  return HyperElem(dst, std::move(out));
}

HyperElem embed(const HyperElem& u, const AlgebraCtx& target) {
  const AlgebraCtx& src = u.ctx();
  if (target.p() != src.p()) throw std::invalid_argument("embed: characteristic mismatch");
  if (target.r() < src.r() || target.rprime() < src.rprime())
    throw std::invalid_argument("embed: target context is smaller than the source");
  const Word Ls = src.weight_count();
  HyperElem::TermMap out;
  for (const auto& [key, f] : u.terms()) {
    std::vector<Word> vals(target.weight_count());
    for (Word lam = 0; lam < target.weight_count(); ++lam) vals[lam] = f[lam % Ls];
    out.emplace(key, WeightFn(std::move(vals)));
  }
  return HyperElem(target, std::move(out));
}

}  // namespace sl2idem
