#include "sl2idem/idem.hpp"

#include <stdexcept>
#include <string>

#include "sl2idem/fpoly.hpp"

namespace sl2idem {

namespace {

std::string pair_text(Word a, Word two_j) { return "(" + std::to_string(a) + ":" + std::to_string(two_j) + ")"; }

Word word_pow(Word p, Word e) { return static_cast<Word>(checked_pow(p, e)); }

Word fact(Word m, Word p) { return factorial_mod_p(m, p).value(); }

// Divided power scaled to an ordinary power: Y^m = m! Y^(m).
HyperElem y_power(Word m, const AlgebraCtx& ctx) { return gen_y(m, ctx).scaled(fact(m, ctx.p())); }
HyperElem x_power(Word m, const AlgebraCtx& ctx) { return gen_x(m, ctx).scaled(fact(m, ctx.p())); }

Word leading_index(const std::vector<Word>& c) {
  for (std::size_t m = 0; m < c.size(); ++m)
    if (c[m] != 0) return static_cast<Word>(m);
  throw std::invalid_argument("expansion is identically zero");
}

}  // namespace

char case_letter(CaseTag tag) {
  switch (tag) {
    case CaseTag::A: return 'A';
    case CaseTag::B: return 'B';
    case CaseTag::C: return 'C';
    case CaseTag::D: return 'D';
  }
  return '?';
}

CaseTag classify_case(Word a, Word two_j, Word p) {
  require_prime(p);
  if (p == 2) {
    if (a == 0 && two_j == 1) return CaseTag::B;
    if (a == 1 && two_j == 0) return CaseTag::C;
    if (a == 1 && two_j == 2) return CaseTag::D;
    throw std::invalid_argument("invalid pair " + pair_text(a, two_j) + " for p=2");
  }
  if (a >= p || two_j % 2 != 0 || two_j / 2 > (p - 1) / 2)
    throw std::invalid_argument("invalid pair " + pair_text(a, two_j) + " for p=" + std::to_string(p));
  const Word j = two_j / 2;
  if (a % 2 == 0) return j >= (p - a + 1) / 2 ? CaseTag::A : CaseTag::B;
  return j <= (a - 1) / 2 ? CaseTag::C : CaseTag::D;
}

PairAJ make_pair_aj(Word a, Word two_j, Word p) { return PairAJ{a, two_j, classify_case(a, two_j, p)}; }

std::vector<PairAJ> enumerate_pairs(Word p) {
  require_prime(p);
  if (p == 2) return {make_pair_aj(0, 1, 2), make_pair_aj(1, 0, 2), make_pair_aj(1, 2, 2)};
  std::vector<PairAJ> out;
  for (Word a = 0; a < p; ++a)
    for (Word j = 0; j <= (p - 1) / 2; ++j) out.push_back(make_pair_aj(a, 2 * j, p));
  return out;
}

Word n_closed(const PairAJ& pair, Word p) {
  if (p == 2) return pair.tag == CaseTag::C ? 1 : 0;
  const Word a = pair.a, j = pair.two_j / 2;
  switch (pair.tag) {
    case CaseTag::A: return (p - a - 1) / 2 + j;
    case CaseTag::B: return (p - a - 1) / 2 - j;
    case CaseTag::C: return (2 * p - a - 1) / 2 - j;
    case CaseTag::D: return j - (a + 1) / 2;
  }
  return 0;
}

Word n_tilde_closed(const PairAJ& pair, Word p) {
  if (p == 2) return pair.tag == CaseTag::D ? 1 : 0;
  const std::int64_t a = pair.a, j = pair.two_j / 2, q = p;
  switch (pair.tag) {
    case CaseTag::A: return static_cast<Word>((-q + a - 1) / 2 + j);
    case CaseTag::B: return static_cast<Word>((q + a - 1) / 2 - j);
    case CaseTag::C: return static_cast<Word>((a - 1) / 2 - j);
    case CaseTag::D: return static_cast<Word>(j + (a - 1) / 2);
  }
  return 0;
}

Word s_of(const PairAJ& pair, Word p) {
  if (pair.tag != CaseTag::A && pair.tag != CaseTag::C)
    throw std::logic_error("s(a,j) is defined for cases A and C only");
  if (p == 2) return 1;
  return pair.a % 2 == 0 ? (p - pair.a + 1) / 2 : (p - pair.a) / 2;
}

std::int64_t b_of(const PairAJ& pair, Word p) {
  const bool ac = pair.tag == CaseTag::A || pair.tag == CaseTag::C;
  return ac ? static_cast<std::int64_t>(pair.a) - p : static_cast<std::int64_t>(pair.a);
}

std::uint64_t label_count(const AlgebraCtx& ctx) {
  const std::uint64_t pairs = enumerate_pairs(ctx.p()).size();
  return checked_pow(pairs, ctx.r()) * checked_pow(ctx.p(), ctx.rprime() - ctx.r());
}

std::vector<TupleLabel> enumerate_labels(const AlgebraCtx& ctx) {
  const auto pairs = enumerate_pairs(ctx.p());
  const Word r = ctx.r();
  const Word tail = word_pow(ctx.p(), ctx.rprime() - ctx.r());
  std::vector<TupleLabel> out;
  out.reserve(label_count(ctx));
  std::vector<std::size_t> idx(r, 0);
  while (true) {
    TupleLabel base;
    for (auto i : idx) base.pairs.push_back(pairs[i]);
    if (ctx.rprime() == ctx.r()) {
      out.push_back(base);
    } else {
      for (Word ap = 0; ap < tail; ++ap) {
        base.a_prime = ap;
        out.push_back(base);
      }
    }
    std::size_t k = r;
    while (k > 0 && ++idx[k - 1] == pairs.size()) idx[--k] = 0;
    if (k == 0) break;
  }
  return out;
}

HyperElem mu_r(std::int64_t a, Word s, const AlgebraCtx& ctx) {
  if (s < 1 || s > ctx.rprime()) throw std::out_of_range("mu_r: s must lie in 1..r'");
  const std::int64_t period = word_pow(ctx.p(), s);
  const Word shift = static_cast<Word>(((a % period) + period) % period);
  std::vector<Word> v(ctx.weight_count(), 0);
  for (Word lam = 0; lam < ctx.weight_count(); ++lam) v[lam] = (lam % period == shift) ? 1 : 0;
  return from_weightfn(WeightFn(std::move(v)), ctx);
}

namespace {

// psi_j(u) mu_a by Horner's rule, where u = mu_a M + c with M = YX or XY.
HyperElem psi_form(const PairAJ& pair, Word p, bool xy) {
  const auto ctx1 = AlgebraCtx::make(p, 1, 1);
  const HyperElem mu = mu_r(pair.a, 1, ctx1);
  const HyperElem mono = xy ? gen_x(1, ctx1) * gen_y(1, ctx1) : gen_y(1, ctx1) * gen_x(1, ctx1);
  const Fp a(pair.a, p);
  const Fp c = xy ? half_shift_square(-a) : half_shift_square(a);
  const HyperElem u = mu * mono + one(ctx1).scaled(c.value());
  const Poly psi = build_psi_j(pair.two_j / 2, p);
  HyperElem acc = zero(ctx1);
  for (int i = psi.degree(); i >= 0; --i)
    acc = acc * u + one(ctx1).scaled(psi.coeff(static_cast<std::size_t>(i)));
  return acc * mu;
}

HyperElem e1_in_u1(const PairAJ& pair, Word p) {
  if (p != 2) return psi_form(pair, p, false);
  const auto ctx1 = AlgebraCtx::make(2, 1, 1);
  const HyperElem mu = mu_r(pair.a, 1, ctx1);
  switch (pair.tag) {
    case CaseTag::B: return mu;
    case CaseTag::C: return mu * gen_y(1, ctx1) * gen_x(1, ctx1);
    default: return mu * gen_x(1, ctx1) * gen_y(1, ctx1);
  }
}

HyperElem into(const HyperElem& u, const AlgebraCtx& ctx) { return u.ctx() == ctx ? u : embed(u, ctx); }

}  // namespace

HyperElem build_e1(const PairAJ& pair, const AlgebraCtx& ctx) {
  classify_case(pair.a, pair.two_j, ctx.p());
  return into(e1_in_u1(pair, ctx.p()), ctx);
}

HyperElem build_e1_xy_form(const PairAJ& pair, const AlgebraCtx& ctx) {
  if (ctx.p() == 2) throw std::invalid_argument("build_e1_xy_form: odd p only");
  classify_case(pair.a, pair.two_j, ctx.p());
  return into(psi_form(pair, ctx.p(), true), ctx);
}

Expansion extract_yx_expansion(const HyperElem& e, const PairAJ& pair) {
  const auto& ctx = e.ctx();
  const Word p = ctx.p(), L = ctx.weight_count();
  Expansion out;
  out.order = Expansion::Order::YX;
  out.a = pair.a;
  out.c.assign(p, 0);
  for (const auto& [key, f] : e.terms()) {
    if (key.yexp != key.xexp || key.yexp >= p)
      throw std::invalid_argument("extract_yx_expansion: term off the diagonal or above degree p-1");
    const Word m = key.yexp;
    const Word residue = static_cast<Word>((pair.a + 2 * m) % p);
    const Word val = f[(pair.a + 2 * m) % L];
    for (Word lam = 0; lam < L; ++lam) {
      const Word expect = (lam % p == residue) ? val : 0;
      if (f[lam] != expect)
        throw std::invalid_argument("extract_yx_expansion: weight function is not a multiple of mu_{a+2m}");
    }
    const Word f2 = mul_mod(fact(m, p), fact(m, p), p);
    out.c[m] = mul_mod(val, inv_mod(f2, p), p);
  }
  out.leading = leading_index(out.c);
  if (out.leading != n_closed(pair, p))
    throw std::logic_error("extract_yx_expansion: leading index disagrees with the closed form");
  return out;
}

Expansion extract_xy_expansion(const HyperElem& e, const PairAJ& pair) {
  const auto& ctx = e.ctx();
  const Word p = ctx.p(), L = ctx.weight_count();
  Expansion out;
  out.order = Expansion::Order::XY;
  out.a = pair.a;
  out.c.assign(p, 0);
  const HyperElem mu = mu_r(pair.a, 1, ctx);
  HyperElem rem = e;
  for (const auto& [key, f] : e.terms())
    if (key.yexp != key.xexp || key.yexp >= p)
      throw std::invalid_argument("extract_xy_expansion: term off the diagonal or above degree p-1");
  for (Word m = p; m-- > 0;) {
    const auto it = rem.terms().find(TermKey{m, m});
    if (it == rem.terms().end()) continue;
    const Word val = it->second[(pair.a + 2 * m) % L];
    const Word f2 = mul_mod(fact(m, p), fact(m, p), p);
    out.c[m] = mul_mod(val, inv_mod(f2, p), p);
    const HyperElem block = mu * x_power(m, ctx) * y_power(m, ctx);
    rem = rem - block.scaled(out.c[m]);
    if (rem.terms().count(TermKey{m, m}))
      throw std::invalid_argument("extract_xy_expansion: element is not of the form mu_a sum c_m X^m Y^m");
  }
  if (!rem.is_zero())
    throw std::invalid_argument("extract_xy_expansion: element is not of the form mu_a sum c_m X^m Y^m");
  out.leading = leading_index(out.c);
  if (out.leading != n_tilde_closed(pair, p))
    throw std::logic_error("extract_xy_expansion: leading index disagrees with the closed form");
  return out;
}

Expansion phi_expansion(const PairAJ& pair, Word p, Expansion::Order order) {
  if (p == 2) throw std::invalid_argument("phi_expansion: odd p only");
  classify_case(pair.a, pair.two_j, p);
  const bool xy = order == Expansion::Order::XY;
  const Fp a = xy ? -Fp(pair.a, p) : Fp(pair.a, p);
  const Poly f = build_psi_j(pair.two_j / 2, p).shift_argument(half_shift_square(a));
  Expansion out;
  out.order = order;
  out.a = pair.a;
  out.c = expand_in_phi_basis(f, a);
  out.leading = leading_index(out.c);
  return out;
}

IdempotentBuilder::IdempotentBuilder(Word p) : p_(p), pairs_(enumerate_pairs(p)) {}

const HyperElem& IdempotentBuilder::e1(const PairAJ& pair) {
  const auto key = std::make_pair(pair.a, pair.two_j);
  auto it = e1_.find(key);
  if (it == e1_.end()) it = e1_.emplace(key, build_e1(pair, AlgebraCtx::make(p_, 1, 1))).first;
  return it->second;
}

const Expansion& IdempotentBuilder::yx_expansion(const PairAJ& pair) {
  const auto key = std::make_pair(pair.a, pair.two_j);
  auto it = yx_.find(key);
  if (it == yx_.end()) it = yx_.emplace(key, extract_yx_expansion(e1(pair), pair)).first;
  return it->second;
}

const HyperElem& IdempotentBuilder::a_c_left_factor(const PairAJ& pair, const AlgebraCtx& target) {
  const auto key = std::make_tuple(pair.a, pair.two_j, target.r(), target.rprime());
  auto it = left_.find(key);
  if (it != left_.end()) return it->second;
  const Expansion& ex = yx_expansion(pair);
  const Word s = s_of(pair, p_);
  HyperElem sum = zero(target);
  for (Word m = 0; m < p_; ++m) {
    if (ex.c[m] == 0) continue;
    if (m < s) throw std::logic_error("Z operator: expansion starts below s(a,j)");
    sum += (y_power(m, target) * x_power(m - s, target)).scaled(ex.c[m]);
  }
  return left_.emplace(key, mu_r(pair.a, 1, target) * sum).first->second;
}

HyperElem IdempotentBuilder::z_operator(const HyperElem& z, const PairAJ& pair) {
  if (z.ctx().p() != p_) throw std::invalid_argument("Z operator: characteristic mismatch");
  classify_case(pair.a, pair.two_j, p_);
  const HyperElem lifted = fr_prime(z);
  const AlgebraCtx& target = lifted.ctx();
  if (pair.tag == CaseTag::B || pair.tag == CaseTag::D) return lifted * embed(e1(pair), target);
  return a_c_left_factor(pair, target) * lifted * x_power(s_of(pair, p_), target);
}

HyperElem IdempotentBuilder::tuple(const TupleLabel& label, const AlgebraCtx& ctx) {
  if (ctx.p() != p_) throw std::invalid_argument("tuple: characteristic mismatch");
  if (label.pairs.size() != ctx.r())
    throw std::invalid_argument("label has " + std::to_string(label.pairs.size()) + " pairs, expected r=" +
                                std::to_string(ctx.r()));
  if (label.a_prime.has_value() != (ctx.rprime() > ctx.r()))
    throw std::invalid_argument(ctx.rprime() > ctx.r() ? "label needs a torus index a' since r' > r"
                                                        : "label carries a' but r' == r");
  for (const auto& pr : label.pairs) classify_case(pr.a, pr.two_j, p_);
  HyperElem cur = e1(label.pairs.back());
  for (std::size_t i = label.pairs.size() - 1; i-- > 0;) cur = z_operator(cur, label.pairs[i]);
  cur = into(cur, ctx);
  if (label.a_prime) cur = cur * torus_frobenius_factor(*label.a_prime, ctx);
  return cur;
}

HyperElem z_operator(const HyperElem& z, const PairAJ& pair) {
  IdempotentBuilder b(z.ctx().p());
  return b.z_operator(z, pair);
}

HyperElem torus_frobenius_factor(Word a_prime, const AlgebraCtx& ctx) {
  const Word block = ctx.exponent_bound();
  if (a_prime >= ctx.weight_count() / block)
    throw std::out_of_range("torus index a' must lie in [0, p^{r'-r})");
  std::vector<Word> v(ctx.weight_count(), 0);
  for (Word lam = 0; lam < ctx.weight_count(); ++lam) v[lam] = (lam / block == a_prime) ? 1 : 0;
  return from_weightfn(WeightFn(std::move(v)), ctx);
}

HyperElem build_e_tuple(const TupleLabel& label, const AlgebraCtx& ctx) {
  IdempotentBuilder b(ctx.p());
  return b.tuple(label, ctx);
}

std::vector<LabeledIdempotent> build_all_idempotents(const AlgebraCtx& ctx) {
  IdempotentBuilder b(ctx.p());
  std::vector<LabeledIdempotent> level;
  for (const auto& pr : b.pairs()) level.push_back({TupleLabel{{pr}, std::nullopt}, b.e1(pr)});
  for (Word depth = 2; depth <= ctx.r(); ++depth) {
    std::vector<LabeledIdempotent> next;
    next.reserve(level.size() * b.pairs().size());
    for (const auto& outer : b.pairs()) {
      for (const auto& inner : level) {
        TupleLabel lab;
        lab.pairs.push_back(outer);
        lab.pairs.insert(lab.pairs.end(), inner.label.pairs.begin(), inner.label.pairs.end());
        next.push_back({std::move(lab), b.z_operator(inner.element, outer)});
      }
    }
    level = std::move(next);
  }
  if (ctx.rprime() == ctx.r()) {
    if (!(level.front().element.ctx() == ctx))
      for (auto& item : level) item.element = into(item.element, ctx);
    return level;
  }
  const Word tail = ctx.weight_count() / ctx.exponent_bound();
  std::vector<HyperElem> factors;
  for (Word ap = 0; ap < tail; ++ap) factors.push_back(torus_frobenius_factor(ap, ctx));
  std::vector<LabeledIdempotent> out;
  out.reserve(level.size() * tail);
  for (const auto& item : level) {
    const HyperElem big = into(item.element, ctx);
    for (Word ap = 0; ap < tail; ++ap) {
      TupleLabel lab = item.label;
      lab.a_prime = ap;
      out.push_back({std::move(lab), big * factors[ap]});
    }
  }
  return out;
}

}  // namespace sl2idem
