#include "sl2idem/pim.hpp"

#include <deque>
#include <stdexcept>

namespace sl2idem {

FpMatrix weyl_action(const HyperElem& u, const WeylModule& v) {
  const auto& ctx = u.ctx();
  const Word p = ctx.p(), L = ctx.weight_count();
  const std::int64_t lam = v.lambda;
  FpMatrix out(v.dim(), v.dim(), p);
  for (const auto& [key, f] : u.terms()) {
    for (std::int64_t i = 0; i <= lam; ++i) {
      const std::int64_t k = i - key.xexp;
      if (k < 0) continue;
      const std::int64_t dest = k + key.yexp;
      if (dest > lam) continue;
      Word c = binom_mod_p_raw(lam - i + key.xexp, key.xexp, p);
      if (c == 0) continue;
      const std::int64_t w = ((lam - 2 * k) % L + L) % L;
      c = mul_mod(c, f[static_cast<std::size_t>(w)], p);
      c = mul_mod(c, binom_mod_p_raw(k + key.yexp, key.yexp, p), p);
      Word& slot = out.at(static_cast<std::size_t>(dest), static_cast<std::size_t>(i));
      slot = (slot + c) % p;
    }
  }
  return out;
}

SparseVec coordinates(const HyperElem& u) {
  const auto& ctx = u.ctx();
  const std::uint64_t P = ctx.exponent_bound(), L = ctx.weight_count();
  SparseVec out;
  for (const auto& [key, f] : u.terms()) {
    const std::uint64_t base = (key.yexp * P + key.xexp) * L;
    for (std::uint64_t lam = 0; lam < L; ++lam)
      if (f[lam] != 0) out.emplace_back(base + lam, f[lam]);
  }
  return out;
}

IdealBasis left_ideal_span(const HyperElem& e) {
  const auto& ctx = e.ctx();
  std::vector<HyperElem> gens;
  for (Word i = 0, q = 1; i < ctx.r(); ++i, q *= ctx.p()) {
    gens.push_back(gen_x(q, ctx));
    gens.push_back(gen_y(q, ctx));
  }
  for (Word l = 0, q = 1; l < ctx.rprime(); ++l, q *= ctx.p()) gens.push_back(gen_hbinom(q, ctx));

  IdealBasis span{EchelonBasis(ctx.p())};
  std::deque<HyperElem> pending{e};
  while (!pending.empty()) {
    HyperElem v = std::move(pending.front());
    pending.pop_front();
    if (!span.basis.insert(coordinates(v))) continue;
    for (const auto& g : gens) pending.push_back(g * v);
  }
  return span;
}

Word top_x_exponent(const HyperElem& e) {
  if (e.is_zero()) throw std::invalid_argument("top_x_exponent: element is zero");
  const auto& ctx = e.ctx();
  for (Word n = ctx.exponent_bound(); n-- > 0;)
    if (!(gen_x(n, ctx) * e).is_zero()) return n;
  throw std::logic_error("top_x_exponent: X^(0) e vanished");
}

Word weight_of_idempotent(const HyperElem& e) {
  if (e.is_zero()) throw std::invalid_argument("weight_of_idempotent: element is zero");
  const auto& ctx = e.ctx();
  const std::int64_t L = ctx.weight_count();
  const auto& [key, f] = *e.terms().begin();
  std::int64_t lam = 0;
  while (f[static_cast<std::size_t>(lam)] == 0) ++lam;
  const Word nu = static_cast<Word>(((lam - 2 * static_cast<std::int64_t>(key.yexp)) % L + L) % L);
  if (!(mu_r(nu, ctx.rprime(), ctx) * e == e))
    throw std::invalid_argument("weight_of_idempotent: element is not a weight vector");
  return nu;
}

std::uint64_t pim_dimension(const std::vector<Word>& betas, Word p) {
  std::uint64_t d = 1;
  for (Word b : betas) d *= (b == p - 1) ? p : 2 * p;
  return d;
}

Word beta_of(const PairAJ& pair, Word p) {
  if (pair.tag == CaseTag::B || pair.tag == CaseTag::C) return p - pair.two_j - 1;
  return pair.two_j - 1;
}

std::int64_t weight_sum(const TupleLabel& label, Word p) {
  std::int64_t sum = 0, q = 1;
  for (const auto& pr : label.pairs) {
    sum += b_of(pr, p) * q;
    q *= p;
  }
  return sum;
}

Word predicted_weight(const TupleLabel& label, const AlgebraCtx& ctx) {
  const std::int64_t P = ctx.exponent_bound(), L = ctx.weight_count();
  std::int64_t nu = weight_sum(label, ctx.p());
  if (nu < 0) nu += P;
  nu += static_cast<std::int64_t>(label.a_prime.value_or(0)) * P;
  return static_cast<Word>(((nu % L) + L) % L);
}

Word predicted_top_x_exponent(const TupleLabel& label, Word p) {
  Word t = 0, q = 1;
  for (const auto& pr : label.pairs) {
    t += (p - 1 - n_tilde_closed(pr, p)) * q;
    q *= p;
  }
  return t;
}

PimLabel pim_label_closed_form(const TupleLabel& label, const AlgebraCtx& ctx) {
  const Word p = ctx.p();
  const Word tail = ctx.weight_count() / ctx.exponent_bound();
  PimLabel out;
  Word q = 1;
  for (const auto& pr : label.pairs) {
    const Word b = beta_of(pr, p);
    out.betas.push_back(b);
    out.lambda_prime += b * q;
    q *= p;
  }
  const Word ap = label.a_prime.value_or(0);
  out.lambda_double_prime = weight_sum(label, p) >= 0 ? ap : (ap + 1) % tail;
  out.dim = pim_dimension(out.betas, p);
  return out;
}

InvariantLabel pim_label_from_invariants(Word nu, Word t, const AlgebraCtx& ctx) {
  const std::int64_t P = ctx.exponent_bound();
  const Word tail = ctx.weight_count() / ctx.exponent_bound();
  const std::int64_t nu1 = nu % P;
  const Word nu2 = static_cast<Word>(nu / P);
  InvariantLabel out;
  if (nu1 + 2 * static_cast<std::int64_t>(t) <= 2 * P - 2) {
    out.lambda_prime = 2 * P - 2 - nu1 - 2 * static_cast<std::int64_t>(t);
    out.lambda_double_prime = nu2;
  } else {
    out.lambda_prime = 3 * P - 2 - nu1 - 2 * static_cast<std::int64_t>(t);
    out.lambda_double_prime = (nu2 + 1 == tail) ? 0 : nu2 + 1;
  }
  out.consistent = out.lambda_prime >= 0 && out.lambda_prime < P;
  return out;
}

std::vector<PimRow> pim_table(const AlgebraCtx& ctx) {
  std::vector<PimRow> rows;
  for (auto& item : build_all_idempotents(ctx)) {
    PimRow row;
    row.label = item.label;
    row.nu = weight_of_idempotent(item.element);
    row.t = top_x_exponent(item.element);
    row.predicted = pim_label_closed_form(item.label, ctx);
    row.observed = pim_label_from_invariants(row.nu, row.t, ctx);
    row.computed_dim = left_ideal_span(item.element).dim();
    row.weight_ok = row.nu == predicted_weight(item.label, ctx);
    row.top_ok = row.t == predicted_top_x_exponent(item.label, ctx.p());
    row.pass = row.weight_ok && row.top_ok && row.observed.consistent &&
               row.observed.lambda_prime == static_cast<std::int64_t>(row.predicted.lambda_prime) &&
               row.observed.lambda_double_prime == row.predicted.lambda_double_prime &&
               row.computed_dim == row.predicted.dim;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace sl2idem
