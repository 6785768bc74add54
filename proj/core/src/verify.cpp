#include "sl2idem/verify.hpp"

#include <sstream>
#include <stdexcept>

#include "sl2idem/echelon.hpp"
#include "sl2idem/fpoly.hpp"
#include "sl2idem/pim.hpp"

namespace sl2idem {

namespace {

CheckResult make_result(std::string name, std::size_t failures, std::size_t total, std::string first = {}) {
  CheckResult r;
  r.name = std::move(name);
  r.pass = failures == 0;
  std::ostringstream os;
  os << (total - failures) << "/" << total << " ok";
  if (!first.empty()) os << "; first failure: " << first;
  r.detail = os.str();
  return r;
}

CheckResult skipped(std::string name, std::string why) {
  CheckResult r;
  r.name = std::move(name);
  r.pass = true;
  r.skipped = true;
  r.detail = std::move(why);
  return r;
}

// Counts failures and remembers the first one.
struct Tally {
  std::size_t total = 0;
  std::size_t failures = 0;
  std::string first;

  void record(bool ok, const std::string& what) {
    ++total;
    if (!ok && failures++ == 0) first = what;
  }
  CheckResult result(std::string name) const { return make_result(std::move(name), failures, total, first); }
};

Word power(Word p, Word e) { return static_cast<Word>(checked_pow(p, e)); }

HyperElem y_power(Word m, const AlgebraCtx& ctx) {
  return gen_y(m, ctx).scaled(factorial_mod_p(m, ctx.p()).value());
}
HyperElem x_power(Word m, const AlgebraCtx& ctx) {
  return gen_x(m, ctx).scaled(factorial_mod_p(m, ctx.p()).value());
}

std::string pair_name(const PairAJ& pr) { return std::to_string(pr.a) + ":" + std::to_string(pr.two_j); }

bool commute(const HyperElem& u, const HyperElem& v) { return u * v == v * u; }

}  // namespace

HyperElem random_basis_element(const AlgebraCtx& ctx, Rng& rng) {
  std::uniform_int_distribution<Word> ex(0, ctx.exponent_bound() - 1);
  std::uniform_int_distribution<Word> wt(0, ctx.weight_count() - 1);
  const Word m = ex(rng), n = wt(rng), mp = ex(rng);
  return basis_element(m, n, mp, ctx);
}

HyperElem random_element(const AlgebraCtx& ctx, Rng& rng, std::size_t max_terms) {
  std::uniform_int_distribution<Word> ex(0, ctx.exponent_bound() - 1);
  std::uniform_int_distribution<Word> val(0, ctx.p() - 1);
  std::uniform_int_distribution<std::size_t> count(1, max_terms);
  HyperElem::TermMap terms;
  const std::size_t k = count(rng);
  for (std::size_t t = 0; t < k; ++t) {
    const Word m = ex(rng), mp = ex(rng);
    std::vector<Word> v(ctx.weight_count());
    for (auto& x : v) x = val(rng);
    terms[TermKey{m, mp}] = WeightFn(std::move(v));
  }
  return HyperElem(ctx, std::move(terms));
}

std::vector<CheckResult> check_decomposition(const std::vector<LabeledIdempotent>& items, const AlgebraCtx& ctx) {
  std::vector<CheckResult> out;
  {
    CheckResult r;
    r.name = "label-count";
    r.pass = items.size() == label_count(ctx);
    r.detail = std::to_string(items.size()) + " idempotents, expected " + std::to_string(label_count(ctx));
    out.push_back(r);
  }
  Tally idem, orth, degree;
  HyperElem sum = zero(ctx);
  for (std::size_t i = 0; i < items.size(); ++i) {
    const HyperElem& e = items[i].element;
    idem.record(e * e == e, format_label(items[i].label));
    bool pure = true;
    for (const auto& [key, f] : e.terms()) pure = pure && key.yexp == key.xexp;
    degree.record(pure, format_label(items[i].label));
    sum += e;
    for (std::size_t j = 0; j < items.size(); ++j) {
      if (i == j) continue;
      orth.record((e * items[j].element).is_zero(),
                  format_label(items[i].label) + " * " + format_label(items[j].label));
    }
  }
  out.push_back(idem.result("idempotent"));
  out.push_back(orth.result("orthogonal"));
  CheckResult total;
  total.name = "sum-to-one";
  total.pass = sum == one(ctx);
  total.detail = total.pass ? "sum equals 1" : "sum differs from 1";
  out.push_back(total);
  out.push_back(degree.result("degree-zero"));
  return out;
}

CheckResult check_weights(const std::vector<LabeledIdempotent>& items, const AlgebraCtx& ctx) {
  Tally t;
  const std::int64_t P = ctx.exponent_bound();
  for (const auto& item : items) {
    const std::int64_t s = weight_sum(item.label, ctx.p());
    const HyperElem& e = item.element;
    const bool proj = mu_r(((s % P) + P) % P, ctx.r(), ctx) * e == e;
    bool exact = false;
    try {
      exact = weight_of_idempotent(e) == predicted_weight(item.label, ctx);
    } catch (const std::invalid_argument&) {
      exact = false;
    }
    t.record(proj && exact, format_label(item.label));
  }
  return t.result("weight");
}

CheckResult check_torus_projectors(const AlgebraCtx& ctx) {
  Tally t;
  const Word p = ctx.p();
  for (Word s = 1; s <= ctx.rprime(); ++s) {
    const Word period = power(p, s);
    std::vector<HyperElem> mus;
    HyperElem sum = zero(ctx);
    for (Word a = 0; a < period; ++a) {
      mus.push_back(mu_r(a, s, ctx));
      sum += mus.back();
    }
    t.record(sum == one(ctx), "sum mod p^" + std::to_string(s));
    const bool all_pairs = period <= 128;
    for (Word a = 0; a < period; ++a) {
      t.record(mus[a] * mus[a] == mus[a], "square of mu_" + std::to_string(a));
      for (Word b = 0; b < period; ++b) {
        if (a == b || (!all_pairs && b != (a + 1) % period)) continue;
        t.record((mus[a] * mus[b]).is_zero(), "mu_" + std::to_string(a) + " mu_" + std::to_string(b));
      }
      if (!all_pairs && a % 16 != 0) continue;
      // Binomial form C(H-a-1, N) = sum_i C(-a-1, N-i) C(H, i).
      const Word N = period - 1;
      std::vector<Word> expect(ctx.weight_count(), 0);
      for (Word i = 0; i <= N; ++i)
        expect[i] = binom_mod_p_raw(-static_cast<std::int64_t>(a) - 1, static_cast<std::int64_t>(N - i), p);
      t.record(weightfn_to_coeffs(mus[a].terms().at(TermKey{0, 0}), ctx) == expect,
               "binomial form of mu_" + std::to_string(a));
    }
  }
  return t.result("torus-projectors");
}

std::vector<CheckResult> check_polynomial_identities(Word p) {
  if (p == 2) {
    return {skipped("psi-shift", "odd p only"), skipped("psi-partition", "odd p only"),
            skipped("psi-orthogonal", "odd p only"), skipped("n-closed-form", "odd p only")};
  }
  std::vector<CheckResult> out;
  const Poly psi = build_psi(p);
  Tally shift;
  for (Word a = 0; a < p; ++a)
    shift.record(psi.shift_argument(half_shift_square(Fp(a, p))) == build_phi(Fp(a, p), p), "a=" + std::to_string(a));
  out.push_back(shift.result("psi-shift"));

  const Word half = (p - 1) / 2;
  Poly sum(p);
  std::vector<Poly> psis;
  for (Word j = 0; j <= half; ++j) {
    psis.push_back(build_psi_j(j, p));
    sum = sum + psis.back();
  }
  CheckResult part;
  part.name = "psi-partition";
  part.pass = sum == Poly::constant(Fp(1, p));
  part.detail = part.pass ? "sum of psi_j is 1" : "sum of psi_j differs from 1";
  out.push_back(part);

  Tally orth;
  for (Word m = 0; m <= half; ++m)
    for (Word n = 0; n <= half; ++n) {
      Poly lhs = psis[m] * psis[n];
      if (m == n) lhs = lhs - psis[m];
      orth.record(divrem(lhs, psi).second.is_zero(), "m=" + std::to_string(m) + " n=" + std::to_string(n));
    }
  out.push_back(orth.result("psi-orthogonal"));

  Tally nc;
  for (const auto& pr : enumerate_pairs(p)) {
    const Word j = pr.two_j / 2;
    nc.record(n_by_divisibility(Fp(pr.a, p), j, p) == n_closed(pr, p), "n " + pair_name(pr));
    nc.record(n_by_divisibility(-Fp(pr.a, p), j, p) == n_tilde_closed(pr, p), "n~ " + pair_name(pr));
  }
  out.push_back(nc.result("n-closed-form"));
  return out;
}

std::vector<CheckResult> check_expansions(Word p) {
  const auto ctx1 = AlgebraCtx::make(p, 1, 1);
  std::vector<CheckResult> out;
  if (p == 2) {
    // E(0,1/2) = mu_0, E(1,0) = mu_1 YX = mu_1 (XY - 1), E(1,1) = mu_1 XY = mu_1 (YX + 1).
    const std::vector<std::vector<Word>> yx = {{1, 0}, {0, 1}, {1, 1}};
    const std::vector<std::vector<Word>> xy = {{1, 0}, {1, 1}, {0, 1}};
    Tally t;
    const auto pairs = enumerate_pairs(2);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      const HyperElem e = build_e1(pairs[i], ctx1);
      try {
        t.record(extract_yx_expansion(e, pairs[i]).c == yx[i], "YX " + pair_name(pairs[i]));
        t.record(extract_xy_expansion(e, pairs[i]).c == xy[i], "XY " + pair_name(pairs[i]));
      } catch (const std::exception& ex) {
        t.record(false, pair_name(pairs[i]) + ": " + ex.what());
      }
    }
    out.push_back(t.result("expansion-table"));
    return out;
  }
  Tally yx, xy, alt, lead;
  for (const auto& pr : enumerate_pairs(p)) {
    const HyperElem e = build_e1(pr, ctx1);
    try {
      const Expansion a = extract_yx_expansion(e, pr);
      const Expansion b = phi_expansion(pr, p, Expansion::Order::YX);
      yx.record(a.c == b.c, pair_name(pr));
      lead.record(a.c[n_closed(pr, p)] != 0 && a.leading == n_closed(pr, p), "YX " + pair_name(pr));
    } catch (const std::exception& ex) {
      yx.record(false, pair_name(pr) + ": " + ex.what());
    }
    try {
      const Expansion a = extract_xy_expansion(e, pr);
      const Expansion b = phi_expansion(pr, p, Expansion::Order::XY);
      xy.record(a.c == b.c, pair_name(pr));
      lead.record(a.c[n_tilde_closed(pr, p)] != 0 && a.leading == n_tilde_closed(pr, p), "XY " + pair_name(pr));
    } catch (const std::exception& ex) {
      xy.record(false, pair_name(pr) + ": " + ex.what());
    }
    alt.record(build_e1_xy_form(pr, ctx1) == e, pair_name(pr));
  }
  out.push_back(yx.result("expansion-yx"));
  out.push_back(xy.result("expansion-xy"));
  out.push_back(lead.result("expansion-leading"));
  out.push_back(alt.result("alternative-form"));
  return out;
}

CheckResult check_yx_product_formula(Word p) {
  const auto ctx = AlgebraCtx::make(p, 1, 1);
  const HyperElem yx = gen_y(1, ctx) * gen_x(1, ctx);
  const HyperElem xy = gen_x(1, ctx) * gen_y(1, ctx);
  Tally t;
  for (Word a = 0; a < p; ++a) {
    const HyperElem mu = mu_r(a, 1, ctx);
    const HyperElem u = mu * yx, w = mu * xy;
    HyperElem prod_yx = one(ctx), prod_xy = one(ctx);
    for (Word m = 1; m <= p; ++m) {
      const Word i = m - 1;
      const std::int64_t ai = a;
      const Word cy = mod_reduce(static_cast<std::int64_t>(i) * (i + ai + 1), p);
      const Word cx = mod_reduce(static_cast<std::int64_t>(i) * (i - ai + 1), p);
      prod_yx = prod_yx * (u - one(ctx).scaled(cy));
      prod_xy = prod_xy * (w - one(ctx).scaled(cx));
      const std::string tag = "a=" + std::to_string(a) + " m=" + std::to_string(m);
      if (m < p) {
        t.record(mu * y_power(m, ctx) * x_power(m, ctx) == prod_yx, "YX " + tag);
        t.record(mu * x_power(m, ctx) * y_power(m, ctx) == prod_xy, "XY " + tag);
      } else {
        // Degree-p products vanish since X^p = Y^p = 0.
        t.record(prod_yx.is_zero() && prod_xy.is_zero(), "vanishing " + tag);
      }
    }
  }
  return t.result("yx-product-formula");
}

CheckResult check_top_x_exponents(const std::vector<LabeledIdempotent>& items, const AlgebraCtx& ctx) {
  Tally t;
  for (const auto& item : items)
    t.record(top_x_exponent(item.element) == predicted_top_x_exponent(item.label, ctx.p()), format_label(item.label));
  return t.result("top-x-exponent");
}

CheckResult check_multiplication_independence(Word p) {
  if (p > 3) return skipped("multiplication-independence", "run for p <= 3 only");
  const auto small = AlgebraCtx::make(p, 1, 1);
  const auto big = AlgebraCtx::make(p, 2, 2);
  EchelonBasis basis(p);
  std::vector<HyperElem> lower, upper;
  for (Word m = 0; m < p; ++m)
    for (Word n = 0; n < p; ++n)
      for (Word mp = 0; mp < p; ++mp) {
        lower.push_back(embed(basis_element(m, n, mp, small), big));
        upper.push_back(fr_prime(basis_element(m, n, mp, small)));
      }
  for (const auto& u : lower)
    for (const auto& v : upper) basis.insert(coordinates(u * v));
  CheckResult r;
  r.name = "multiplication-independence";
  r.pass = basis.rank() == big.dimension();
  r.detail = "rank " + std::to_string(basis.rank()) + " of " + std::to_string(big.dimension());
  return r;
}

std::vector<CheckResult> check_commutation(const AlgebraCtx& ctx) {
  const Word p = ctx.p();
  std::vector<CheckResult> out;
  Tally a;
  std::vector<HyperElem> gens;
  for (Word s = 0, q = 1; s < ctx.r(); ++s, q *= p) gens.push_back(gen_y(q, ctx) * gen_x(q, ctx));
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      a.record(commute(gens[i], gens[j]), "s=" + std::to_string(i) + " t=" + std::to_string(j));
    for (Word n = 0; n < ctx.weight_count(); ++n)
      a.record(commute(gens[i], gen_hbinom(n, ctx)), "s=" + std::to_string(i) + " n=" + std::to_string(n));
  }
  out.push_back(a.result("torus-centralizer-commutative"));

  if (ctx.r() < 2) {
    out.push_back(skipped("frobenius-centralizes", "needs r >= 2"));
    return out;
  }
  Tally c;
  std::vector<HyperElem> level1{gen_y(1, ctx) * gen_x(1, ctx)};
  for (Word n = 0; n < p; ++n) level1.push_back(gen_hbinom(n, ctx));
  for (Word n = 1; n < power(p, ctx.r() - 1); ++n)
    for (const auto& el : level1) {
      c.record(commute(gen_x(n * p, ctx), el), "X^(" + std::to_string(n * p) + ")");
      c.record(commute(gen_y(n * p, ctx), el), "Y^(" + std::to_string(n * p) + ")");
    }
  out.push_back(c.result("frobenius-centralizes"));
  return out;
}

std::vector<CheckResult> check_z_lemmas(Word p, Rng& rng) {
  const auto small = AlgebraCtx::make(p, 1, 1);
  const auto big = AlgebraCtx::make(p, 2, 2);
  std::vector<CheckResult> out;
  Tally lift;
  for (Word a = 0; a < p; ++a) {
    const HyperElem mu = mu_r(a, 1, big);
    for (Word b = a; b < p; ++b) {
      const HyperElem xb = x_power(b, big);
      for (int trial = 0; trial < 3; ++trial) {
        const HyperElem z1 = random_element(small, rng), z2 = random_element(small, rng);
        lift.record(mu * fr_prime(z1) * fr_prime(z2) * xb == mu * fr_prime(z1 * z2) * xb,
                    "a=" + std::to_string(a) + " b=" + std::to_string(b));
      }
    }
  }
  out.push_back(lift.result("frobenius-lift-product"));

  Tally inter;
  IdempotentBuilder builder(p);
  for (const auto& pr : enumerate_pairs(p)) {
    if (pr.tag != CaseTag::A && pr.tag != CaseTag::C) continue;
    const Word s = s_of(pr, p);
    const HyperElem mu = mu_r(pr.a, 1, big);
    for (Word m = n_closed(pr, p); m < p; ++m) {
      const HyperElem left = mu * y_power(m, big) * x_power(m - s, big);
      const std::string tag = pair_name(pr) + " m=" + std::to_string(m);
      for (Word n = 1; n < p; ++n) {
        inter.record(commute(gen_x(n * p, big), left), "X " + tag);
        inter.record(commute(gen_y(n * p, big), left), "Y " + tag);
      }
      for (Word n = 0; n < p; ++n) {
        HyperElem h = gen_hbinom(n * p, big);
        if (n > 0) h += gen_hbinom((n - 1) * p, big);
        inter.record(left * gen_hbinom(n * p, big) == h * left, "H " + tag + " n=" + std::to_string(n));
      }
    }
  }
  out.push_back(inter.result("left-factor-intertwining"));
  return out;
}

std::vector<CheckResult> check_z_operator(Word p, Rng& rng) {
  const auto small = AlgebraCtx::make(p, 1, 1);
  const auto big = AlgebraCtx::make(p, 2, 2);
  IdempotentBuilder b(p);
  const auto pairs = enumerate_pairs(p);
  std::vector<CheckResult> out;

  Tally unit, absorb, mult, orth, equi;
  for (const auto& pr : pairs) {
    const HyperElem e = embed(b.e1(pr), big);
    unit.record(b.z_operator(one(small), pr) == e, pair_name(pr));
    for (int trial = 0; trial < 6; ++trial) {
      const HyperElem z = random_basis_element(small, rng);
      const HyperElem zz = b.z_operator(z, pr);
      absorb.record(e * zz == zz && zz * e == zz, pair_name(pr));
    }
    for (int trial = 0; trial < 2; ++trial) {
      const HyperElem z1 = random_element(small, rng, 3), z2 = random_element(small, rng, 3);
      const HyperElem zz = b.z_operator(z2, pr);
      mult.record(b.z_operator(z1, pr) * zz == b.z_operator(z1 * z2, pr), pair_name(pr));
      equi.record(gen_x(p, big) * zz == b.z_operator(gen_x(1, small) * z2, pr), "X " + pair_name(pr));
      equi.record(gen_y(p, big) * zz == b.z_operator(gen_y(1, small) * z2, pr), "Y " + pair_name(pr));
    }
  }
  for (const auto& p1 : pairs)
    for (const auto& p2 : pairs) {
      if (p1 == p2) continue;
      const HyperElem z1 = random_element(small, rng, 2), z2 = random_element(small, rng, 2);
      orth.record((b.z_operator(z1, p1) * b.z_operator(z2, p2)).is_zero(), pair_name(p1) + " " + pair_name(p2));
    }
  out.push_back(unit.result("z-of-one"));
  out.push_back(absorb.result("z-absorbs-e"));
  out.push_back(mult.result("z-multiplicative"));
  out.push_back(orth.result("z-orthogonal"));
  out.push_back(equi.result("z-frobenius-equivariant"));
  return out;
}

CheckResult check_tuple_refinement(Word p) {
  const auto big = AlgebraCtx::make(p, 2, 2);
  IdempotentBuilder b(p);
  Tally t;
  for (const auto& outer : b.pairs()) {
    HyperElem sum = zero(big);
    for (const auto& inner : b.pairs()) sum += b.tuple(TupleLabel{{outer, inner}, std::nullopt}, big);
    t.record(sum == embed(b.e1(outer), big), pair_name(outer));
  }
  return t.result("tuple-refinement");
}

std::vector<CheckResult> check_frobenius(const AlgebraCtx& ctx, Rng& rng) {
  const Word p = ctx.p();
  const AlgebraCtx src = ctx.r() >= 2 ? AlgebraCtx::make(p, ctx.r() - 1, ctx.rprime() - 1) : ctx;
  std::vector<CheckResult> out;
  Tally split;
  for (Word m = 0; m < src.exponent_bound(); ++m)
    for (Word mp = 0; mp < src.exponent_bound(); ++mp)
      for (Word n = 0; n < src.weight_count(); ++n) {
        const HyperElem u = basis_element(m, n, mp, src);
        split.record(fr(fr_prime(u)) == u, std::to_string(m) + "," + std::to_string(n) + "," + std::to_string(mp));
      }
  out.push_back(split.result("frobenius-splitting"));

  Tally paths;
  for (int trial = 0; trial < 20; ++trial) {
    const HyperElem u = random_element(src, rng);
    paths.record(fr_prime(u) == fr_prime_via_coeffs(u), "lift");
    if (ctx.r() >= 2) {
      const HyperElem v = random_element(ctx, rng);
      paths.record(fr(v) == fr_via_coeffs(v), "restriction");
    }
  }
  out.push_back(paths.result("frobenius-paths"));
  return out;
}

CheckResult check_associativity(const AlgebraCtx& ctx, Rng& rng, std::size_t triples) {
  Tally t;
  for (std::size_t i = 0; i < triples; ++i) {
    const HyperElem u = random_basis_element(ctx, rng), v = random_basis_element(ctx, rng),
                    w = random_basis_element(ctx, rng);
    t.record((u * v) * w == u * (v * w), "triple " + std::to_string(i));
  }
  return t.result("associativity");
}

CheckResult check_weyl_homomorphism(const AlgebraCtx& ctx, Rng& rng, std::size_t pairs) {
  Tally t;
  const Word top = 2 * ctx.exponent_bound() - 2;
  for (std::size_t i = 0; i < pairs; ++i) {
    const HyperElem u = random_element(ctx, rng, 3), v = random_element(ctx, rng, 3);
    const HyperElem uv = u * v;
    bool ok = true;
    Word bad = 0;
    for (Word lam = 0; lam <= top && ok; ++lam) {
      const WeylModule V{lam};
      ok = weyl_action(uv, V) == weyl_action(u, V) * weyl_action(v, V);
      bad = lam;
    }
    t.record(ok, "pair " + std::to_string(i) + " lambda=" + std::to_string(bad));
  }
  return t.result("weyl-homomorphism");
}

std::vector<CheckResult> check_pims(const AlgebraCtx& ctx) {
  const auto rows = pim_table(ctx);
  Tally dim, weight, inv;
  std::uint64_t census = 0;
  for (const auto& row : rows) {
    const std::string name = format_label(row.label);
    census += row.computed_dim;
    dim.record(row.computed_dim == row.predicted.dim, name);
    weight.record(row.weight_ok, name);
    inv.record(row.top_ok && row.observed.consistent &&
                   row.observed.lambda_prime == static_cast<std::int64_t>(row.predicted.lambda_prime) &&
                   row.observed.lambda_double_prime == row.predicted.lambda_double_prime,
               name);
  }
  CheckResult c;
  c.name = "pim-census";
  c.pass = census == ctx.dimension();
  c.detail = "sum of dimensions " + std::to_string(census) + ", algebra dimension " + std::to_string(ctx.dimension());
  return {dim.result("pim-dimension"), c, weight.result("pim-weight"), inv.result("pim-label")};
}

std::vector<CheckResult> run_suite(const AlgebraCtx& ctx, Suite suite, std::uint64_t seed) {
  Rng rng(seed);
  const auto items = build_all_idempotents(ctx);
  std::vector<CheckResult> out = check_decomposition(items, ctx);
  out.push_back(check_weights(items, ctx));
  out.push_back(check_torus_projectors(ctx));
  if (suite == Suite::Basic) return out;

  const Word p = ctx.p();
  auto append = [&out](std::vector<CheckResult> more) {
    for (auto& r : more) out.push_back(std::move(r));
  };
  append(check_polynomial_identities(p));
  append(check_expansions(p));
  out.push_back(check_yx_product_formula(p));
  out.push_back(check_top_x_exponents(items, ctx));
  out.push_back(check_multiplication_independence(p));
  append(check_commutation(ctx));
  append(check_z_lemmas(p, rng));
  append(check_z_operator(p, rng));
  out.push_back(check_tuple_refinement(p));
  append(check_frobenius(ctx, rng));
  out.push_back(check_associativity(ctx, rng));
  out.push_back(check_weyl_homomorphism(ctx, rng));
  append(check_pims(ctx));
  return out;
}

}  // namespace sl2idem
