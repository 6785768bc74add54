// Acceptance driver: one line per criterion, nonzero exit if any fails.
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "sl2idem/hyperalg.hpp"
#include "sl2idem/idem.hpp"
#include "sl2idem/pim.hpp"
#include "sl2idem/verify.hpp"

using namespace sl2idem;

namespace {

struct Ctx3 {
  Word p, r, rprime;
};

std::string ctx_name(const AlgebraCtx& ctx) {
  std::ostringstream s;
  s << "(" << ctx.p() << "," << ctx.r() << "," << ctx.rprime() << ")";
  return s.str();
}

// Accumulates check results; remembers the first failure for the summary line.
class Tally {
 public:
  void add(const std::string& where, const CheckResult& c) {
    ++total_;
    if (c.skipped || c.pass) return;
    ++failed_;
    if (first_failure_.empty()) first_failure_ = where + " " + c.name + ": " + c.detail;
  }
  void add(const std::string& where, const std::vector<CheckResult>& cs) {
    for (const auto& c : cs) add(where, c);
  }
  void fail(const std::string& what) { add("", CheckResult{what, false, false, "exception"}); }
  bool ok() const { return failed_ == 0 && total_ > 0; }
  std::string summary() const {
    std::ostringstream s;
    s << total_ << " checks";
    if (failed_) s << ", " << failed_ << " failed; first: " << first_failure_;
    return s.str();
  }

 private:
  std::size_t total_ = 0;
  std::size_t failed_ = 0;
  std::string first_failure_;
};

bool run_criterion(int number, const std::string& title, const std::function<void(Tally&)>& body) {
  Tally tally;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(tally);
  } catch (const std::exception& e) {
    tally.fail(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << (tally.ok() ? "[PASS]" : "[FAIL]") << " criterion " << number << ": " << title << " ("
            << tally.summary() << ", " << secs << " s)" << std::endl;
  return tally.ok();
}

void decomposition(Tally& t, const std::vector<Ctx3>& list) {
  for (const auto& c : list) {
    const auto ctx = AlgebraCtx::make(c.p, c.r, c.rprime);
    t.add(ctx_name(ctx), check_decomposition(build_all_idempotents(ctx), ctx));
  }
}

}  // namespace

int main() {
  bool ok = true;

  ok &= run_criterion(1, "first-level decomposition for p in {2,3,5,7,11}", [](Tally& t) {
    decomposition(t, {{2, 1, 1}, {3, 1, 1}, {5, 1, 1}, {7, 1, 1}, {11, 1, 1}});
  });

  ok &= run_criterion(2, "tuple decomposition for (p,r) in {(2,2),(2,3),(3,2),(5,2)}", [](Tally& t) {
    decomposition(t, {{2, 2, 2}, {2, 3, 3}, {3, 2, 2}, {5, 2, 2}});
  });

  ok &= run_criterion(3, "extended torus decomposition for (p,r,r') in {(2,1,2),(2,2,3),(3,1,2),(3,2,3)}",
                      [](Tally& t) { decomposition(t, {{2, 1, 2}, {2, 2, 3}, {3, 1, 2}, {3, 2, 3}}); });

  ok &= run_criterion(4, "torus projectors and idempotent weights", [](Tally& t) {
    for (const auto& [p, r] : std::vector<std::pair<Word, Word>>{{2, 2}, {2, 3}, {3, 2}, {5, 2}}) {
      const auto ctx = AlgebraCtx::make(p, r);
      t.add(ctx_name(ctx), check_torus_projectors(ctx));
      t.add(ctx_name(ctx), check_weights(build_all_idempotents(ctx), ctx));
    }
  });

  ok &= run_criterion(5, "polynomial identities and closed forms for p in {3,5,7,11,13}", [](Tally& t) {
    for (Word p : {3, 5, 7, 11, 13}) t.add("p=" + std::to_string(p), check_polynomial_identities(p));
  });

  ok &= run_criterion(6, "expansion coefficients by two routes for p in {2,3,5,7}", [](Tally& t) {
    for (Word p : {2, 3, 5, 7}) t.add("p=" + std::to_string(p), check_expansions(p));
  });

  ok &= run_criterion(7, "top X exponent of every idempotent", [](Tally& t) {
    for (const auto& [p, r] :
         std::vector<std::pair<Word, Word>>{{2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}, {5, 1}, {5, 2}}) {
      const auto ctx = AlgebraCtx::make(p, r);
      t.add(ctx_name(ctx), check_top_x_exponents(build_all_idempotents(ctx), ctx));
    }
  });

  ok &= run_criterion(8, "projective indecomposable dimensions, census and labels", [](Tally& t) {
    for (const auto& c : std::vector<Ctx3>{
             {2, 1, 1}, {2, 2, 2}, {2, 1, 2}, {3, 1, 1}, {3, 2, 2}, {3, 1, 2}, {5, 1, 1}}) {
      const auto ctx = AlgebraCtx::make(c.p, c.r, c.rprime);
      t.add(ctx_name(ctx), check_pims(ctx));
    }
  });

  ok &= run_criterion(9, "engine soundness: Frobenius, associativity, Weyl action, commutation, Z operator",
                      [](Tally& t) {
                        Rng rng(kDefaultSeed);
                        for (const auto& c : std::vector<Ctx3>{
                                 {2, 2, 2}, {3, 1, 2}, {3, 2, 2}, {5, 1, 1}, {5, 2, 3}}) {
                          const auto ctx = AlgebraCtx::make(c.p, c.r, c.rprime);
                          const auto name = ctx_name(ctx);
                          t.add(name, check_frobenius(ctx, rng));
                          t.add(name, check_associativity(ctx, rng, 200));
                          t.add(name, check_weyl_homomorphism(ctx, rng, 200));
                          t.add(name, check_commutation(ctx));
                        }
                        for (Word p : {2, 3, 5}) {
                          const auto name = "p=" + std::to_string(p);
                          t.add(name, check_z_lemmas(p, rng));
                          t.add(name, check_z_operator(p, rng));
                          t.add(name, check_tuple_refinement(p));
                        }
                      });

  return ok ? 0 : 1;
}
