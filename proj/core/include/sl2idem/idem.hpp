#ifndef SL2IDEM_IDEM_HPP
#define SL2IDEM_IDEM_HPP

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "sl2idem/hyperalg.hpp"

namespace sl2idem {

/// Parity/range class of a pair (a, j). For odd p, with a in [0, p) and
/// j in [0, (p-1)/2]:
///   A: a even, j >= (p-a+1)/2      B: a even, j <= (p-a-1)/2
///   C: a odd,  j <= (a-1)/2        D: a odd,  j >= (a+1)/2
/// For p = 2 the three pairs (0,1/2), (1,0), (1,1) are B, C, D.
enum class CaseTag { A, B, C, D };

char case_letter(CaseTag tag);

/// An index (a, j). j is stored doubled so that p = 2's j = 1/2 is an integer.
struct PairAJ {
  Word a = 0;
  Word two_j = 0;
  CaseTag tag = CaseTag::B;

  friend bool operator==(const PairAJ& x, const PairAJ& y) { return x.a == y.a && x.two_j == y.two_j; }
  friend auto operator<=>(const PairAJ& x, const PairAJ& y) {
    return std::tie(x.a, x.two_j) <=> std::tie(y.a, y.two_j);
  }
};

// Throws std::invalid_argument if (a, two_j) is not an index for p.
CaseTag classify_case(Word a, Word two_j, Word p);
PairAJ make_pair_aj(Word a, Word two_j, Word p);

// All indices, ascending in (a, two_j); p(p+1)/2 of them (3 for p = 2).
std::vector<PairAJ> enumerate_pairs(Word p);

Word n_closed(const PairAJ& pair, Word p);
Word n_tilde_closed(const PairAJ& pair, Word p);

// Defined for cases A and C only; throws std::logic_error otherwise.
Word s_of(const PairAJ& pair, Word p);

// a - p for A/C, a for B/D.
std::int64_t b_of(const PairAJ& pair, Word p);

/// A tuple of r pairs, plus the torus index a' in [0, p^{r'-r}) when r' > r.
struct TupleLabel {
  std::vector<PairAJ> pairs;
  std::optional<Word> a_prime;

  friend bool operator==(const TupleLabel&, const TupleLabel&) = default;
};

// "a:t[,a:t]*[;aprime]" with t = 2j.
std::string format_label(const TupleLabel& label);

// Throws std::invalid_argument naming the offending pair.
TupleLabel parse_label(const std::string& text, const AlgebraCtx& ctx);

/// All |P|^r p^{r'-r} labels, lexicographic in (a_0, 2j_0, a_1, ..., a').
std::vector<TupleLabel> enumerate_labels(const AlgebraCtx& ctx);
std::uint64_t label_count(const AlgebraCtx& ctx);

/// Torus idempotent projecting onto weights congruent to a mod p^s
/// (C(H-a-1, p^s-1) in binomial form). Requires 1 <= s <= r'.
HyperElem mu_r(std::int64_t a, Word s, const AlgebraCtx& ctx);

/// E(a, j). Odd p: psi_j(mu_a YX + ((a+1)/2)^2) mu_a, evaluated in U_1 by
/// Horner's rule. p = 2: mu_0, mu_1 YX, mu_1 XY. Built in U_1 and embedded
/// into ctx.
HyperElem build_e1(const PairAJ& pair, const AlgebraCtx& ctx);

// psi_j(mu_a XY + ((a-1)/2)^2) mu_a; odd p only.
HyperElem build_e1_xy_form(const PairAJ& pair, const AlgebraCtx& ctx);

/// E(a,j) = mu_a sum_m c_m Y^m X^m (order YX) or mu_a sum_m c_m X^m Y^m
/// (order XY), ordinary powers; `leading` is the first nonzero index.
struct Expansion {
  enum class Order { YX, XY };
  Order order = Order::YX;
  Word a = 0;
  std::vector<Word> c;
  Word leading = 0;
};

/// Reads c_m off the normal form: the (m, m) term of E is
/// c_m (m!)^2 Y^(m) mu_{a+2m} X^(m). Throws std::invalid_argument if E does
/// not have that shape and std::logic_error if the leading index disagrees
/// with n_closed.
Expansion extract_yx_expansion(const HyperElem& e, const PairAJ& pair);

/// Peels mu_a X^m Y^m (computed in the algebra) off E from the top degree
/// down. Same error contract, against n_tilde_closed.
Expansion extract_xy_expansion(const HyperElem& e, const PairAJ& pair);

/// Polynomial route for odd p: psi_j(x + ((a+1)/2)^2) in the phi_{a,m}
/// basis (YX), or psi_j(x + ((a-1)/2)^2) in the phi_{-a,m} basis (XY).
Expansion phi_expansion(const PairAJ& pair, Word p, Expansion::Order order);

/// Builds Z(z; (a,j)) and the tuple idempotents, caching E(a,j), its YX
/// expansion and the left factors of Z per target context. Not safe for
/// concurrent use; give each thread its own builder.
class IdempotentBuilder {
 public:
  explicit IdempotentBuilder(Word p);

  Word p() const { return p_; }
  const std::vector<PairAJ>& pairs() const { return pairs_; }

  // E(a, j) in U_1.
  const HyperElem& e1(const PairAJ& pair);
  const Expansion& yx_expansion(const PairAJ& pair);

  /// z in U_{s,s'} -> Z(z; (a,j)) in U_{s+1,s'+1}.
  ///   B/D: Fr'(z) E(a,j)
  ///   A/C: mu_a sum_m c_m Y^m X^{m-s(a,j)} Fr'(z) X^{s(a,j)}
  HyperElem z_operator(const HyperElem& z, const PairAJ& pair);

  HyperElem tuple(const TupleLabel& label, const AlgebraCtx& ctx);

 private:
  const HyperElem& a_c_left_factor(const PairAJ& pair, const AlgebraCtx& target);

  Word p_;
  std::vector<PairAJ> pairs_;
  std::map<std::pair<Word, Word>, HyperElem> e1_;
  std::map<std::pair<Word, Word>, Expansion> yx_;
  std::map<std::tuple<Word, Word, Word, Word>, HyperElem> left_;
};

HyperElem z_operator(const HyperElem& z, const PairAJ& pair);

/// Fr'^r(mu_{a'}^{(r'-r)}) in ctx: the indicator of floor(lambda / p^r) = a'.
HyperElem torus_frobenius_factor(Word a_prime, const AlgebraCtx& ctx);

/// The primitive idempotent for a label: the recursion runs through
/// U_1, U_2, ..., U_r and the result is embedded once, then multiplied by
/// the torus factor when r' > r.
HyperElem build_e_tuple(const TupleLabel& label, const AlgebraCtx& ctx);

struct LabeledIdempotent {
  TupleLabel label;
  HyperElem element;
};

// Every idempotent of ctx in enumerate_labels order, sharing inner levels.
std::vector<LabeledIdempotent> build_all_idempotents(const AlgebraCtx& ctx);

}  // namespace sl2idem

#endif  // SL2IDEM_IDEM_HPP
