#include <charconv>
#include <stdexcept>
#include <string>
#include <string_view>

#include "sl2idem/idem.hpp"

namespace sl2idem {

namespace {

Word parse_word(std::string_view s, const std::string& whole) {
  Word v = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (s.empty() || ec != std::errc() || ptr != end)
    throw std::invalid_argument("malformed label '" + whole + "': expected a number, got '" + std::string(s) + "'");
  return v;
}

}  // namespace

std::string format_label(const TupleLabel& label) {
  std::string out;
  for (std::size_t i = 0; i < label.pairs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(label.pairs[i].a) + ':' + std::to_string(label.pairs[i].two_j);
  }
  if (label.a_prime) out += ';' + std::to_string(*label.a_prime);
  return out;
}

TupleLabel parse_label(const std::string& text, const AlgebraCtx& ctx) {
  TupleLabel out;
  std::string_view body = text;
  if (const auto semi = body.find(';'); semi != std::string_view::npos) {
    out.a_prime = parse_word(body.substr(semi + 1), text);
    body = body.substr(0, semi);
  }
  while (true) {
    const auto comma = body.find(',');
    const std::string_view item = body.substr(0, comma);
    const auto colon = item.find(':');
    if (colon == std::string_view::npos)
      throw std::invalid_argument("malformed label '" + text + "': pair '" + std::string(item) + "' lacks ':'");
    const Word a = parse_word(item.substr(0, colon), text);
    const Word t = parse_word(item.substr(colon + 1), text);
    out.pairs.push_back(make_pair_aj(a, t, ctx.p()));
    if (comma == std::string_view::npos) break;
    body = body.substr(comma + 1);
  }
  if (out.pairs.size() != ctx.r())
    throw std::invalid_argument("label '" + text + "' has " + std::to_string(out.pairs.size()) +
                                " pairs, expected r=" + std::to_string(ctx.r()));
  const Word tail = ctx.weight_count() / ctx.exponent_bound();
  if (ctx.rprime() > ctx.r()) {
    if (!out.a_prime) throw std::invalid_argument("label '" + text + "' needs ';aprime' since r' > r");
    if (*out.a_prime >= tail)
      throw std::invalid_argument("label '" + text + "': a' must be below " + std::to_string(tail));
  } else if (out.a_prime) {
    throw std::invalid_argument("label '" + text + "' carries a' but r' == r");
  }
  return out;
}

}  // namespace sl2idem
