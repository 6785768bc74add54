#include "sl2idem/element_io.hpp"

#include <sstream>
#include <stdexcept>

namespace sl2idem {

nlohmann::json element_to_json(const HyperElem& u) {
  nlohmann::json doc;
  doc["p"] = u.ctx().p();
  doc["r"] = u.ctx().r();
  doc["rprime"] = u.ctx().rprime();
  auto terms = nlohmann::json::array();
  for (const auto& [key, f] : u.terms()) {
    nlohmann::json t;
    t["yexp"] = key.yexp;
    t["xexp"] = key.xexp;
    t["h_eval"] = std::vector<Word>(f.values().begin(), f.values().end());
    terms.push_back(std::move(t));
  }
  doc["terms"] = std::move(terms);
  return doc;
}

HyperElem element_from_json(const nlohmann::json& doc) {
  try {
    const AlgebraCtx ctx =
        AlgebraCtx::make(doc.at("p").get<Word>(), doc.at("r").get<Word>(), doc.at("rprime").get<Word>());
    HyperElem::TermMap terms;
    const auto& arr = doc.at("terms");
    if (!arr.is_array()) throw std::invalid_argument("\"terms\" must be an array");
    TermKey prev{};
    bool first = true;
    for (const auto& t : arr) {
      TermKey key{t.at("yexp").get<Word>(), t.at("xexp").get<Word>()};
      if (!first && !(prev < key)) throw std::invalid_argument("terms must be sorted by (yexp, xexp) without repeats");
      first = false;
      prev = key;
      auto vals = t.at("h_eval").get<std::vector<Word>>();
      WeightFn f(std::move(vals));
      if (f.is_zero()) throw std::invalid_argument("stored weight function is identically zero");
      terms.emplace(key, std::move(f));
    }
    return HyperElem(ctx, std::move(terms));
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed element JSON: ") + e.what());
  } catch (const std::out_of_range& e) {
    throw std::invalid_argument(std::string("malformed element JSON: ") + e.what());
  }
}

std::string element_to_json_string(const HyperElem& u) { return element_to_json(u).dump(); }

HyperElem element_from_json_string(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed element JSON: ") + e.what());
  }
  return element_from_json(doc);
}

namespace {

std::string format_torus(const WeightFn& f, const AlgebraCtx& ctx) {
  const auto c = weightfn_to_coeffs(f, ctx);
  std::ostringstream out;
  bool first = true;
  for (std::size_t n = 0; n < c.size(); ++n) {
    if (c[n] == 0) continue;
    if (!first) out << " + ";
    first = false;
    if (n == 0) {
      out << c[n];
    } else {
      if (c[n] != 1) out << c[n] << "*";
      out << "C(H," << n << ")";
    }
  }
  return out.str();
}

}  // namespace

std::string format_pbw(const HyperElem& u) {
  if (u.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [key, f] : u.terms()) {
    if (!first) out << " + ";
    first = false;
    if (key.yexp) out << "Y^(" << key.yexp << ") ";
    out << "[" << format_torus(f, u.ctx()) << "]";
    if (key.xexp) out << " X^(" << key.xexp << ")";
  }
  return out.str();
}

}  // namespace sl2idem
