#ifndef SL2IDEM_ELEMENT_IO_HPP
#define SL2IDEM_ELEMENT_IO_HPP

#include <string>

#include <nlohmann/json.hpp>

#include "sl2idem/hyperalg.hpp"

namespace sl2idem {

// {"p", "r", "rprime", "terms": [{"yexp", "xexp", "h_eval": [...]}]},
// terms in ascending (yexp, xexp) order.
nlohmann::json element_to_json(const HyperElem& u);

// Throws std::invalid_argument on a malformed document.
HyperElem element_from_json(const nlohmann::json& doc);

std::string element_to_json_string(const HyperElem& u);
HyperElem element_from_json_string(const std::string& text);

/// Human-readable PBW form, torus parts written in the C(H, n) basis, e.g.
/// "Y^(1) [C(H,1)] X^(1) + [2 + C(H,2)]".
std::string format_pbw(const HyperElem& u);

}  // namespace sl2idem

#endif  // SL2IDEM_ELEMENT_IO_HPP
