#pragma once

#include <string>

#include <json.hpp>

#include "vex/gamma.hpp"
#include "vex/schubert.hpp"
#include "vex/triples.hpp"
#include "vex/verify.hpp"

namespace vex {

enum class Format { Json, Latex, Plain };

/// "json", "latex" or "plain"; throws ParseError.
Format parse_format(const std::string& s);

/// Q-basis terms as [{"q": [λ], "coeff": {"num": "...", "log2den": k}, "mono": {"x1": e}}].
nlohmann::json terms_to_json(const GammaElement& e);
/// Inverse of terms_to_json; throws ParseError.
GammaElement terms_from_json(const nlohmann::json& j);

nlohmann::json triple_to_json(const Triple& t);
nlohmann::json report_to_json(const Report& r);

/// "x1^2*y3 - 1/2*x2" style, or LaTeX.
std::string render_polynomial(const Polynomial& p, Format f);
/// Sum of basis terms; P basis gives P_λ symbols.
std::string render_gamma(const GammaElement& e, Basis basis, Format f);
/// Natural basis for the type: Q for C, P for B and D, plain polynomial for A.
std::string render_schubert(const SchubertPolynomial& s, Format f);

}  // namespace vex
