#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "quinfield/poly.hpp"
#include "quinfield/quadratic.hpp"

namespace quinfield {

/// "c0 + c1*x + c2*x^2 + ..." in ascending degree; zero terms omitted.
std::string to_text(const PolyQ& f);
/// Accepts any order of terms such as "3/2*x^2 - x + 1" (x or X). Repeated
/// powers are summed. Throws ParseError naming the offending token.
PolyQ parse_poly(std::string_view text);

/// JSON array of coefficient strings, index = degree.
nlohmann::json to_json(const PolyQ& f);
PolyQ poly_from_json(const nlohmann::json& j);

std::string to_string(const QuadNum& x);
std::string to_text(const PolyQuad& f);

}  // namespace quinfield
