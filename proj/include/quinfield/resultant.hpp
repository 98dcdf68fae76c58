#pragma once

#include "quinfield/poly.hpp"

namespace quinfield {

/// Res_X(f, g) by the subresultant PRS on primitive integer parts.
/// Throws std::domain_error if either input is zero.
Rational resultant(const PolyQ& f, const PolyQ& g);

/// (-1)^(n(n-1)/2) Res(f, f') / lc(f); requires deg f >= 2.
Rational discriminant(const PolyQ& f);

}  // namespace quinfield
