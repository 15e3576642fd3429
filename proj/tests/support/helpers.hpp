#pragma once

#include "qtchar/qcharacter.hpp"

namespace qtchar::testing {

inline TPoly T(int e, TPoly::Coeff c = 1) { return TPoly::monomial(e, c); }

inline YMonomial M(const std::string& text) { return YMonomial::parse(text); }

inline DynkinDiagram type(std::string_view name) { return DynkinDiagram::parse(name); }

}  // namespace qtchar::testing
