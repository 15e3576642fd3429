#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qtchar/fm.hpp"

namespace qtchar {

/// {"-1":1,"1":1}; "{}" for zero.
std::string tpoly_to_json(const TPoly& p);
TPoly tpoly_from_json(std::string_view text);

/// Monomials of chi in display order: by distance below the highest
/// monomial, then by monomial.
std::vector<YMonomial> display_order(const QCharacter& chi);

/// True when the monomials of chi span more than one orbit.
bool spans_several_orbits(const QCharacter& chi);

/// One line per monomial in display order, "(coefficient) monomial", the
/// coefficient omitted when it is 1.
std::string character_to_text(const QCharacter& chi);

/// {"type":"A3","highest":[[k,o,n,e],...],"terms":[{"monomial":[...],"coefficient":{...}},...]}
std::string character_to_json(const QCharacter& chi);
QCharacter character_from_json(std::string_view text);

/// Edge labels read "k,e^n"; vertices carry the monomial and, when not 1,
/// the coefficient.
std::string graph_to_dot(const ColoredGraph& g, bool show_orbit = false);

/// Parses a Drinfeld polynomial given either as atoms "k:n^m" separated by
/// spaces, each optionally prefixed "o/" for orbit o, or as a JSON list of
/// {"node":k,"orbit":o,"step":n,"mult":m} (orbit and mult default to 0 and 1).
/// Returns the l-dominant monomial prod Y_{k, o:n}^m.
YMonomial parse_drinfeld(const DynkinDiagram& d, std::string_view text);
/// Compact form of an l-dominant monomial; orbit prefixes appear only when
/// it spans several orbits.
std::string drinfeld_to_string(const YMonomial& p);

}  // namespace qtchar
