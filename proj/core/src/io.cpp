#include "qtchar/io.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include <json.hpp>

#include "qtchar/error.hpp"

namespace qtchar {

using nlohmann::json;

namespace {

json monomial_json(const YMonomial& m) {
  json out = json::array();
  for (const auto& [s, e] : m.factors()) out.push_back({s.vertex, s.at.orbit, s.at.step, e});
  return out;
}

YMonomial monomial_from(const DynkinDiagram& d, const json& j) {
  if (!j.is_array()) throw InvalidInput("monomial must be a JSON array");
  ExponentMap exps;
  for (const auto& f : j) {
    if (!f.is_array() || f.size() != 4) throw InvalidInput("monomial factor must be [node, orbit, step, exponent]");
    const int k = f[0].get<int>();
    d.check_vertex(k);
    const int e = f[3].get<int>();
    if (e == 0) throw InvalidInput("monomial factor with exponent 0");
    if (!exps.emplace(Site{k, Spectral{f[1].get<int>(), f[2].get<int>()}}, e).second) {
      throw InvalidInput("monomial factor repeated");
    }
  }
  return YMonomial::from_map(exps);
}

json tpoly_json(const TPoly& p) {
  json out = json::object();
  for (const auto& [e, c] : p.terms()) out[std::to_string(e)] = c;
  return out;
}

TPoly tpoly_from(const json& j) {
  if (!j.is_object()) throw InvalidInput("polynomial must be a JSON object");
  std::map<int, TPoly::Coeff> terms;
  for (const auto& [key, value] : j.items()) {
    int e = 0;
    auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), e);
    if (ec != std::errc{} || ptr != key.data() + key.size()) throw InvalidInput("bad exponent '" + key + "'");
    if (!value.is_number_integer()) throw InvalidInput("coefficient of t^" + key + " is not an integer");
    if (!terms.emplace(e, value.get<TPoly::Coeff>()).second) throw InvalidInput("repeated exponent '" + key + "'");
  }
  return TPoly::from_terms(terms);
}

template <class F>
auto json_guard(F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("JSON: ") + e.what());
  }
}

}  // namespace

std::string tpoly_to_json(const TPoly& p) { return tpoly_json(p).dump(); }

TPoly tpoly_from_json(std::string_view text) {
  return json_guard([&] { return tpoly_from(json::parse(text)); });
}

std::vector<YMonomial> display_order(const QCharacter& chi) {
  std::vector<std::pair<int, YMonomial>> keyed;
  keyed.reserve(chi.size());
  for (const auto& [m, c] : chi.terms()) {
    auto v = factor_ratio(chi.diagram(), m, chi.highest());
    keyed.emplace_back(v ? total_degree(*v) : -1, m);
  }
  std::sort(keyed.begin(), keyed.end());
  std::vector<YMonomial> out;
  out.reserve(keyed.size());
  for (auto& [depth, m] : keyed) out.push_back(std::move(m));
  return out;
}

bool spans_several_orbits(const QCharacter& chi) {
  std::set<int> orbits;
  for (const auto& [m, c] : chi.terms()) {
    for (int o : m.orbits()) orbits.insert(o);
  }
  return orbits.size() > 1;
}

std::string character_to_text(const QCharacter& chi) {
  const bool orbits = spans_several_orbits(chi);
  std::string out;
  for (const auto& m : display_order(chi)) {
    const TPoly c = chi.coefficient(m);
    if (c != TPoly(1)) out += "(" + c.to_string() + ") ";
    out += m.to_string(orbits) + "\n";
  }
  return out;
}

std::string character_to_json(const QCharacter& chi) {
  json terms = json::array();
  for (const auto& [m, c] : chi.terms()) terms.push_back({{"monomial", monomial_json(m)}, {"coefficient", tpoly_json(c)}});
  json out = {{"type", chi.diagram().name()}, {"highest", monomial_json(chi.highest())}, {"terms", std::move(terms)}};
  return out.dump();
}

QCharacter character_from_json(std::string_view text) {
  return json_guard([&] {
    const json j = json::parse(text);
    const DynkinDiagram d = DynkinDiagram::parse(j.at("type").get<std::string>());
    QCharacter::Terms terms;
    for (const auto& t : j.at("terms")) {
      YMonomial m = monomial_from(d, t.at("monomial"));
      TPoly c = tpoly_from(t.at("coefficient"));
      if (c.is_zero()) throw InvalidInput("zero coefficient at " + m.to_string());
      if (!terms.emplace(std::move(m), std::move(c)).second) throw InvalidInput("repeated monomial");
    }
    return QCharacter(d, monomial_from(d, j.at("highest")), std::move(terms));
  });
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out;
}

}  // namespace

std::string graph_to_dot(const ColoredGraph& g, bool show_orbit) {
  std::ostringstream os;
  os << "digraph qchar {\n";
  for (size_t i = 0; i < g.vertices.size(); ++i) {
    const auto& v = g.vertices[i];
    std::string label = v.monomial.to_string(show_orbit);
    if (v.coefficient != TPoly(1)) label = "(" + v.coefficient.to_string() + ") " + label;
    os << "  v" << i << " [label=\"" << dot_escape(label) << "\"];\n";
  }
  for (const auto& e : g.edges) {
    os << "  v" << e.from << " -> v" << e.to << " [label=\"" << e.color << ",";
    if (show_orbit) os << e.at.orbit << ":";
    os << "e^" << e.at.step << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

namespace {

int parse_int(std::string_view s, std::string_view what, std::string_view atom) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw InvalidInput("Drinfeld atom '" + std::string(atom) + "': bad " + std::string(what));
  }
  return v;
}

YMonomial add_factor(const DynkinDiagram& d, YMonomial p, int node, int orbit, int step, int mult) {
  d.check_vertex(node);
  if (mult < 1) throw InvalidInput("Drinfeld factor multiplicity must be positive");
  return p * YMonomial::Y(node, Spectral{orbit, step}, mult);
}

}  // namespace

YMonomial parse_drinfeld(const DynkinDiagram& d, std::string_view text) {
  const auto first = text.find_first_not_of(" \t\n");
  if (first != std::string_view::npos && text[first] == '[') {
    return json_guard([&] {
      YMonomial p;
      for (const auto& f : json::parse(text)) {
        p = add_factor(d, std::move(p), f.at("node").get<int>(), f.value("orbit", 0), f.at("step").get<int>(),
                       f.value("mult", 1));
      }
      return p;
    });
  }
  YMonomial p;
  std::istringstream in{std::string(text)};
  std::string atom;
  while (in >> atom) {
    if (atom == "1" && p.is_one() && (in >> std::ws).eof()) break;
    std::string_view rest = atom;
    int orbit = 0;
    if (auto slash = rest.find('/'); slash != std::string_view::npos) {
      orbit = parse_int(rest.substr(0, slash), "orbit", atom);
      rest.remove_prefix(slash + 1);
    }
    const auto colon = rest.find(':');
    if (colon == std::string_view::npos) throw InvalidInput("Drinfeld atom '" + atom + "': expected k:n");
    const int node = parse_int(rest.substr(0, colon), "node", atom);
    rest.remove_prefix(colon + 1);
    int mult = 1;
    if (auto caret = rest.find('^'); caret != std::string_view::npos) {
      mult = parse_int(rest.substr(caret + 1), "multiplicity", atom);
      rest = rest.substr(0, caret);
    }
    p = add_factor(d, std::move(p), node, orbit, parse_int(rest, "step", atom), mult);
  }
  return p;
}

std::string drinfeld_to_string(const YMonomial& p) {
  if (!p.is_dominant()) throw InvalidInput(p.to_string() + " is not l-dominant");
  if (p.is_one()) return "1";
  const bool orbits = p.orbits().size() > 1;
  std::string out;
  for (const auto& [s, e] : p.factors()) {
    if (!out.empty()) out += ' ';
    if (orbits) out += std::to_string(s.at.orbit) + "/";
    out += std::to_string(s.vertex) + ":" + std::to_string(s.at.step);
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

}  // namespace qtchar
