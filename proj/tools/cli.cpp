#include "cli.hpp"

#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qtchar/error.hpp"
#include "qtchar/io.hpp"
#include "qtchar/kl.hpp"
#include "qtchar/restrict.hpp"
#include "qtchar/store.hpp"
#include "qtchar/tensor.hpp"

namespace qtchar::cli {

namespace {

using nlohmann::json;

struct Options {
  std::string type;
  std::string format = "text";
  std::string cache_dir;
  bool no_cache = false;
  std::size_t max_monomials = ExpandLimits{}.max_monomials;

  int node = 0;
  int step = 0;
  std::string drinfeld;
  std::string weight;
  std::string orientation;
  std::string edges = "ratio";
};

class Session {
 public:
  explicit Session(const Options& o)
      : diagram_(DynkinDiagram::parse(o.type)),
        cache_(ExpandLimits{o.max_monomials},
               o.no_cache ? nullptr
                          : std::make_shared<DiskStore>(o.cache_dir.empty() ? DiskStore::default_dir()
                                                                             : std::filesystem::path(o.cache_dir))) {}

  const DynkinDiagram& diagram() const { return diagram_; }
  FundamentalCache& cache() { return cache_; }

 private:
  DynkinDiagram diagram_;
  FundamentalCache cache_;
};

EdgeRule edge_rule(const Options& o) { return o.edges == "string" ? EdgeRule::String : EdgeRule::Ratio; }

void render_character(const QCharacter& chi, const Options& o, std::ostream& out) {
  const std::string& format = o.format;
  if (format == "json") {
    out << character_to_json(chi) << '\n';
  } else if (format == "dot") {
    out << graph_to_dot(graph_of(chi, edge_rule(o)), spans_several_orbits(chi));
  } else {
    out << character_to_text(chi);
  }
}

json poly_json(const TPoly& p) { return json::parse(tpoly_to_json(p)); }

json matrix_json(const PolyMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.size(); ++j) row.push_back(poly_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

void cmd_fundamental(Session& s, const Options& o, std::ostream& out) {
  s.diagram().check_vertex(o.node);
  render_character(s.cache().at(s.diagram(), o.node, Spectral{0, o.step}), o, out);
}

void cmd_standard(Session& s, const Options& o, std::ostream& out) {
  render_character(standard_qchar(s.diagram(), parse_drinfeld(s.diagram(), o.drinfeld), s.cache()), o, out);
}

void cmd_graph(Session& s, const Options& o, std::ostream& out) {
  QCharacter chi = o.drinfeld.empty() ? (s.diagram().check_vertex(o.node),
                                         s.cache().at(s.diagram(), o.node, Spectral{0, o.step}))
                                      : standard_qchar(s.diagram(), parse_drinfeld(s.diagram(), o.drinfeld), s.cache());
  out << graph_to_dot(graph_of(chi, edge_rule(o)), spans_several_orbits(chi));
}

void cmd_multiplicity(Session& s, const Options& o, std::ostream& out) {
  const auto t = kl_tables(s.diagram(), parse_drinfeld(s.diagram(), o.drinfeld), s.cache());
  const std::size_t top = t.poset.top();
  if (o.format == "json") {
    json elements = json::array();
    for (const auto& m : t.poset.elements) elements.push_back(drinfeld_to_string(m));
    json mult = json::array();
    for (std::size_t q = 0; q < t.poset.elements.size(); ++q) mult.push_back(t.z(q, top).eval_at_one());
    out << json{{"type", s.diagram().name()},
                {"elements", elements},
                {"c", matrix_json(t.c)},
                {"u", matrix_json(t.u)},
                {"z", matrix_json(t.z)},
                {"multiplicity", mult}}
               .dump()
        << '\n';
    return;
  }
  out << "Q\tZ_QP(t)\t[M_P:L_Q]\n";
  for (std::size_t q = t.poset.elements.size(); q-- > 0;) {
    const TPoly& z = t.z(q, top);
    if (z.is_zero()) continue;
    out << drinfeld_to_string(t.poset.elements[q]) << '\t' << z.to_string() << '\t' << z.eval_at_one() << '\n';
  }
}

void cmd_simple(Session& s, const Options& o, std::ostream& out) {
  render_character(simple_qchar_t1(s.diagram(), parse_drinfeld(s.diagram(), o.drinfeld), s.cache()), o, out);
}

void cmd_branch(Session& s, const Options& o, std::ostream& out) {
  const DynkinDiagram& d = s.diagram();
  const Orientation orient = o.orientation.empty() ? Orientation::ascending(d) : Orientation::parse(d, o.orientation);
  const Weight w = parse_weight(d, o.weight);
  const auto rows = branching(d, w, heights(d, orient), s.cache());
  if (o.format == "json") {
    json j = json::array();
    for (const auto& r : rows) j.push_back({{"weight", r.weight}, {"c", poly_json(r.c)}, {"z", r.multiplicity}});
    out << j.dump() << '\n';
    return;
  }
  out << "weight\tc(t)\tZ\n";
  for (const auto& r : rows) {
    out << weight_to_string(r.weight) << '\t' << r.c.to_string() << '\t' << r.multiplicity << '\n';
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"t-analogues of q-characters of quantum loop algebras of ADE type", "qtchar"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--type", o.type, "Dynkin type, e.g. A3, D4, E6")->required();
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json", "dot"}));
  app.add_option("--cache-dir", o.cache_dir, "Directory of the fundamental-character cache");
  app.add_flag("--no-cache", o.no_cache, "Do not read or write the on-disk cache");
  app.add_option("--max-monomials", o.max_monomials, "Abort any expansion larger than this")
      ->check(CLI::PositiveNumber);
  app.add_option("--edges", o.edges, "Graph edges: every A^-1 step (ratio) or string steps only")
      ->check(CLI::IsMember({"ratio", "string"}));
  for (CLI::Option* opt : app.get_options()) opt->configurable(false);

  auto* fundamental = app.add_subcommand("fundamental", "Character of an l-fundamental module");
  fundamental->add_option("--node", o.node, "Vertex k")->required();
  fundamental->add_option("--step", o.step, "Spectral parameter eps^step");

  auto* standard = app.add_subcommand("standard", "Character of a standard module");
  standard->add_option("drinfeld", o.drinfeld, "Drinfeld polynomial, e.g. \"2:1^2 1:0\"")->required();

  auto* graph = app.add_subcommand("graph", "Colored graph (DOT) of a fundamental or standard character");
  auto* gnode = graph->add_option("--node", o.node, "Vertex k");
  graph->add_option("--step", o.step, "Spectral parameter eps^step");
  auto* gspec = graph->add_option("drinfeld", o.drinfeld, "Drinfeld polynomial");
  gnode->excludes(gspec);
  graph->require_option(1);

  auto* mult = app.add_subcommand("multiplicity", "Composition multiplicities of a standard module");
  mult->add_option("drinfeld", o.drinfeld, "Drinfeld polynomial")->required();

  auto* simple = app.add_subcommand("simple", "q-character of a simple module");
  simple->add_option("drinfeld", o.drinfeld, "Drinfeld polynomial")->required();

  auto* branch = app.add_subcommand("branch", "Restriction to the finite-type algebra");
  branch->add_option("weight", o.weight, "Dominant weight \"w1,...,wn\"")->required();
  branch->add_option("--orientation", o.orientation, "Edge orientation, e.g. \"1>2,3>2\"");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    Session session(o);
    std::ostringstream buf;
    if (fundamental->parsed()) cmd_fundamental(session, o, buf);
    if (standard->parsed()) cmd_standard(session, o, buf);
    if (graph->parsed()) cmd_graph(session, o, buf);
    if (mult->parsed()) cmd_multiplicity(session, o, buf);
    if (simple->parsed()) cmd_simple(session, o, buf);
    if (branch->parsed()) cmd_branch(session, o, buf);
    out << buf.str();
    return kOk;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const CapExceeded& e) {
    err << "limit exceeded: " << e.what() << '\n';
    return kInconsistent;
  } catch (const InconsistencyError& e) {
    err << "internal inconsistency: " << e.what() << '\n';
    return kInconsistent;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInconsistent;
  }
}

}  // namespace qtchar::cli
