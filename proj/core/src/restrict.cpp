#include "qtchar/restrict.hpp"

#include <algorithm>
#include <charconv>

#include "qtchar/error.hpp"

namespace qtchar {

Weight parse_weight(const DynkinDiagram& d, std::string_view text) {
  Weight w;
  size_t pos = 0;
  while (true) {
    const size_t end = std::min(text.find(',', pos), text.size());
    const std::string_view item = text.substr(pos, end - pos);
    int v = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size() || v < 0) {
      throw InvalidInput("weight: bad coefficient '" + std::string(item) + "'");
    }
    w.push_back(v);
    if (end == text.size()) break;
    pos = end + 1;
  }
  if (static_cast<int>(w.size()) != d.rank()) {
    throw InvalidInput("weight: expected " + std::to_string(d.rank()) + " coefficients for " + d.name() + ", got " +
                       std::to_string(w.size()));
  }
  return w;
}

std::string weight_to_string(const Weight& w) {
  std::string out;
  for (size_t k = 0; k < w.size(); ++k) {
    if (w[k] == 0) continue;
    if (!out.empty()) out += " + ";
    if (w[k] != 1) out += std::to_string(w[k]);
    out += "L" + std::to_string(k + 1);
  }
  return out.empty() ? "0" : out;
}

YMonomial canonical_P(const DynkinDiagram& d, const Weight& w, const HeightFunction& h) {
  if (static_cast<int>(w.size()) != d.rank()) throw InvalidInput("canonical_P: weight has the wrong length");
  YMonomial p;
  for (int k = 1; k <= d.rank(); ++k) {
    const int e = w[static_cast<size_t>(k - 1)];
    if (e < 0) throw InvalidInput("canonical_P: negative weight coefficient");
    if (e > 0) p *= YMonomial::Y(k, Spectral{0, h.at(static_cast<size_t>(k))}, e);
  }
  return p;
}

TPoly OrdinaryTCharacter::coefficient(const Weight& w) const {
  auto it = terms.find(w);
  return it == terms.end() ? TPoly{} : it->second.coefficient;
}

std::vector<Weight> OrdinaryTCharacter::dominant_weights() const {
  std::vector<std::pair<int, Weight>> found;
  for (const auto& [w, e] : terms) {
    if (std::all_of(w.begin(), w.end(), [](int x) { return x >= 0; })) found.emplace_back(e.depth, w);
  }
  std::sort(found.begin(), found.end());
  std::vector<Weight> out;
  for (auto& [depth, w] : found) out.push_back(std::move(w));
  return out;
}

namespace {

Weight collapse(const DynkinDiagram& d, const YMonomial& m) {
  Weight w(static_cast<size_t>(d.rank()), 0);
  for (const auto& [site, e] : m.factors()) w[static_cast<size_t>(site.vertex - 1)] += e;
  return w;
}

}  // namespace

OrdinaryTCharacter chi_t_ordinary(const DynkinDiagram& d, const YMonomial& p, FundamentalCache& cache) {
  const QCharacter chi = tilde(standard_qchar(d, p, cache));
  OrdinaryTCharacter out;
  out.top = collapse(d, p);
  for (const auto& [m, c] : chi.terms()) {
    auto v = factor_ratio(d, m, p);
    if (!v) throw NotComparable(m.to_string() + " is not <= " + p.to_string());
    auto [it, inserted] = out.terms.try_emplace(collapse(d, m), OrdinaryTCharacter::Entry{c, total_degree(*v)});
    if (!inserted) it->second.coefficient += c;
  }
  if (out.coefficient(out.top) != TPoly(1)) {
    throw InconsistencyError("chi_t_ordinary: top weight coefficient is " + out.coefficient(out.top).to_string());
  }
  return out;
}

TPoly::Coeff weight_multiplicity(const DynkinDiagram& d, const Weight& w, const Weight& w2,
                                 const HeightFunction& h, FundamentalCache& cache) {
  return chi_t_ordinary(d, canonical_P(d, w, h), cache).coefficient(w2).constant_term();
}

std::vector<BranchingRow> branching(const DynkinDiagram& d, const Weight& w, const HeightFunction& h,
                                    FundamentalCache& cache) {
  const OrdinaryTCharacter top = chi_t_ordinary(d, canonical_P(d, w, h), cache);
  const std::vector<Weight> candidates = top.dominant_weights();

  // Column w' of the c(0) matrix is read off the simple-candidate character of w'.
  std::map<Weight, OrdinaryTCharacter> lower;
  for (const auto& c : candidates) {
    if (c != w) lower.emplace(c, chi_t_ordinary(d, canonical_P(d, c, h), cache));
  }
  auto c0 = [&](const Weight& row, const Weight& col) -> TPoly::Coeff {
    const OrdinaryTCharacter& chi = col == w ? top : lower.at(col);
    return chi.coefficient(row).constant_term();
  };

  std::vector<BranchingRow> rows;
  for (const auto& row : candidates) {
    if (c0(row, row) != 1) {
      throw InconsistencyError("branching: diagonal entry at " + weight_to_string(row) + " is not 1");
    }
    TPoly::Coeff z = top.coefficient(row).eval_at_one();
    for (const auto& prev : rows) z -= c0(row, prev.weight) * prev.multiplicity;
    if (z < 0) {
      throw InconsistencyError("branching: negative multiplicity " + std::to_string(z) + " at " +
                               weight_to_string(row));
    }
    rows.push_back({row, top.coefficient(row), z});
  }
  return rows;
}

}  // namespace qtchar
