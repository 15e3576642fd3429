#include "qtchar/fm.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <unordered_map>

#include "qtchar/error.hpp"

namespace qtchar {

namespace {

struct StringTerm {
  YMonomial monomial;
  TPoly weight;
  int depth = 0;  // sum of r_i
};

std::vector<StringTerm> expand_strings(const DynkinDiagram& d, const YMonomial& m, int k) {
  const auto anchors = m.positive_part(k);
  if (anchors.empty()) {
    throw InvalidInput("k_string_expansion: " + m.to_string() + " has no positive colour-" +
                       std::to_string(k) + " exponent");
  }
  std::vector<YMonomial> lowering;
  lowering.reserve(anchors.size());
  for (const auto& [site, n] : anchors) lowering.push_back(a_monomial(d, k, site.at.shifted(1)).inverse());

  std::vector<StringTerm> out;
  std::vector<int> r(anchors.size(), 0);
  while (true) {
    StringTerm term{m, TPoly(1), 0};
    for (size_t i = 0; i < r.size(); ++i) {
      if (r[i] == 0) continue;
      term.monomial *= lowering[i].pow(r[i]);
      term.weight *= string_weight(anchors[i].second, r[i]);
      term.depth += r[i];
    }
    out.push_back(std::move(term));
    size_t i = 0;
    while (i < r.size() && r[i] == anchors[i].second) r[i++] = 0;
    if (i == r.size()) break;
    ++r[i];
  }
  return out;
}

}  // namespace

std::map<YMonomial, TPoly> k_string_expansion(const DynkinDiagram& d, const YMonomial& m, int k) {
  d.check_vertex(k);
  std::map<YMonomial, TPoly> out;
  for (auto& term : expand_strings(d, m, k)) out[term.monomial] += term.weight;
  return out;
}

QCharacter fm_expand(const DynkinDiagram& d, const YMonomial& highest, const ExpandLimits& limits) {
  if (!highest.is_dominant()) {
    throw InvalidInput("fm_expand: " + highest.to_string() + " is not l-dominant");
  }
  for (const auto& [site, e] : highest.factors()) d.check_vertex(site.vertex);

  const size_t colors = static_cast<size_t>(d.rank());
  struct Entry {
    int depth = 0;
    std::vector<TPoly> explained;  // per colour, index k-1
  };
  std::unordered_map<YMonomial, Entry> table;
  std::set<std::pair<int, YMonomial>> pending;
  QCharacter::Terms modified;

  auto touch = [&](const YMonomial& m, int depth) -> Entry& {
    auto [it, inserted] = table.try_emplace(m);
    if (inserted) {
      if (table.size() > limits.max_monomials) {
        throw CapExceeded("fm_expand: more than " + std::to_string(limits.max_monomials) +
                          " monomials below " + highest.to_string());
      }
      it->second.depth = depth;
      it->second.explained.assign(colors, TPoly{});
      pending.emplace(depth, m);
    }
    return it->second;
  };
  touch(highest, 0);

  while (!pending.empty()) {
    const auto [depth, m] = *pending.begin();
    pending.erase(pending.begin());
    const std::vector<TPoly> explained = table.at(m).explained;

    TPoly coeff;
    if (m == highest) {
      coeff = TPoly(1);
    } else {
      int fixed_by = 0;
      for (int k = 1; k <= d.rank(); ++k) {
        if (!m.has_negative_at(k)) continue;
        const TPoly& e = explained[static_cast<size_t>(k - 1)];
        if (fixed_by == 0) {
          coeff = e;
          fixed_by = k;
        } else if (e != coeff) {
          throw InconsistencyError("fm_expand: colours " + std::to_string(fixed_by) + " and " +
                                   std::to_string(k) + " disagree at " + m.to_string() + " (" +
                                   coeff.to_string() + " vs " + e.to_string() + ")");
        }
      }
      if (fixed_by == 0) {
        throw InconsistencyError("fm_expand: second l-dominant monomial " + m.to_string() + " below " +
                                 highest.to_string() + "; use the standard-module product instead");
      }
    }

    for (int k = 1; k <= d.rank(); ++k) {
      if (m.has_negative_at(k)) continue;
      const TPoly rho = coeff - explained[static_cast<size_t>(k - 1)];
      if (rho.is_zero()) continue;
      if (rho.min_exponent() < 0) {
        throw InconsistencyError("fm_expand: colour-" + std::to_string(k) + " remainder " +
                                 rho.to_string() + " at " + m.to_string() + " is not in Z[t]");
      }
      if (!m.has_positive_at(k)) continue;
      for (auto& term : expand_strings(d, m, k)) {
        Entry& target = touch(term.monomial, depth + term.depth);
        target.explained[static_cast<size_t>(k - 1)] += rho * term.weight;
      }
    }
    modified.emplace(m, std::move(coeff));
  }

  QCharacter chi(d, highest, {});
  for (const auto& [m, c] : modified) {
    if (c.is_zero()) continue;
    if (c.min_exponent() != 0) {
      throw InconsistencyError("fm_expand: modified coefficient " + c.to_string() + " at " +
                               m.to_string() + " has zero constant term");
    }
    chi.add(m, c.shifted(-d_self(d, m, highest)));
  }
  return chi;
}

namespace {

// If ratio == A_{k,a}^{-1} for some (k, a), returns it.
std::optional<std::pair<int, Spectral>> as_lowering(const DynkinDiagram& d, const YMonomial& ratio) {
  std::vector<YMonomial::Factor> neg;
  for (const auto& f : ratio.factors()) {
    if (f.second < 0) neg.push_back(f);
  }
  if (neg.size() != 2) return std::nullopt;
  const auto& [s1, e1] = neg[0];
  const auto& [s2, e2] = neg[1];
  if (e1 != -1 || e2 != -1 || s1.vertex != s2.vertex || s1.at.orbit != s2.at.orbit ||
      s2.at.step - s1.at.step != 2) {
    return std::nullopt;
  }
  const Spectral a = s1.at.shifted(1);
  if (ratio != a_monomial(d, s1.vertex, a).inverse()) return std::nullopt;
  return std::make_pair(s1.vertex, a);
}

}  // namespace

ColoredGraph graph_of(const QCharacter& chi, EdgeRule rule) {
  const DynkinDiagram& d = chi.diagram();
  ColoredGraph g;
  for (const auto& [m, c] : chi.terms()) {
    auto v = factor_ratio(d, m, chi.highest());
    if (!v) throw NotComparable(m.to_string() + " is not <= " + chi.highest().to_string());
    g.vertices.push_back({m, c, total_degree(*v)});
  }
  std::sort(g.vertices.begin(), g.vertices.end(), [](const auto& a, const auto& b) {
    return std::tie(a.depth, a.monomial) < std::tie(b.depth, b.monomial);
  });

  // Edges only join consecutive depths.
  std::map<int, std::vector<size_t>> by_depth;
  for (size_t i = 0; i < g.vertices.size(); ++i) by_depth[g.vertices[i].depth].push_back(i);
  for (const auto& [depth, sources] : by_depth) {
    auto next = by_depth.find(depth + 1);
    if (next == by_depth.end()) continue;
    for (size_t i : sources) {
      for (size_t j : next->second) {
        const YMonomial& from = g.vertices[i].monomial;
        auto label = as_lowering(d, g.vertices[j].monomial / from);
        if (!label) continue;
        if (rule == EdgeRule::String && from.exponent(Site{label->first, label->second.shifted(-1)}) <= 0) continue;
        g.edges.push_back({i, j, label->first, label->second});
      }
    }
  }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

FundamentalCache::FundamentalCache(ExpandLimits limits, std::shared_ptr<FundamentalStore> store)
    : limits_(limits), store_(std::move(store)) {}

std::shared_ptr<const QCharacter> FundamentalCache::base(const DynkinDiagram& d, int node) {
  d.check_vertex(node);
  const auto key = std::make_pair(d.name(), node);
  {
    std::shared_lock lock(mutex_);
    auto it = entries_.find(key);
    if (it != entries_.end()) return it->second;
  }

  const YMonomial top = YMonomial::Y(node, Spectral{0, 0});
  std::shared_ptr<const QCharacter> value;
  if (store_) {
    if (auto loaded = store_->load(d, node)) {
      if (!(loaded->diagram() == d) || loaded->highest() != top) {
        throw InconsistencyError("cached character for " + d.name() + " node " +
                                 std::to_string(node) + " has the wrong highest monomial");
      }
      loaded->check_invariants();
      value = std::make_shared<const QCharacter>(std::move(*loaded));
      ++store_hits_;
    }
  }
  if (!value) {
    value = std::make_shared<const QCharacter>(fm_expand(d, top, limits_));
    ++expansions_;
    if (store_) store_->save(d, node, *value);
  }

  std::unique_lock lock(mutex_);
  auto [it, inserted] = entries_.try_emplace(key, value);
  return it->second;
}

QCharacter FundamentalCache::at(const DynkinDiagram& d, int node, Spectral a) {
  const auto chi = base(d, node);
  if (a == Spectral{0, 0}) return *chi;
  return chi->relocated([a](Spectral s) { return Spectral{a.orbit, s.step + a.step}; });
}

std::size_t FundamentalCache::expansions() const { return expansions_.load(); }
std::size_t FundamentalCache::store_hits() const { return store_hits_.load(); }

}  // namespace qtchar
