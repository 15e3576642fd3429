#include "qtchar/tensor.hpp"

#include <algorithm>
#include <set>

#include "qtchar/error.hpp"

namespace qtchar {

YMonomial StandardModuleSpec::highest() const {
  YMonomial p;
  for (const auto& g : groups) {
    for (const auto& f : g.factors) p *= YMonomial::Y(f.node, Spectral{g.orbit, f.step});
  }
  return p;
}

StandardModuleSpec normal_form(const DynkinDiagram& d, const YMonomial& p) {
  if (!p.is_dominant()) throw InvalidInput("normal_form: " + p.to_string() + " is not l-dominant");
  std::map<int, std::vector<FundamentalFactor>> by_orbit;
  for (const auto& [site, e] : p.factors()) {
    d.check_vertex(site.vertex);
    for (int i = 0; i < e; ++i) by_orbit[site.at.orbit].push_back({site.vertex, site.at.step});
  }
  StandardModuleSpec spec;
  for (auto& [orbit, factors] : by_orbit) {
    std::stable_sort(factors.begin(), factors.end(), [](const auto& a, const auto& b) {
      if (a.step != b.step) return a.step > b.step;
      return a.node < b.node;
    });
    spec.groups.push_back({orbit, std::move(factors)});
  }
  return spec;
}

namespace {

Site single_site(const QCharacter& chi) {
  const auto& f = chi.highest().factors();
  if (f.size() != 1 || f.front().second != 1) {
    throw InvalidInput("twisted_product: factor " + chi.highest().to_string() +
                       " is not an l-fundamental highest monomial");
  }
  return f.front().first;
}

}  // namespace

QCharacter twisted_product(const std::vector<QCharacter>& factors) {
  if (factors.empty()) throw InvalidInput("twisted_product: no factors");
  const DynkinDiagram& d = factors.front().diagram();
  Site prev = single_site(factors.front());
  for (size_t i = 1; i < factors.size(); ++i) {
    if (!(factors[i].diagram() == d)) throw InvalidInput("twisted_product: factors of different types");
    const Site s = single_site(factors[i]);
    if (s.at.orbit != prev.at.orbit) throw InvalidInput("twisted_product: factors in different orbits");
    if (s.at.step > prev.at.step) {
      throw InvalidInput("twisted_product: steps must be nonincreasing, got " + std::to_string(prev.at.step) +
                         " before " + std::to_string(s.at.step));
    }
    prev = s;
  }

  QCharacter acc = factors.front();
  for (size_t i = 1; i < factors.size(); ++i) {
    const QCharacter& next = factors[i];
    std::vector<std::pair<const QCharacter::Terms::value_type*, UVW>> right;
    right.reserve(next.size());
    for (const auto& term : next.terms()) right.emplace_back(&term, uvw(d, term.first, next.highest()));

    QCharacter out(d, acc.highest() * next.highest(), {});
    for (const auto& [ma, ca] : acc.terms()) {
      const UVW left = uvw(d, ma, acc.highest());
      for (const auto& [term, r] : right) {
        const int e = d_pair(r, left) - d_pair(left, r);
        out.add(ma * term->first, (ca * term->second).shifted(e));
      }
    }
    acc = std::move(out);
  }
  return acc;
}

QCharacter twisted_product(const DynkinDiagram& d, const OrbitGroup& group, FundamentalCache& cache) {
  if (group.factors.empty()) return QCharacter::trivial(d);
  std::vector<QCharacter> chis;
  chis.reserve(group.factors.size());
  for (const auto& f : group.factors) chis.push_back(cache.at(d, f.node, Spectral{group.orbit, f.step}));
  return twisted_product(chis);
}

QCharacter cross_orbit_product(const DynkinDiagram& d, const std::vector<QCharacter>& chis) {
  QCharacter acc = QCharacter::trivial(d);
  std::set<int> seen;
  for (const auto& chi : chis) {
    for (const auto& [m, c] : chi.terms()) {
      for (int o : m.orbits()) {
        if (seen.contains(o)) {
          throw InvalidInput("cross_orbit_product: orbit " + std::to_string(o) + " occurs in two factors");
        }
      }
    }
    for (const auto& [m, c] : chi.terms()) {
      for (int o : m.orbits()) seen.insert(o);
    }
    acc = plain_product(acc, chi);
  }
  return acc;
}

QCharacter standard_qchar(const DynkinDiagram& d, const YMonomial& p, FundamentalCache& cache) {
  const auto spec = normal_form(d, p);
  std::vector<QCharacter> parts;
  parts.reserve(spec.groups.size());
  for (const auto& g : spec.groups) parts.push_back(twisted_product(d, g, cache));
  return cross_orbit_product(d, parts);
}

QCharacter standard_qchar(const DynkinDiagram& d, const YMonomial& p) {
  FundamentalCache cache;
  return standard_qchar(d, p, cache);
}

}  // namespace qtchar
