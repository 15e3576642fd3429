#pragma once

#include <vector>

#include "qtchar/fm.hpp"

namespace qtchar {

/// One l-fundamental factor L(Lambda_node)_{s eps^step}.
struct FundamentalFactor {
  int node = 0;
  int step = 0;
  friend auto operator<=>(const FundamentalFactor&, const FundamentalFactor&) = default;
};

/// Fundamental factors sharing one eps^Z orbit, in tensor order (steps
/// nonincreasing).
struct OrbitGroup {
  int orbit = 0;
  std::vector<FundamentalFactor> factors;
  friend bool operator==(const OrbitGroup&, const OrbitGroup&) = default;
};

/// A standard module as an ordered tensor product of fundamentals, grouped by
/// orbit. Groups are sorted by orbit id.
struct StandardModuleSpec {
  std::vector<OrbitGroup> groups;

  YMonomial highest() const;
  friend bool operator==(const StandardModuleSpec&, const StandardModuleSpec&) = default;
};

/// One factor per unit of each exponent of p; within an orbit, steps descend
/// and equal steps are ordered by ascending vertex.
StandardModuleSpec normal_form(const DynkinDiagram& d, const YMonomial& p);

/// Twisted product of fundamental characters lying in one orbit, given in
/// tensor order. Each term of the result is a product of one monomial m_a per
/// factor with coefficient t^E prod a_a(t), where
/// E = sum_{a<b} ( d(m_b, P_b; m_a, P_a) - d(m_a, P_a; m_b, P_b) ).
///
/// The pair sum is linear in each argument's (u, v, w) data, so the product is
/// folded left to right: the accumulated prefix plays the role of a single
/// factor with highest monomial prod_{a<b} P_a.
QCharacter twisted_product(const std::vector<QCharacter>& factors);
QCharacter twisted_product(const DynkinDiagram& d, const OrbitGroup& group, FundamentalCache& cache);

/// Plain product of characters living in pairwise distinct orbits. The empty
/// product is the trivial character.
QCharacter cross_orbit_product(const DynkinDiagram& d, const std::vector<QCharacter>& chis);

/// chi_{q,t}(M_p) for the standard module with l-highest monomial p.
QCharacter standard_qchar(const DynkinDiagram& d, const YMonomial& p, FundamentalCache& cache);
QCharacter standard_qchar(const DynkinDiagram& d, const YMonomial& p);

}  // namespace qtchar
