#pragma once

#include <compare>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "qtchar/cartan.hpp"

namespace qtchar {

/// A formal spectral parameter s_orbit * eps^step. Points in different
/// orbits are never equal and never related by a power of eps; eps itself is
/// never evaluated.
struct Spectral {
  int orbit = 0;
  int step = 0;

  Spectral shifted(int n) const { return {orbit, step + n}; }
  friend auto operator<=>(const Spectral&, const Spectral&) = default;
};

/// Index (k, a) of a variable Y_{k,a}. Ordered by (vertex, orbit, step).
struct Site {
  int vertex = 0;
  Spectral at;

  Site shifted(int n) const { return {vertex, at.shifted(n)}; }
  friend auto operator<=>(const Site&, const Site&) = default;
};

/// Finitely supported integer map over sites, zero values never stored.
using ExponentMap = std::map<Site, int>;

/// Laurent monomial in the variables Y_{k,a}.
class YMonomial {
 public:
  using Factor = std::pair<Site, int>;

  YMonomial() = default;
  /// Y_{k,a}^e
  static YMonomial Y(int k, Spectral a, int e = 1);
  static YMonomial from_map(const ExponentMap& exps);

  bool is_one() const { return factors_.empty(); }
  /// Factors sorted by (vertex, orbit, step), exponents nonzero.
  const std::vector<Factor>& factors() const { return factors_; }
  ExponentMap exponents() const;
  int exponent(const Site& s) const;

  /// No negative exponent anywhere.
  bool is_dominant() const;
  bool has_negative_at(int vertex) const;
  bool has_positive_at(int vertex) const;
  /// Strictly positive factors of colour k, in step order.
  std::vector<Factor> positive_part(int vertex) const;
  std::set<int> orbits() const;

  YMonomial inverse() const;
  YMonomial pow(int n) const;
  /// Adds n to every step.
  YMonomial shifted(int n) const;
  /// Applies f to every spectral point. f must be injective.
  YMonomial relocated(const std::function<Spectral(Spectral)>& f) const;

  YMonomial& operator*=(const YMonomial& o);
  friend YMonomial operator*(YMonomial a, const YMonomial& b) { return a *= b; }
  friend YMonomial operator/(YMonomial a, const YMonomial& b) { return a *= b.inverse(); }
  friend bool operator==(const YMonomial&, const YMonomial&) = default;
  friend auto operator<=>(const YMonomial& a, const YMonomial& b) { return a.factors_ <=> b.factors_; }

  /// "Y[1,2]^-1 Y[3,0]"; "1" for the empty monomial. With show_orbit the
  /// atoms read "Y[k,o:n]".
  std::string to_string(bool show_orbit = false) const;
  /// Inverse of to_string (either atom form).
  static YMonomial parse(const std::string& text);

  size_t hash() const;

 private:
  std::vector<Factor> factors_;
};

std::ostream& operator<<(std::ostream& os, const YMonomial& m);

/// A_{k,a} = Y_{k,a eps} Y_{k,a eps^-1} prod_{l ~ k} Y_{l,a}^{-1}.
YMonomial a_monomial(const DynkinDiagram& d, int k, Spectral a);

/// den * prod A_{k,a}^{-v_{k,a}}
YMonomial recompose(const DynkinDiagram& d, const YMonomial& den, const ExponentMap& v);

/// The unique v >= 0 with num = den * prod A^{-v}, or nullopt if none exists.
std::optional<ExponentMap> factor_ratio(const DynkinDiagram& d, const YMonomial& num,
                                        const YMonomial& den);

/// m <= m2 iff m = m2 * (a monomial in the A^{-1}).
bool leq(const DynkinDiagram& d, const YMonomial& m, const YMonomial& m2);

int total_degree(const ExponentMap& v);

/// u: exponents of m; v: factor_ratio(m, p); w: exponents of p.
struct UVW {
  ExponentMap u;
  ExponentMap v;
  ExponentMap w;
};

/// Throws NotComparable unless m <= p.
UVW uvw(const DynkinDiagram& d, const YMonomial& m, const YMonomial& p);

/// sum_{k,a} v1_{k,a} u2_{k,a eps^-1} + w1_{k,a eps} v2_{k,a}
int d_pair(const UVW& first, const UVW& second);
int d_pair(const DynkinDiagram& d, const YMonomial& m1, const YMonomial& p1, const YMonomial& m2,
           const YMonomial& p2);
int d_self(const DynkinDiagram& d, const YMonomial& m, const YMonomial& p);

}  // namespace qtchar

template <>
struct std::hash<qtchar::YMonomial> {
  size_t operator()(const qtchar::YMonomial& m) const noexcept { return m.hash(); }
};
