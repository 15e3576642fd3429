#pragma once

#include <atomic>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <utility>
#include <vector>

#include "qtchar/qcharacter.hpp"

namespace qtchar {

struct ExpandLimits {
  /// Hard cap on the number of distinct monomials any expansion may create.
  std::size_t max_monomials = 1'000'000;
};

/// Expands the colour-k strings anchored at m: with the strictly positive
/// colour-k part of m written as prod_i Y_{k,b_i}^{n_i}, returns
/// m * prod_i A_{k, b_i eps}^{-r_i} with weight prod_i t^{r_i(n_i-r_i)} [n_i r_i]_t
/// for every 0 <= r_i <= n_i.
std::map<YMonomial, TPoly> k_string_expansion(const DynkinDiagram& d, const YMonomial& m, int k);

/// t-analogue of the q-character of the module with l-highest monomial
/// `highest`, for modules whose character has no l-dominant monomial other
/// than the highest one (every l-fundamental module, among others).
///
/// Monomials are visited in increasing distance from the top. The table is
/// kept in the modified normalization: for each colour k the modified
/// character is a sum of colour-k strings, so a monomial with a negative
/// colour-k exponent has its coefficient fixed by the strings above it, and
/// any excess on a colour-k dominant monomial anchors new strings there. The
/// result is converted back by t^{-d(m, m_P)}.
///
/// Throws InconsistencyError when a second l-dominant monomial is reached,
/// when two colours disagree on a coefficient, or when a modified coefficient
/// is not a polynomial in t with nonzero constant term; CapExceeded when the
/// table outgrows `limits`.
QCharacter fm_expand(const DynkinDiagram& d, const YMonomial& highest, const ExpandLimits& limits = {});

/// Colored graph: an edge m1 -(k,a)-> m2 whenever m2 = m1 A_{k,a}^{-1}.
struct ColoredGraph {
  struct Vertex {
    YMonomial monomial;
    TPoly coefficient;
    int depth = 0;  // total A^{-1} degree below the highest monomial
  };
  struct Edge {
    std::size_t from = 0;
    std::size_t to = 0;
    int color = 0;
    Spectral at;
    friend auto operator<=>(const Edge&, const Edge&) = default;
  };

  std::vector<Vertex> vertices;  // sorted by (depth, monomial)
  std::vector<Edge> edges;       // sorted
};

enum class EdgeRule {
  /// Every pair with m2 = m1 A_{k,a}^{-1}.
  Ratio,
  /// Only pairs where m1 carries Y_{k, a eps^-1} with positive exponent, i.e.
  /// the step lowers a factor present in m1. This is the subgraph drawn in
  /// the published pictures of these characters.
  String,
};

ColoredGraph graph_of(const QCharacter& chi, EdgeRule rule = EdgeRule::Ratio);

/// Storage backend for FundamentalCache (e.g. a directory on disk).
class FundamentalStore {
 public:
  virtual ~FundamentalStore() = default;
  virtual std::optional<QCharacter> load(const DynkinDiagram& d, int node) = 0;
  virtual void save(const DynkinDiagram& d, int node, const QCharacter& chi) = 0;
};

/// Fundamental characters at the base point (orbit 0, step 0), computed once
/// per (diagram, node) and relocated on demand. Safe for concurrent use:
/// lookups take a shared lock; distinct keys may be computed in parallel.
class FundamentalCache {
 public:
  explicit FundamentalCache(ExpandLimits limits = {}, std::shared_ptr<FundamentalStore> store = nullptr);

  std::shared_ptr<const QCharacter> base(const DynkinDiagram& d, int node);
  /// chi_{q,t}(L(Lambda_node)_a).
  QCharacter at(const DynkinDiagram& d, int node, Spectral a);

  const ExpandLimits& limits() const { return limits_; }
  /// Number of fm_expand runs performed by this cache.
  std::size_t expansions() const;
  std::size_t store_hits() const;

 private:
  ExpandLimits limits_;
  std::shared_ptr<FundamentalStore> store_;
  mutable std::shared_mutex mutex_;
  std::map<std::pair<std::string, int>, std::shared_ptr<const QCharacter>> entries_;
  std::atomic<std::size_t> expansions_{0};
  std::atomic<std::size_t> store_hits_{0};
};

}  // namespace qtchar
