#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qtchar {

enum class Family { A, D, E };

/// Simply-laced Dynkin diagram with Bourbaki vertex numbering 1..rank.
///
///   A_n : 1 - 2 - ... - n
///   D_n : 1 - 2 - ... - (n-2), with n-1 and n both attached to n-2
///   E_n : 1 - 3 - 4 - 5 - ... - n, with 2 attached to 4
class DynkinDiagram {
 public:
  DynkinDiagram(Family family, int rank);

  /// Parses "A1", "A3", "D4", "E6", ...
  static DynkinDiagram parse(std::string_view name);

  Family family() const { return family_; }
  int rank() const { return rank_; }
  std::string name() const;

  bool has_vertex(int k) const { return k >= 1 && k <= rank_; }
  /// Throws InvalidInput for vertices outside 1..rank.
  void check_vertex(int k) const;

  const std::vector<int>& neighbors(int k) const;
  bool adjacent(int k, int l) const;
  /// Undirected edges (k, l) with k < l, sorted.
  std::vector<std::pair<int, int>> edges() const;

  friend bool operator==(const DynkinDiagram& a, const DynkinDiagram& b) {
    return a.family_ == b.family_ && a.rank_ == b.rank_;
  }

 private:
  Family family_;
  int rank_;
  std::vector<std::vector<int>> adj_;  // index 0 unused
};

int cartan_entry(const DynkinDiagram& d, int k, int l);

/// Full Cartan matrix, 0-based rows/columns.
std::vector<std::vector<int>> cartan_matrix(const DynkinDiagram& d);

/// Direction for every edge of the diagram; each pair means from -> to.
class Orientation {
 public:
  Orientation(const DynkinDiagram& d, std::vector<std::pair<int, int>> arrows);

  /// Every edge oriented from the smaller to the larger vertex index.
  static Orientation ascending(const DynkinDiagram& d);
  /// Parses "1>2,3>2"; an empty string is valid only for edgeless diagrams.
  static Orientation parse(const DynkinDiagram& d, std::string_view text);

  const std::vector<std::pair<int, int>>& arrows() const { return arrows_; }

 private:
  std::vector<std::pair<int, int>> arrows_;
};

/// m(k) indexed by vertex (index 0 unused).
using HeightFunction = std::vector<int>;

/// Solves m(k) - m(l) = 1 for every arrow k -> l, normalized to min m = 0.
HeightFunction heights(const DynkinDiagram& d, const Orientation& o);

/// Positive roots in simple-root coordinates (0-based), sorted by height.
std::vector<std::vector<int>> positive_roots(const DynkinDiagram& d);
std::vector<int> highest_root(const DynkinDiagram& d);

}  // namespace qtchar
