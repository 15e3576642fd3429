#include "qtchar/cartan.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <queue>
#include <set>

#include "qtchar/error.hpp"

namespace qtchar {

namespace {

void link(std::vector<std::vector<int>>& adj, int k, int l) {
  adj[k].push_back(l);
  adj[l].push_back(k);
}

}  // namespace

DynkinDiagram::DynkinDiagram(Family family, int rank)
    : family_(family), rank_(rank), adj_(static_cast<size_t>(rank) + 1) {
  switch (family) {
    case Family::A:
      if (rank < 1) throw InvalidInput("A_n requires n >= 1");
      for (int k = 1; k < rank; ++k) link(adj_, k, k + 1);
      break;
    case Family::D:
      if (rank < 4) throw InvalidInput("D_n requires n >= 4");
      for (int k = 1; k < rank - 2; ++k) link(adj_, k, k + 1);
      link(adj_, rank - 2, rank - 1);
      link(adj_, rank - 2, rank);
      break;
    case Family::E:
      if (rank < 6 || rank > 8) throw InvalidInput("E_n requires n in {6,7,8}");
      link(adj_, 1, 3);
      link(adj_, 2, 4);
      for (int k = 3; k < rank; ++k) link(adj_, k, k + 1);
      break;
  }
  for (auto& row : adj_) std::sort(row.begin(), row.end());
}

DynkinDiagram DynkinDiagram::parse(std::string_view name) {
  if (name.size() < 2) throw InvalidInput("bad diagram name '" + std::string(name) + "'");
  Family family;
  switch (name[0]) {
    case 'A': case 'a': family = Family::A; break;
    case 'D': case 'd': family = Family::D; break;
    case 'E': case 'e': family = Family::E; break;
    default:
      throw InvalidInput("unsupported diagram type '" + std::string(name) + "' (expected A, D or E)");
  }
  int rank = 0;
  const char* first = name.data() + 1;
  const char* last = name.data() + name.size();
  auto [ptr, ec] = std::from_chars(first, last, rank);
  if (ec != std::errc() || ptr != last) {
    throw InvalidInput("bad diagram rank in '" + std::string(name) + "'");
  }
  return DynkinDiagram(family, rank);
}

std::string DynkinDiagram::name() const {
  const char letter = family_ == Family::A ? 'A' : family_ == Family::D ? 'D' : 'E';
  return std::string(1, letter) + std::to_string(rank_);
}

void DynkinDiagram::check_vertex(int k) const {
  if (!has_vertex(k)) {
    throw InvalidInput("vertex " + std::to_string(k) + " is not a vertex of " + name());
  }
}

const std::vector<int>& DynkinDiagram::neighbors(int k) const {
  check_vertex(k);
  return adj_[static_cast<size_t>(k)];
}

bool DynkinDiagram::adjacent(int k, int l) const {
  const auto& n = neighbors(k);
  return std::binary_search(n.begin(), n.end(), l);
}

std::vector<std::pair<int, int>> DynkinDiagram::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int k = 1; k <= rank_; ++k) {
    for (int l : adj_[static_cast<size_t>(k)]) {
      if (k < l) out.emplace_back(k, l);
    }
  }
  return out;
}

int cartan_entry(const DynkinDiagram& d, int k, int l) {
  d.check_vertex(k);
  d.check_vertex(l);
  if (k == l) return 2;
  return d.adjacent(k, l) ? -1 : 0;
}

std::vector<std::vector<int>> cartan_matrix(const DynkinDiagram& d) {
  const int n = d.rank();
  std::vector<std::vector<int>> c(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
  for (int k = 1; k <= n; ++k) {
    for (int l = 1; l <= n; ++l) c[static_cast<size_t>(k - 1)][static_cast<size_t>(l - 1)] = cartan_entry(d, k, l);
  }
  return c;
}

Orientation::Orientation(const DynkinDiagram& d, std::vector<std::pair<int, int>> arrows)
    : arrows_(std::move(arrows)) {
  std::set<std::pair<int, int>> seen;
  for (auto [from, to] : arrows_) {
    d.check_vertex(from);
    d.check_vertex(to);
    if (!d.adjacent(from, to)) {
      throw InvalidInput("orientation arrow " + std::to_string(from) + ">" + std::to_string(to) +
                         " is not an edge of " + d.name());
    }
    if (!seen.insert(std::minmax(from, to)).second) {
      throw InvalidInput("edge " + std::to_string(from) + "-" + std::to_string(to) + " oriented twice");
    }
  }
  if (seen.size() != d.edges().size()) {
    throw InvalidInput("orientation must direct every edge of " + d.name());
  }
  std::sort(arrows_.begin(), arrows_.end());
}

Orientation Orientation::ascending(const DynkinDiagram& d) { return Orientation(d, d.edges()); }

Orientation Orientation::parse(const DynkinDiagram& d, std::string_view text) {
  std::vector<std::pair<int, int>> arrows;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view item = text.substr(pos, comma - pos);
    const size_t gt = item.find('>');
    int from = 0;
    int to = 0;
    if (gt == std::string_view::npos ||
        std::from_chars(item.data(), item.data() + gt, from).ptr != item.data() + gt ||
        std::from_chars(item.data() + gt + 1, item.data() + item.size(), to).ptr !=
            item.data() + item.size()) {
      throw InvalidInput("bad orientation arrow '" + std::string(item) + "' (expected k>l)");
    }
    arrows.emplace_back(from, to);
    pos = comma + 1;
  }
  return Orientation(d, std::move(arrows));
}

HeightFunction heights(const DynkinDiagram& d, const Orientation& o) {
  const int n = d.rank();
  // For each vertex, signed offsets to its neighbours: m(l) = m(k) + delta.
  std::vector<std::vector<std::pair<int, int>>> rel(static_cast<size_t>(n) + 1);
  for (auto [from, to] : o.arrows()) {
    rel[static_cast<size_t>(from)].emplace_back(to, -1);
    rel[static_cast<size_t>(to)].emplace_back(from, +1);
  }
  HeightFunction m(static_cast<size_t>(n) + 1, 0);
  std::vector<bool> done(static_cast<size_t>(n) + 1, false);
  std::queue<int> q;
  q.push(1);
  done[1] = true;
  while (!q.empty()) {
    const int k = q.front();
    q.pop();
    for (auto [l, delta] : rel[static_cast<size_t>(k)]) {
      if (done[static_cast<size_t>(l)]) continue;
      m[static_cast<size_t>(l)] = m[static_cast<size_t>(k)] + delta;
      done[static_cast<size_t>(l)] = true;
      q.push(l);
    }
  }
  const int low = *std::min_element(m.begin() + 1, m.end());
  for (size_t k = 1; k < m.size(); ++k) m[k] -= low;
  m[0] = 0;
  return m;
}

std::vector<std::vector<int>> positive_roots(const DynkinDiagram& d) {
  const auto c = cartan_matrix(d);
  const size_t n = c.size();
  std::set<std::vector<int>> roots;
  std::queue<std::vector<int>> q;
  for (size_t i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    roots.insert(e);
    q.push(e);
  }
  // Simply laced: beta + alpha_i is a root iff (beta, alpha_i) = -1.
  while (!q.empty()) {
    const auto beta = q.front();
    q.pop();
    for (size_t i = 0; i < n; ++i) {
      int pairing = 0;
      for (size_t j = 0; j < n; ++j) pairing += beta[j] * c[j][i];
      if (pairing != -1) continue;
      auto next = beta;
      ++next[i];
      if (roots.insert(next).second) q.push(next);
    }
  }
  std::vector<std::vector<int>> out(roots.begin(), roots.end());
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::accumulate(a.begin(), a.end(), 0) < std::accumulate(b.begin(), b.end(), 0);
  });
  return out;
}

std::vector<int> highest_root(const DynkinDiagram& d) { return positive_roots(d).back(); }

}  // namespace qtchar
