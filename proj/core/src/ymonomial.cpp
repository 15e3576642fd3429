#include "qtchar/ymonomial.hpp"

#include <algorithm>
#include <charconv>
#include <cctype>
#include <sstream>

#include "qtchar/error.hpp"

namespace qtchar {

YMonomial YMonomial::Y(int k, Spectral a, int e) {
  YMonomial m;
  if (e != 0) m.factors_.push_back({Site{k, a}, e});
  return m;
}

YMonomial YMonomial::from_map(const ExponentMap& exps) {
  YMonomial m;
  for (const auto& [site, e] : exps) {
    if (e != 0) m.factors_.push_back({site, e});
  }
  return m;
}

ExponentMap YMonomial::exponents() const { return ExponentMap(factors_.begin(), factors_.end()); }

int YMonomial::exponent(const Site& s) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), s,
                             [](const Factor& f, const Site& key) { return f.first < key; });
  return (it != factors_.end() && it->first == s) ? it->second : 0;
}

bool YMonomial::is_dominant() const {
  return std::all_of(factors_.begin(), factors_.end(), [](const Factor& f) { return f.second > 0; });
}

bool YMonomial::has_negative_at(int vertex) const {
  return std::any_of(factors_.begin(), factors_.end(),
                     [&](const Factor& f) { return f.first.vertex == vertex && f.second < 0; });
}

bool YMonomial::has_positive_at(int vertex) const {
  return std::any_of(factors_.begin(), factors_.end(),
                     [&](const Factor& f) { return f.first.vertex == vertex && f.second > 0; });
}

std::vector<YMonomial::Factor> YMonomial::positive_part(int vertex) const {
  std::vector<Factor> out;
  for (const auto& f : factors_) {
    if (f.first.vertex == vertex && f.second > 0) out.push_back(f);
  }
  return out;
}

std::set<int> YMonomial::orbits() const {
  std::set<int> out;
  for (const auto& f : factors_) out.insert(f.first.at.orbit);
  return out;
}

YMonomial YMonomial::inverse() const {
  YMonomial m = *this;
  for (auto& f : m.factors_) f.second = -f.second;
  return m;
}

YMonomial YMonomial::pow(int n) const {
  if (n == 0) return {};
  YMonomial m = *this;
  for (auto& f : m.factors_) f.second *= n;
  return m;
}

YMonomial YMonomial::shifted(int n) const {
  YMonomial m = *this;
  for (auto& f : m.factors_) f.first.at.step += n;
  return m;
}

YMonomial YMonomial::relocated(const std::function<Spectral(Spectral)>& f) const {
  ExponentMap exps;
  for (const auto& [site, e] : factors_) exps[Site{site.vertex, f(site.at)}] += e;
  return from_map(exps);
}

YMonomial& YMonomial::operator*=(const YMonomial& o) {
  if (o.factors_.empty()) return *this;
  std::vector<Factor> merged;
  merged.reserve(factors_.size() + o.factors_.size());
  auto a = factors_.begin();
  auto b = o.factors_.begin();
  while (a != factors_.end() || b != o.factors_.end()) {
    if (b == o.factors_.end() || (a != factors_.end() && a->first < b->first)) {
      merged.push_back(*a++);
    } else if (a == factors_.end() || b->first < a->first) {
      merged.push_back(*b++);
    } else {
      const int e = a->second + b->second;
      if (e != 0) merged.push_back({a->first, e});
      ++a;
      ++b;
    }
  }
  factors_ = std::move(merged);
  return *this;
}

std::string YMonomial::to_string(bool show_orbit) const {
  if (factors_.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [site, e] : factors_) {
    if (!first) os << ' ';
    first = false;
    os << "Y[" << site.vertex << ',';
    if (show_orbit) os << site.at.orbit << ':';
    os << site.at.step << ']';
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

namespace {

struct Cursor {
  const std::string& s;
  size_t pos = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw InvalidInput("bad monomial '" + s + "': " + what + " at offset " + std::to_string(pos));
  }
  void skip_space() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool done() {
    skip_space();
    return pos >= s.size();
  }
  void expect(char c) {
    if (pos >= s.size() || s[pos] != c) fail(std::string("expected '") + c + "'");
    ++pos;
  }
  bool accept(char c) {
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  int integer() {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data() + pos, s.data() + s.size(), v);
    if (ec != std::errc()) fail("expected integer");
    pos = static_cast<size_t>(ptr - s.data());
    return v;
  }
};

}  // namespace

YMonomial YMonomial::parse(const std::string& text) {
  Cursor c{text};
  if (c.done()) c.fail("empty");
  if (c.s[c.pos] == '1') {
    ++c.pos;
    if (!c.done()) c.fail("trailing input after 1");
    return {};
  }
  ExponentMap exps;
  while (!c.done()) {
    c.expect('Y');
    c.expect('[');
    const int k = c.integer();
    c.expect(',');
    Spectral at;
    int first = c.integer();
    if (c.accept(':')) {
      at.orbit = first;
      at.step = c.integer();
    } else {
      at.step = first;
    }
    c.expect(']');
    int e = 1;
    if (c.accept('^')) e = c.integer();
    exps[Site{k, at}] += e;
  }
  return from_map(exps);
}

size_t YMonomial::hash() const {
  size_t h = 0x9e3779b97f4a7c15ull;
  for (const auto& [site, e] : factors_) {
    for (int x : {site.vertex, site.at.orbit, site.at.step, e}) {
      h ^= std::hash<int>{}(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
  }
  return h;
}

std::ostream& operator<<(std::ostream& os, const YMonomial& m) { return os << m.to_string(); }

YMonomial a_monomial(const DynkinDiagram& d, int k, Spectral a) {
  d.check_vertex(k);
  ExponentMap e;
  e[Site{k, a.shifted(1)}] += 1;
  e[Site{k, a.shifted(-1)}] += 1;
  for (int l : d.neighbors(k)) e[Site{l, a}] -= 1;
  return YMonomial::from_map(e);
}

YMonomial recompose(const DynkinDiagram& d, const YMonomial& den, const ExponentMap& v) {
  YMonomial out = den;
  for (const auto& [site, n] : v) out *= a_monomial(d, site.vertex, site.at).pow(-n);
  return out;
}

std::optional<ExponentMap> factor_ratio(const DynkinDiagram& d, const YMonomial& num,
                                        const YMonomial& den) {
  const YMonomial ratio = num / den;
  for (const auto& [site, e] : ratio.factors()) d.check_vertex(site.vertex);

  // Group the ratio's exponents by orbit; each orbit is solved independently.
  std::map<int, std::map<int, std::vector<int>>> by_orbit;  // orbit -> step -> r[k-1]
  const size_t n = static_cast<size_t>(d.rank());
  for (const auto& [site, e] : ratio.factors()) {
    auto& row = by_orbit[site.at.orbit][site.at.step];
    if (row.empty()) row.assign(n, 0);
    row[static_cast<size_t>(site.vertex - 1)] = e;
  }

  ExponentMap v;
  for (const auto& [orbit, rows] : by_orbit) {
    const int lo = rows.begin()->first;
    const int hi = rows.rbegin()->first;
    // Exponent of Y_{k,s} in prod A^{-v} is -v_{k,s-1} - v_{k,s+1} + sum_{l~k} v_{l,s}.
    // Solved upward from v = 0 at steps <= lo.
    std::vector<int> prev(n, 0);  // v at step s-1
    std::vector<int> cur(n, 0);   // v at step s
    const std::vector<int> zero(n, 0);
    for (int s = lo; s <= hi; ++s) {
      auto it = rows.find(s);
      const std::vector<int>& r = it == rows.end() ? zero : it->second;
      std::vector<int> next(n, 0);
      for (int k = 1; k <= d.rank(); ++k) {
        const size_t i = static_cast<size_t>(k - 1);
        int val = -r[i] - prev[i];
        for (int l : d.neighbors(k)) val += cur[static_cast<size_t>(l - 1)];
        if (val < 0) return std::nullopt;
        next[i] = val;
        if (val > 0) v[Site{k, Spectral{orbit, s + 1}}] = val;
      }
      prev = std::move(cur);
      cur = std::move(next);
    }
    // After the last support step both v at hi and hi+1 must vanish.
    if (std::any_of(prev.begin(), prev.end(), [](int x) { return x != 0; }) ||
        std::any_of(cur.begin(), cur.end(), [](int x) { return x != 0; })) {
      return std::nullopt;
    }
  }
  return v;
}

bool leq(const DynkinDiagram& d, const YMonomial& m, const YMonomial& m2) {
  return factor_ratio(d, m, m2).has_value();
}

int total_degree(const ExponentMap& v) {
  int s = 0;
  for (const auto& [site, n] : v) s += n;
  return s;
}

UVW uvw(const DynkinDiagram& d, const YMonomial& m, const YMonomial& p) {
  auto v = factor_ratio(d, m, p);
  if (!v) throw NotComparable(m.to_string() + " is not <= " + p.to_string());
  return UVW{m.exponents(), std::move(*v), p.exponents()};
}

namespace {

int lookup(const ExponentMap& m, const Site& s) {
  auto it = m.find(s);
  return it == m.end() ? 0 : it->second;
}

}  // namespace

int d_pair(const UVW& first, const UVW& second) {
  int total = 0;
  for (const auto& [site, v1] : first.v) total += v1 * lookup(second.u, site.shifted(-1));
  for (const auto& [site, v2] : second.v) total += lookup(first.w, site.shifted(1)) * v2;
  return total;
}

int d_pair(const DynkinDiagram& d, const YMonomial& m1, const YMonomial& p1, const YMonomial& m2,
           const YMonomial& p2) {
  return d_pair(uvw(d, m1, p1), uvw(d, m2, p2));
}

int d_self(const DynkinDiagram& d, const YMonomial& m, const YMonomial& p) {
  const UVW x = uvw(d, m, p);
  return d_pair(x, x);
}

}  // namespace qtchar
