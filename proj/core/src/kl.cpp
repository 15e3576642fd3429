#include "qtchar/kl.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "qtchar/error.hpp"

namespace qtchar {

PolyMatrix PolyMatrix::identity(std::size_t n) {
  PolyMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = TPoly(1);
  return m;
}

PolyMatrix PolyMatrix::bar() const {
  PolyMatrix out(n_);
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = qtchar::bar(a_[i]);
  return out;
}

std::vector<std::vector<TPoly::Coeff>> PolyMatrix::at_one() const {
  std::vector<std::vector<TPoly::Coeff>> out(n_, std::vector<TPoly::Coeff>(n_));
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) out[i][j] = (*this)(i, j).eval_at_one();
  }
  return out;
}

bool PolyMatrix::is_upper_unitriangular() const {
  for (std::size_t i = 0; i < n_; ++i) {
    if ((*this)(i, i) != TPoly(1)) return false;
    for (std::size_t j = 0; j < i; ++j) {
      if (!(*this)(i, j).is_zero()) return false;
    }
  }
  return true;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.n_ != b.n_) throw InvalidInput("matrix size mismatch");
  PolyMatrix out(a.n_);
  for (std::size_t i = 0; i < a.n_; ++i) {
    for (std::size_t k = 0; k < a.n_; ++k) {
      const TPoly& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < a.n_; ++j) {
        if (!b(k, j).is_zero()) out(i, j) += x * b(k, j);
      }
    }
  }
  return out;
}

PolyMatrix unitriangular_inverse(const PolyMatrix& c) {
  if (!c.is_upper_unitriangular()) throw InvalidInput("unitriangular_inverse: matrix is not upper unitriangular");
  const std::size_t n = c.size();
  PolyMatrix inv = PolyMatrix::identity(n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = j; i-- > 0;) {
      TPoly s;
      for (std::size_t k = i + 1; k <= j; ++k) {
        if (!c(i, k).is_zero() && !inv(k, j).is_zero()) s += c(i, k) * inv(k, j);
      }
      inv(i, j) = -s;
    }
  }
  return inv;
}

std::optional<std::size_t> DominantPoset::index_of(const YMonomial& m) const {
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (elements[i] == m) return i;
  }
  return std::nullopt;
}

bool DominantPoset::leq(std::size_t i, std::size_t j) const {
  return qtchar::leq(diagram, elements.at(i), elements.at(j));
}

DominantPoset dominant_closure(const DynkinDiagram& d, const YMonomial& p, FundamentalCache& cache) {
  if (!p.is_dominant()) throw InvalidInput("dominant_closure: " + p.to_string() + " is not l-dominant");
  const std::size_t cap = cache.limits().max_monomials;
  std::map<YMonomial, QCharacter> found;
  std::deque<YMonomial> queue{p};
  std::set<YMonomial> seen{p};
  while (!queue.empty()) {
    YMonomial m = std::move(queue.front());
    queue.pop_front();
    QCharacter chi = standard_qchar(d, m, cache);
    if (chi.size() > cap) {
      throw CapExceeded("dominant_closure: standard character of " + m.to_string() + " has more than " +
                        std::to_string(cap) + " monomials");
    }
    for (const auto& [n, c] : chi.terms()) {
      if (n.is_dominant() && seen.insert(n).second) {
        if (seen.size() > cap) throw CapExceeded("dominant_closure: more than " + std::to_string(cap) + " elements");
        queue.push_back(n);
      }
    }
    found.emplace(std::move(m), std::move(chi));
  }

  std::vector<std::pair<int, YMonomial>> order;
  for (const auto& [m, chi] : found) {
    auto v = factor_ratio(d, m, p);
    if (!v) throw InconsistencyError("dominant_closure: " + m.to_string() + " is not below " + p.to_string());
    order.emplace_back(-total_degree(*v), m);
  }
  std::sort(order.begin(), order.end());

  DominantPoset poset{d, {}, {}};
  for (auto& [depth, m] : order) {
    poset.standard.push_back(std::move(found.at(m)));
    poset.elements.push_back(std::move(m));
  }
  return poset;
}

PolyMatrix c_matrix(const DominantPoset& poset) {
  const std::size_t n = poset.elements.size();
  PolyMatrix c(n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) c(i, j) = poset.standard[j].coefficient(poset.elements[i]);
  }
  if (!c.is_upper_unitriangular()) throw InconsistencyError("c_matrix: not upper unitriangular");
  return c;
}

PolyMatrix u_matrix(const PolyMatrix& c) { return unitriangular_inverse(c).bar() * c; }

PolyMatrix kl_solve(const PolyMatrix& u) {
  if (!u.is_upper_unitriangular()) throw InconsistencyError("kl_solve: u is not upper unitriangular");
  const std::size_t n = u.size();
  PolyMatrix z = PolyMatrix::identity(n);
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t r = 0; r < p; ++r) {
      TPoly g;
      for (std::size_t q = r; q < p; ++q) {
        if (!z(r, q).is_zero() && !u(q, p).is_zero()) g += bar(z(r, q)) * u(q, p);
      }
      if (g.coefficient(0) != 0 || bar(g) != -g) {
        throw InconsistencyError("kl_solve: no bar-invariant solution at (" + std::to_string(r) + ", " +
                                 std::to_string(p) + "), residue " + g.to_string());
      }
      z(r, p) = negative_part(g);
    }
  }
  return z;
}

KLTables kl_tables(const DynkinDiagram& d, const YMonomial& p, FundamentalCache& cache) {
  KLTables t{dominant_closure(d, p, cache), {}, {}, {}, {}};
  t.c = c_matrix(t.poset);
  t.c_inv = unitriangular_inverse(t.c);
  t.u = t.c_inv.bar() * t.c;
  t.z = kl_solve(t.u);
  return t;
}

TPoly::Coeff multiplicity(const DynkinDiagram& d, const YMonomial& p, const YMonomial& q,
                          FundamentalCache& cache) {
  const auto t = kl_tables(d, p, cache);
  const auto i = t.poset.index_of(q);
  if (!i) return 0;
  return t.z(*i, t.poset.top()).eval_at_one();
}

QCharacter simple_qchar_t1(const DynkinDiagram& d, const YMonomial& q, FundamentalCache& cache) {
  const auto t = kl_tables(d, q, cache);
  const std::size_t n = t.poset.elements.size();
  PolyMatrix z1(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) z1(i, j) = TPoly(t.z(i, j).eval_at_one());
  }
  const PolyMatrix w = unitriangular_inverse(z1);
  QCharacter out(d, q, {});
  for (std::size_t r = 0; r < n; ++r) {
    const TPoly& k = w(r, t.poset.top());
    if (k.is_zero()) continue;
    for (const auto& [m, c] : t.poset.standard[r].terms()) out.add(m, k * TPoly(c.eval_at_one()));
  }
  out.check_invariants();
  return out;
}

}  // namespace qtchar
